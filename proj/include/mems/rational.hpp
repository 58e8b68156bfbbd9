#pragma once

// Exact scalar types: arbitrary-precision integers and rationals.
// All structural computation in the library is exact; floating point
// appears only in the quantum simulation layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mems {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Render a rational as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parse "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {  // the constructor needs a positive denominator
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

}  // namespace mems
