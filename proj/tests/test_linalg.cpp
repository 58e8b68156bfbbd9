#include <catch2/catch_amalgamated.hpp>

#include "mems/matrix.hpp"
#include "mems/rational.hpp"
#include "oracles.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

using namespace mems;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::vector<std::vector<oracles::Rat>> to_oracle(const RationalMatrix& m) {
    std::vector<std::vector<oracles::Rat>> out(m.rows(), std::vector<oracles::Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
    return out;
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = int(rng() % 9) - 4;
    return m;
}

RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.at(i, k) != 0)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
    return out;
}

bool is_zero(const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("rref produces leading-one pivots with zero rows last") {
    const auto [r, pivots] = rref(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
    REQUIRE(pivots == std::vector<std::size_t>{0, 1});
    REQUIRE(r == from_rows({{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
}

TEST_CASE("rank agrees with the plain rational elimination oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const RationalMatrix m = random_matrix(5, 7, rng);
        REQUIRE(rank(m) == oracles::rational_rank(to_oracle(m)));
    }
    // Engineered rank deficiency via low-rank products.
    for (int trial = 0; trial < 20; ++trial) {
        const RationalMatrix m = product(random_matrix(6, 2, rng), random_matrix(2, 8, rng));
        const std::size_t r = rank(m);
        REQUIRE(r == oracles::rational_rank(to_oracle(m)));
        REQUIRE(r <= 2);
    }
}

TEST_CASE("rank handles rational entries and degenerate shapes") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(3, 2);
    m.at(1, 1) = 1;
    REQUIRE(rank(m) == 1);
    REQUIRE(rank(RationalMatrix(0, 5)) == 0);
    REQUIRE(rank(RationalMatrix(5, 0)) == 0);
    REQUIRE(rank(RationalMatrix::identity(4)) == 4);
}

TEST_CASE("kernel columns are exact null vectors spanning the full nullspace") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        const RationalMatrix m = random_matrix(4, 7, rng);
        const RationalMatrix k = kernel(m);
        REQUIRE(k.cols() == m.cols() - rank(m));
        REQUIRE(is_zero(product(m, k)));
        REQUIRE(rank(k) == k.cols());
    }
}

TEST_CASE("left nullspace rows annihilate the matrix from the left") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const RationalMatrix m = random_matrix(6, 4, rng);
        const RationalMatrix l = left_nullspace(m);
        REQUIRE(l.rows() == m.rows() - rank(m));
        REQUIRE(is_zero(product(l, m)));
    }
}

TEST_CASE("in_span decides column membership") {
    const RationalMatrix m = from_rows({{1, 0}, {0, 1}, {1, 1}});
    REQUIRE(in_span({1, 2, 3}, m));         // 1*c0 + 2*c1
    REQUIRE_FALSE(in_span({1, 0, 0}, m));   // breaks the third coordinate
    REQUIRE(in_span({0, 0, 0}, m));
    REQUIRE_THROWS_AS(in_span({1, 2}, m), std::invalid_argument);
}

TEST_CASE("same_span is invariant under column scaling, permutation, and mixing") {
    const RationalMatrix a = from_rows({{1, 0}, {0, 1}, {2, 3}});
    const RationalMatrix b = from_rows({{0, -2}, {5, 0}, {15, -4}});   // swapped and scaled
    const RationalMatrix c = from_rows({{1, 1}, {1, -1}, {5, -1}});    // mixed columns
    const RationalMatrix d = from_rows({{1, 0}, {0, 1}, {0, 0}});
    REQUIRE(same_span(a, b));
    REQUIRE(same_span(a, c));
    REQUIRE_FALSE(same_span(a, d));
    REQUIRE_THROWS_AS(same_span(a, from_rows({{1, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("span_intersection returns the exact common subspace") {
    // Two planes in R^3 meeting in the line through (1,1,1).
    const RationalMatrix a = from_rows({{1, 0}, {0, 1}, {1, 0}});   // span{e0+e2, e1}
    const RationalMatrix b = from_rows({{1, 0}, {0, 1}, {0, 1}});   // span{e0, e1+e2}
    const RationalMatrix x = span_intersection(a, b);
    REQUIRE(x.cols() == 1);
    REQUIRE(x.at(0, 0) == x.at(1, 0));
    REQUIRE(x.at(1, 0) == x.at(2, 0));
    REQUIRE(x.at(0, 0) != 0);

    // Disjoint spans intersect in the zero subspace.
    const RationalMatrix e0 = from_rows({{1}, {0}, {0}});
    const RationalMatrix e1 = from_rows({{0}, {1}, {0}});
    REQUIRE(span_intersection(e0, e1).cols() == 0);
}

TEST_CASE("span_intersection satisfies the dimension identity on random pairs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalMatrix a = random_matrix(6, 3, rng);
        const RationalMatrix b = random_matrix(6, 3, rng);
        const RationalMatrix x = span_intersection(a, b);
        REQUIRE(x.cols() == rank(a) + rank(b) - rank(hstack(a, b)));
        for (std::size_t c = 0; c < x.cols(); ++c) {
            std::vector<Rational> v(x.rows());
            for (std::size_t i = 0; i < x.rows(); ++i) v[i] = x.at(i, c);
            REQUIRE(in_span(v, a));
            REQUIRE(in_span(v, b));
        }
    }
}

TEST_CASE("stacking helpers validate shapes") {
    const RationalMatrix a = from_rows({{1, 2}, {3, 4}});
    const RationalMatrix b = from_rows({{5}, {6}});
    REQUIRE(hstack(a, b) == from_rows({{1, 2, 5}, {3, 4, 6}}));
    REQUIRE(vstack(a, from_rows({{7, 8}})) == from_rows({{1, 2}, {3, 4}, {7, 8}}));
    REQUIRE_THROWS_AS(hstack(a, from_rows({{1, 2}})), std::invalid_argument);
    REQUIRE_THROWS_AS(vstack(a, b), std::invalid_argument);
}

TEST_CASE("rational text form parses and prints canonically") {
    REQUIRE(parse_rational("3/4") == Rational(3, 4));
    REQUIRE(parse_rational("-5") == Rational(-5));
    REQUIRE(parse_rational("4/6") == Rational(2, 3));
    REQUIRE(to_string(Rational(2, 3)) == "2/3");
    REQUIRE(to_string(Rational(7, 1)) == "7");
    REQUIRE(to_string(Rational(-1, 2)) == "-1/2");
    REQUIRE(to_string(Rational(0)) == "0");
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational(""), std::invalid_argument);
}
