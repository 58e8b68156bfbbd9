#pragma once

// Numeric side of the library: explicit construction of hypergraph-structured
// pure states (one seeded random resource state per hyperedge, one seeded
// random local unitary per party), von Neumann block entropies, the
// sum-of-block-entropies measure, measure points, and the macro = R * micro
// decomposition check.
//
// The measure shipped here is the sum of base-2 von Neumann entropies of the
// partition's blocks.  On globally pure states it is additive over tensor
// products, invariant under local unitaries, reducible when a party is
// appended in a pure product factor, and symmetric under relabeling, which
// is exactly what the structural theory assumes of a measure.

#include "mems/hypergraph.hpp"
#include "mems/partitions.hpp"
#include "mems/reduction.hpp"
#include "mems/structure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace mems {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

// One tensor leg: its owning party, the hyperedge that created it (kNoEdge
// for flat per-party legs), and its local dimension.
struct Leg {
    std::size_t party;
    std::size_t edge;
    std::size_t dim;
};

// Mapping from (party, edge) factors to tensor legs.  Legs are edge-major,
// parties in edge order within each edge.
struct FactorLayout {
    Hypergraph hypergraph;
    std::vector<Leg> legs;
    std::size_t dimension_cap = std::size_t(1) << 14;

    std::size_t total_dimension() const {
        std::size_t d = 1;
        for (const auto& l : legs) d *= l.dim;
        return d;
    }

    // One factor of the given dimension per (party, edge) incidence.
    static FactorLayout uniform(const Hypergraph& h, std::size_t factor_dim = 2,
                                std::size_t cap = std::size_t(1) << 14) {
        if (factor_dim < 2) throw std::invalid_argument("factor dimension must be >= 2");
        if (h.edges.empty()) throw std::invalid_argument("no factors");
        FactorLayout layout;
        layout.hypergraph = h;
        layout.dimension_cap = cap;
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            for (const std::size_t v : h.edges[e]) layout.legs.push_back({v, e, factor_dim});
        if (layout.total_dimension() > cap)
            throw std::invalid_argument("dimension cap exceeded");
        return layout;
    }

    // Edge-free layout for the empty hypergraph: one trivial leg per party.
    // The resulting state is a product state with every measure zero.
    static FactorLayout trivial(const VertexSet& verts) {
        FactorLayout layout;
        layout.hypergraph = Hypergraph{verts, {}};
        for (std::size_t v = 0; v < verts.size(); ++v) layout.legs.push_back({v, kNoEdge, 1});
        return layout;
    }
};

struct PureState {
    VertexSet parties;
    std::vector<Leg> legs;  // leg order = amplitude digit order, leg 0 most significant
    CVector amplitudes;

    std::size_t dimension() const { return std::size_t(amplitudes.size()); }
};

// --- seeded sampling -------------------------------------------------------
// All randomness is drawn from raw mt19937_64 output so states are bit-for-
// bit reproducible across platforms; std distributions are deliberately
// avoided.

inline double uniform_unit(std::mt19937_64& rng) {
    return double((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
}

// One standard complex Gaussian per call via Box-Muller.
inline Complex complex_gaussian(std::mt19937_64& rng) {
    const double u1 = uniform_unit(rng);
    const double u2 = uniform_unit(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    return Complex(r * std::cos(theta), r * std::sin(theta)) * M_SQRT1_2;
}

inline CVector haar_pure_vector(std::size_t dim, std::mt19937_64& rng) {
    CVector v(static_cast<long>(dim));
    for (long i = 0; i < v.size(); ++i) v[i] = complex_gaussian(rng);
    v.normalize();
    return v;
}

// QR of a complex Gaussian matrix with the R diagonal's phases folded into Q
// makes Q Haar-distributed.
inline CMatrix haar_unitary(std::size_t dim, std::mt19937_64& rng) {
    CMatrix g(static_cast<long>(dim), static_cast<long>(dim));
    for (long i = 0; i < g.rows(); ++i)
        for (long j = 0; j < g.cols(); ++j) g(i, j) = complex_gaussian(rng);
    const Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (long j = 0; j < q.cols(); ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= (mag > 0) ? d / mag : Complex(1, 0);
    }
    return q;
}

// --- tensor index plumbing -------------------------------------------------

// Reshape the amplitude vector into a (selected legs) x (remaining legs)
// matrix; `sel` lists leg indices in the desired row-digit order.
inline CMatrix unfold(const PureState& s, const std::vector<std::size_t>& sel) {
    std::vector<bool> in_sel(s.legs.size(), false);
    for (const std::size_t l : sel) in_sel[l] = true;
    std::vector<std::size_t> rest;
    for (std::size_t l = 0; l < s.legs.size(); ++l)
        if (!in_sel[l]) rest.push_back(l);

    std::size_t da = 1, db = 1;
    for (const std::size_t l : sel) da *= s.legs[l].dim;
    for (const std::size_t l : rest) db *= s.legs[l].dim;

    // Per-leg digit strides in the flat amplitude index.
    std::vector<std::size_t> stride(s.legs.size(), 1);
    for (std::size_t l = s.legs.size(); l-- > 1;)
        stride[l - 1] = stride[l] * s.legs[l].dim;

    CMatrix m(static_cast<long>(da), static_cast<long>(db));
    std::vector<std::size_t> digit(s.legs.size());
    for (std::size_t g = 0; g < s.dimension(); ++g) {
        for (std::size_t l = 0; l < s.legs.size(); ++l)
            digit[l] = (g / stride[l]) % s.legs[l].dim;
        std::size_t a = 0, b = 0;
        for (const std::size_t l : sel) a = a * s.legs[l].dim + digit[l];
        for (const std::size_t l : rest) b = b * s.legs[l].dim + digit[l];
        m(long(a), long(b)) = s.amplitudes[long(g)];
    }
    return m;
}

// Apply a unitary across the given legs (row-digit order = `sel` order).
inline void apply_to_legs(PureState& s, const std::vector<std::size_t>& sel, const CMatrix& u) {
    std::vector<bool> in_sel(s.legs.size(), false);
    for (const std::size_t l : sel) in_sel[l] = true;
    std::vector<std::size_t> rest;
    for (std::size_t l = 0; l < s.legs.size(); ++l)
        if (!in_sel[l]) rest.push_back(l);

    CMatrix m = unfold(s, sel);
    m = u * m;

    std::vector<std::size_t> stride(s.legs.size(), 1);
    for (std::size_t l = s.legs.size(); l-- > 1;)
        stride[l - 1] = stride[l] * s.legs[l].dim;
    std::vector<std::size_t> digit(s.legs.size());
    for (std::size_t g = 0; g < s.dimension(); ++g) {
        for (std::size_t l = 0; l < s.legs.size(); ++l)
            digit[l] = (g / stride[l]) % s.legs[l].dim;
        std::size_t a = 0, b = 0;
        for (const std::size_t l : sel) a = a * s.legs[l].dim + digit[l];
        for (const std::size_t l : rest) b = b * s.legs[l].dim + digit[l];
        s.amplitudes[long(g)] = m(long(a), long(b));
    }
}

// --- state construction ----------------------------------------------------

struct SpernerSample {
    PureState state;                      // after the local unitaries
    std::vector<PureState> edge_states;   // the pre-unitary resource states
};

// One Haar-random pure state per hyperedge on that edge's factors, tensored
// in edge order, then one Haar-random unitary per party across the party's
// grouped legs.  Fully determined by (hypergraph, layout, seed).
inline SpernerSample sample_sperner_state(const Hypergraph& h, const FactorLayout& layout,
                                          std::uint64_t seed) {
    if (layout.hypergraph != h) throw std::invalid_argument("layout built for a different hypergraph");
    if (layout.total_dimension() > layout.dimension_cap)
        throw std::invalid_argument("dimension cap exceeded");
    if (h.edges.empty() && layout.legs.empty())
        throw std::invalid_argument("no factors");

    // The tensor assembly below relies on legs being edge-major with parties
    // in edge order; verify rather than assume.
    if (!h.edges.empty()) {
        std::size_t cursor = 0;
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            for (const std::size_t v : h.edges[e]) {
                if (cursor >= layout.legs.size() || layout.legs[cursor].party != v ||
                    layout.legs[cursor].edge != e)
                    throw std::invalid_argument("layout legs do not match the hypergraph");
                ++cursor;
            }
        }
        if (cursor != layout.legs.size())
            throw std::invalid_argument("layout legs do not match the hypergraph");
    }

    std::mt19937_64 rng(seed);
    SpernerSample sample;

    // Edge resource states, drawn in edge order.
    CVector amps = CVector::Ones(1);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const VertexSet ev = edge_vertex_set(h.vertices, h.edges[e]);
        std::size_t edge_dim = 1;
        std::vector<Leg> edge_legs;
        for (std::size_t l = 0; l < layout.legs.size(); ++l) {
            if (layout.legs[l].edge != e) continue;
            edge_dim *= layout.legs[l].dim;
            // Legs of the standalone edge state index the edge's own parties.
            const std::size_t local_party = ev.index_of(h.vertices.labels[layout.legs[l].party]);
            edge_legs.push_back({local_party, 0, layout.legs[l].dim});
        }
        const CVector edge_amp = haar_pure_vector(edge_dim, rng);
        sample.edge_states.push_back(PureState{ev, edge_legs, edge_amp});
        // kron(amps, edge_amp): earlier legs are more significant digits.
        CVector next(amps.size() * edge_amp.size());
        for (long i = 0; i < amps.size(); ++i)
            for (long j = 0; j < edge_amp.size(); ++j)
                next[i * edge_amp.size() + j] = amps[i] * edge_amp[j];
        amps = std::move(next);
    }
    if (h.edges.empty()) {
        amps = CVector::Zero(long(layout.total_dimension()));
        amps[0] = 1;
    }

    sample.state = PureState{h.vertices, layout.legs, std::move(amps)};

    // Local unitaries, drawn in party order.
    for (std::size_t p = 0; p < h.vertices.size(); ++p) {
        std::vector<std::size_t> sel;
        std::size_t dim = 1;
        for (std::size_t l = 0; l < layout.legs.size(); ++l) {
            if (layout.legs[l].party != p) continue;
            sel.push_back(l);
            dim *= layout.legs[l].dim;
        }
        if (sel.empty() || dim == 1) continue;
        apply_to_legs(sample.state, sel, haar_unitary(dim, rng));
    }
    return sample;
}

inline PureState build_sperner_state(const Hypergraph& h, const FactorLayout& layout,
                                     std::uint64_t seed) {
    return sample_sperner_state(h, layout, seed).state;
}

// --- entropies and measure points ------------------------------------------

// Base-2 von Neumann entropy of the reduced state on a block of parties.
// Eigenvalues come from the smaller of the two Gram matrices (identical
// nonzero spectra for a pure global state); negatives from roundoff are
// clipped and 0*log(0) is taken as 0.
inline double reduced_entropy(const PureState& s, const std::vector<std::size_t>& block) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::vector<bool> in_block(s.parties.size(), false);
    for (const std::size_t p : block) {
        if (p >= s.parties.size()) throw std::invalid_argument("block party out of range");
        in_block[p] = true;
    }
    if (std::size_t(std::count(in_block.begin(), in_block.end(), true)) == s.parties.size())
        throw std::invalid_argument("block must be a proper subset of the parties");

    std::vector<std::size_t> sel;
    std::size_t da = 1, db = 1;
    for (std::size_t l = 0; l < s.legs.size(); ++l) {
        if (in_block[s.legs[l].party]) {
            sel.push_back(l);
            da *= s.legs[l].dim;
        } else {
            db *= s.legs[l].dim;
        }
    }
    const CMatrix m = unfold(s, sel);
    const CMatrix gram = (da <= db) ? CMatrix(m * m.adjoint()) : CMatrix(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram, Eigen::EigenvaluesOnly);
    double entropy = 0;
    for (long i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lam = solver.eigenvalues()[i];
        if (lam > 0) entropy -= lam * std::log2(lam);
    }
    return entropy;
}

// The shipped measure: sum of block entropies of a nontrivial partition.
inline double measure_sum_entropy(const PureState& s, const Partition& pi) {
    if (pi.verts != s.parties) throw std::invalid_argument("partition over different parties");
    if (pi.trivial()) throw std::invalid_argument("measure undefined on the trivial partition");
    double total = 0;
    for (const auto& block : pi.blocks()) total += reduced_entropy(s, block);
    return total;
}

// Evaluate the measure on every nontrivial partition, in canonical order.
// Block entropies are cached per block across partitions.
inline MemsPoint mems_point(const PureState& s) {
    const PartitionIndex idx = PartitionIndex::build(s.parties);
    std::map<std::uint32_t, double> cache;
    const auto block_entropy = [&](const std::vector<std::size_t>& block) {
        std::uint32_t mask = 0;
        for (const std::size_t p : block) mask |= (1u << p);
        const auto it = cache.find(mask);
        if (it != cache.end()) return it->second;
        const double e = reduced_entropy(s, block);
        cache.emplace(mask, e);
        return e;
    };
    MemsPoint point{s.parties, {}};
    point.values.reserve(idx.size());
    for (const auto& pi : idx.order) {
        double total = 0;
        for (const auto& block : pi.blocks()) total += block_entropy(block);
        point.values.push_back(total);
    }
    return point;
}

// Max absolute difference between the macro measure vector of the assembled
// state and the reduction matrix applied to the micro measure vector of the
// pre-unitary edge states.
inline double verify_decomposition(const Hypergraph& h, const FactorLayout& layout,
                                   std::uint64_t seed) {
    const SpernerSample sample = sample_sperner_state(h, layout, seed);
    const ReductionMatrix red = build_reduction_matrix(h);

    std::vector<double> micro;
    micro.reserve(red.micro.size());
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const PartitionIndex edge_idx = PartitionIndex::build(sample.edge_states[e].parties);
        for (const auto& pi : edge_idx.order)
            micro.push_back(measure_sum_entropy(sample.edge_states[e], pi));
    }

    const MemsPoint macro = mems_point(sample.state);
    double worst = 0;
    for (std::size_t r = 0; r < red.matrix.rows(); ++r) {
        double predicted = 0;
        for (std::size_t c = 0; c < red.matrix.cols(); ++c)
            if (red.matrix.at(r, c) != 0)
                predicted += red.matrix.at(r, c).convert_to<double>() * micro[c];
        worst = std::max(worst, std::fabs(macro.values[r] - predicted));
    }
    return worst;
}

// Dot each signal row with the point's values.
inline std::vector<double> evaluate_signals(const SignalSet& sig, const MemsPoint& p) {
    if (sig.vertex_set != p.vertex_set || sig.coefficients.cols() != p.values.size())
        throw std::invalid_argument("signal/point dimension mismatch");
    std::vector<double> out;
    out.reserve(sig.coefficients.rows());
    for (std::size_t r = 0; r < sig.coefficients.rows(); ++r) {
        double dot = 0;
        for (std::size_t j = 0; j < sig.coefficients.cols(); ++j)
            if (sig.coefficients.at(r, j) != 0)
                dot += sig.coefficients.at(r, j).convert_to<double>() * p.values[j];
        out.push_back(dot);
    }
    return out;
}

// --- named states ----------------------------------------------------------

// (|0...0> + |1...1>)/sqrt(2) on n qubit parties.
inline PureState ghz_state(std::size_t n) {
    if (n < 2) throw std::invalid_argument("ghz needs >= 2 parties");
    PureState s;
    s.parties = VertexSet::standard(n);
    for (std::size_t p = 0; p < n; ++p) s.legs.push_back({p, kNoEdge, 2});
    s.amplitudes = CVector::Zero(long(1) << n);
    s.amplitudes[0] = M_SQRT1_2;
    s.amplitudes[(long(1) << n) - 1] = M_SQRT1_2;
    return s;
}

// |0...0> on n qubit parties: every measure value is zero.
inline PureState product_state(std::size_t n) {
    if (n < 2) throw std::invalid_argument("product needs >= 2 parties");
    PureState s;
    s.parties = VertexSet::standard(n);
    for (std::size_t p = 0; p < n; ++p) s.legs.push_back({p, kNoEdge, 2});
    s.amplitudes = CVector::Zero(long(1) << n);
    s.amplitudes[0] = 1;
    return s;
}

// Tensor product on disjoint party sets (for the additivity axiom check).
inline PureState tensor_product(const PureState& a, const PureState& b) {
    std::vector<std::string> names = a.parties.labels;
    for (const auto& l : b.parties.labels) {
        if (a.parties.contains(l)) throw std::invalid_argument("tensor_product: overlapping parties");
        names.push_back(l);
    }
    PureState s;
    s.parties = VertexSet(std::move(names));
    for (const auto& leg : a.legs)
        s.legs.push_back({s.parties.index_of(a.parties.labels[leg.party]), leg.edge, leg.dim});
    for (const auto& leg : b.legs)
        s.legs.push_back({s.parties.index_of(b.parties.labels[leg.party]), leg.edge, leg.dim});
    s.amplitudes = CVector(a.amplitudes.size() * b.amplitudes.size());
    for (long i = 0; i < a.amplitudes.size(); ++i)
        for (long j = 0; j < b.amplitudes.size(); ++j)
            s.amplitudes[i * b.amplitudes.size() + j] = a.amplitudes[i] * b.amplitudes[j];
    return s;
}

}  // namespace mems
