#pragma once

// Structure theory on top of the reduction matrices: indicator-vector
// subspaces (one per vertex subset), recovery of a hypergraph from its
// signal set, the witness function certifying that proper-subset subspaces
// never fill a subset's own subspace, k-sensitivity counting, point
// classification, and the join/meet span correspondence checks.

#include "mems/hypergraph.hpp"
#include "mems/matrix.hpp"
#include "mems/partitions.hpp"
#include "mems/reduction.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mems {

struct IndicatorVector {
    VertexSet subset;
    Partition sigma;                // partition of the subset (may be trivial)
    std::vector<Rational> values;   // over the canonical index of the full set
};

// values[pi] = 1 exactly when pi restricted to the subset equals sigma.
inline IndicatorVector indicator_vector(const VertexSet& subset, const Partition& sigma,
                                        const PartitionIndex& macro) {
    if (subset.size() < 2) throw std::invalid_argument("indicator subset must have >= 2 vertices");
    if (sigma.verts != subset) throw std::invalid_argument("sigma is not a partition of the subset");
    IndicatorVector out{subset, sigma, std::vector<Rational>(macro.size(), Rational(0))};
    for (std::size_t i = 0; i < macro.size(); ++i)
        if (restrict_partition(macro.order[i], subset) == sigma) out.values[i] = 1;
    return out;
}

struct SubspaceBasis {
    VertexSet subset;
    RationalMatrix matrix;  // columns = indicator vectors, sigma in canonical order
};

// Basis of the subset's indicator subspace: one column per nontrivial
// partition of the subset; dimension B_|S| - 1 (columns have disjoint
// supports, hence independent).
inline SubspaceBasis subspace_basis(const VertexSet& subset, const PartitionIndex& macro) {
    if (subset.size() < 2) throw std::invalid_argument("indicator subset must have >= 2 vertices");
    const auto sigmas = enumerate_nontrivial_partitions(subset);
    RationalMatrix m(macro.size(), sigmas.size());
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
        const IndicatorVector iv = indicator_vector(subset, sigmas[j], macro);
        for (std::size_t i = 0; i < macro.size(); ++i) m.at(i, j) = iv.values[i];
    }
    return SubspaceBasis{subset, std::move(m)};
}

// Recover the hypergraph whose class produced a signal set: collect every
// subset S (|S| >= 2) all of whose indicator vectors are annihilated by all
// signal rows, then keep the inclusion-maximal ones.  An empty signal set
// yields the single full edge; an empty collection yields the empty graph.
inline Hypergraph recover_hypergraph(const SignalSet& sig) {
    const VertexSet& verts = sig.vertex_set;
    const std::size_t n = verts.size();
    if (n < 2) throw std::invalid_argument("recovery needs >= 2 vertices");
    if (sig.coefficients.rows() > 0 && sig.coefficients.cols() != sig.macro.size())
        throw std::invalid_argument("signal dimension mismatch");

    std::vector<Edge> annihilated;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Edge s;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        if (s.size() < 2) continue;
        const VertexSet sub = edge_vertex_set(verts, s);
        const PartitionIndex sub_idx = PartitionIndex::build(sub);

        // Bucket each global partition by its restriction to s (-1 = trivial).
        std::vector<long> bucket(sig.macro.size(), -1);
        for (std::size_t i = 0; i < sig.macro.size(); ++i) {
            const Partition rho = restrict_partition(sig.macro.order[i], sub);
            if (!rho.trivial()) bucket[i] = long(sub_idx.position(rho));
        }
        bool ok = true;
        for (std::size_t r = 0; ok && r < sig.coefficients.rows(); ++r) {
            std::vector<Rational> sums(sub_idx.size(), Rational(0));
            for (std::size_t i = 0; i < sig.macro.size(); ++i)
                if (bucket[i] >= 0) sums[std::size_t(bucket[i])] += sig.coefficients.at(r, i);
            for (const auto& x : sums)
                if (x != 0) { ok = false; break; }
        }
        if (ok) annihilated.push_back(std::move(s));
    }
    return antichain_normalize(verts, std::move(annihilated));
}

// w(pi) = (-1)^(|S| - blocks(pi)) * (blocks(pi) - 1)!, over the canonical
// index of the subset's own partitions.  Summing w over any proper-subset
// indicator's support gives exactly zero, which certifies that the proper
// subsets' subspaces span strictly less than the subset's own.
inline std::vector<Int> witness(const VertexSet& subset) {
    if (subset.size() < 3) throw std::invalid_argument("witness needs >= 3 vertices");
    const auto parts = enumerate_nontrivial_partitions(subset);
    std::vector<Int> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
        const std::size_t b = p.block_count();
        Int fact = 1;
        for (std::size_t i = 2; i < b; ++i) fact *= Int(i);
        const bool negative = ((subset.size() - b) % 2) != 0;
        out.push_back(negative ? -fact : fact);
    }
    return out;
}

inline Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

// Number of independent signals lost when passing from the (k-1)- to the
// k-uniform-complete class on n vertices:
// C(n,k) * sum_{j=0..k} (-1)^j C(k,j) B_{k-j}.
inline Int count_sensitive(std::size_t n, std::size_t k) {
    if (k < 2 || k > n) throw std::invalid_argument("count_sensitive: k out of range");
    Int inner = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        const Int term = binomial(k, j) * bell_number(k - j);
        inner += (j % 2 == 0) ? term : -term;
    }
    return binomial(n, k) * inner;
}

struct MemsPoint {
    VertexSet vertex_set;
    std::vector<double> values;  // canonical index order
};

// All dominance-minimal antichain hypergraphs whose entire signal set
// vanishes on the point within the tolerance.  Guarded at |V| <= 5 because
// it enumerates every antichain.
inline std::vector<Hypergraph> classify_point(const MemsPoint& p, double tol = 1e-9) {
    if (tol < 0) throw std::invalid_argument("negative tolerance");
    if (p.vertex_set.size() > 5) throw std::invalid_argument("enumeration limit");
    const PartitionIndex macro = PartitionIndex::build(p.vertex_set);
    if (p.values.size() != macro.size()) throw std::invalid_argument("point dimension mismatch");

    std::vector<Hypergraph> qualifying;
    enumerate_antichains(p.vertex_set, [&](const Hypergraph& h) {
        const SignalSet sig = signals(h);
        for (std::size_t r = 0; r < sig.coefficients.rows(); ++r) {
            double dot = 0;
            for (std::size_t j = 0; j < macro.size(); ++j)
                dot += sig.coefficients.at(r, j).convert_to<double>() * p.values[j];
            if (std::fabs(dot) > tol) return;
        }
        qualifying.push_back(h);
    });

    std::vector<Hypergraph> minimal;
    for (const auto& h : qualifying) {
        bool is_minimal = true;
        for (const auto& other : qualifying) {
            if (other == h) continue;
            if (dominates(h, other)) { is_minimal = false; break; }
        }
        if (is_minimal) minimal.push_back(h);
    }
    return minimal;
}

struct LatticeReport {
    bool join_identity = false;  // col span R(a v b) = combined col spans
    bool meet_identity = false;  // col span R(a ^ b) = intersection of col spans
    bool passed() const { return join_identity && meet_identity; }
};

// The two span identities tying the hypergraph lattice to the subspace
// lattice: the join's column span is the sum of the operands' column spans,
// and the meet's column span is their intersection.
inline LatticeReport verify_lattice_correspondence(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertices != b.vertices)
        throw std::invalid_argument("verify_lattice_correspondence: vertex set mismatch");
    const RationalMatrix ra = build_reduction_matrix(a).matrix;
    const RationalMatrix rb = build_reduction_matrix(b).matrix;
    const RationalMatrix rj = build_reduction_matrix(join(a, b)).matrix;
    const RationalMatrix rm = build_reduction_matrix(meet(a, b)).matrix;
    LatticeReport report;
    report.join_identity = same_span(rj, hstack(ra, rb));
    report.meet_identity = same_span(rm, span_intersection(ra, rb));
    return report;
}

}  // namespace mems
