#pragma once

// The partition-reduction matrix of an antichain hypergraph: rows indexed by
// the nontrivial partitions of the whole vertex set, columns by pairs
// (edge, nontrivial partition of that edge), entry 1 exactly when the global
// partition restricted to the edge equals the column's partition.  Its rank
// (computable either by elimination or by an inclusion-exclusion formula
// over edge subsets) fixes the dimension of the class's subspace, and the
// canonical basis of its left nullspace is the class's signal set.

#include "mems/hypergraph.hpp"
#include "mems/matrix.hpp"
#include "mems/partitions.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mems {

// Column index: edges in hypergraph order, partitions in canonical order
// within each edge.
struct MicroIndex {
    struct Entry {
        std::size_t edge;     // index into the hypergraph's edge list
        Partition partition;  // nontrivial partition of that edge
    };
    std::vector<Entry> entries;
    std::size_t size() const { return entries.size(); }
};

struct ReductionMatrix {
    Hypergraph hypergraph;
    PartitionIndex macro;
    MicroIndex micro;
    RationalMatrix matrix;  // 0/1 entries
};

inline std::string micro_label(const VertexSet& verts, const Hypergraph& h,
                               const MicroIndex::Entry& entry) {
    return edge_label(verts, h.edges[entry.edge]) + ":" + format_partition(entry.partition);
}

inline ReductionMatrix build_reduction_matrix(const Hypergraph& h) {
    ReductionMatrix out;
    out.hypergraph = h;
    out.macro = PartitionIndex::build(h.vertices);

    // Per-edge partition indices, plus global column offsets.
    std::vector<PartitionIndex> edge_indices;
    std::vector<std::size_t> offsets;
    std::size_t cols = 0;
    for (const auto& e : h.edges) {
        edge_indices.push_back(PartitionIndex::build(edge_vertex_set(h.vertices, e)));
        offsets.push_back(cols);
        cols += edge_indices.back().size();
        for (const auto& p : edge_indices.back().order)
            out.micro.entries.push_back({offsets.size() - 1, p});
    }

    out.matrix = RationalMatrix(out.macro.size(), cols);
    for (std::size_t r = 0; r < out.macro.size(); ++r) {
        const Partition& pi = out.macro.order[r];
        for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
            const Partition rho = restrict_partition(pi, edge_indices[ei].verts);
            if (rho.trivial()) continue;  // no matching micro column
            out.matrix.at(r, offsets[ei] + edge_indices[ei].position(rho)) = 1;
        }
    }

    out.matrix.row_labels.reserve(out.macro.size());
    for (const auto& p : out.macro.order) out.matrix.row_labels.push_back(format_partition(p));
    out.matrix.col_labels.reserve(out.micro.size());
    for (const auto& entry : out.micro.entries)
        out.matrix.col_labels.push_back(micro_label(h.vertices, h, entry));
    return out;
}

inline std::size_t rank_by_matrix(const Hypergraph& h) {
    return rank(build_reduction_matrix(h).matrix);
}

// Inclusion-exclusion rank: sum over nonempty edge subsets F of
// (-1)^(|F|+1) * (B_k - 1) where k is the size of the common intersection
// of F.  B_0 - 1 = 0 and B_1 - 1 = 0, so branches whose running intersection
// drops below two vertices contribute nothing and are pruned.
inline std::size_t rank_by_formula(const Hypergraph& h) {
    const std::size_t n = h.vertices.size();
    std::vector<Int> bell(n + 1);
    for (std::size_t i = 0; i <= n; ++i) bell[i] = bell_number(i);

    std::vector<std::uint64_t> masks;
    masks.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::uint64_t m = 0;
        for (const std::size_t v : e) m |= (std::uint64_t(1) << v);
        masks.push_back(m);
    }

    Int total = 0;
    const auto rec = [&](auto&& self, std::size_t start, std::uint64_t inter,
                         bool odd) -> void {
        for (std::size_t i = start; i < masks.size(); ++i) {
            const std::uint64_t next = inter & masks[i];
            const int k = __builtin_popcountll(next);
            if (k < 2) continue;  // this term and all refinements vanish
            const Int term = bell[std::size_t(k)] - 1;
            total += odd ? term : Int(-term);
            self(self, i + 1, next, !odd);
        }
    };
    rec(rec, 0, ~std::uint64_t(0), true);
    return std::size_t(total.convert_to<std::uint64_t>());
}

// Canonical basis of integer-coefficient functionals annihilating the
// reduction matrix from the left.
struct SignalSet {
    VertexSet vertex_set;
    PartitionIndex macro;
    RationalMatrix coefficients;  // integer entries, canonical form

    std::size_t count() const { return coefficients.rows(); }
};

// Scale each rref row to coprime integers.  The rref leading coefficient is
// +1, so the first nonzero entry stays positive.
inline RationalMatrix integer_normalize_rows(const RationalMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            scale = boost::multiprecision::lcm(scale,
                                               boost::multiprecision::denominator(m.at(i, j)));
        Int g = 0;
        std::vector<Int> nums(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& q = m.at(i, j);
            nums[j] = boost::multiprecision::numerator(q) *
                      (scale / boost::multiprecision::denominator(q));
            if (nums[j] != 0) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(nums[j]));
        }
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = (g > 1) ? Rational(nums[j] / g) : Rational(nums[j]);
    }
    return out;
}

inline SignalSet signals(const Hypergraph& h) {
    const ReductionMatrix red = build_reduction_matrix(h);
    SignalSet out;
    out.vertex_set = h.vertices;
    out.macro = red.macro;
    out.coefficients = integer_normalize_rows(left_nullspace(red.matrix));
    return out;
}

// Render one signal row, e.g. "E2(AB|C) + E2(AC|B) + E2(A|BC) - 2*E3(A|B|C) = 0".
// Terms appear in index order with zero coefficients omitted; the E suffix is
// the block count of the partition.
inline std::string signal_to_text(const RationalMatrix& coeffs, std::size_t row,
                                  const PartitionIndex& idx) {
    if (coeffs.cols() != idx.size()) throw std::invalid_argument("signal dimension mismatch");
    std::string out;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const Rational& c = coeffs.at(row, j);
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        if (mag != 1) out += to_string(mag) + "*";
        out += "E" + std::to_string(idx.order[j].block_count()) + "(" +
               format_partition(idx.order[j]) + ")";
    }
    if (out.empty()) return "0 = 0";
    return out + " = 0";
}

}  // namespace mems
