#pragma once

// Golden reference data for the two n=4 uniform-complete classes and the
// triangle: the externally tabulated reduction matrices in their original
// row/column order, the accompanying linear equalities, and the triangle
// signal.  The implementation must reproduce all of it exactly; the checks
// here report the first differing entry by row/column label.
//
// The reference tables keep their own historical row order and spellings
// (e.g. "B|ACD" for the canonical "ACD|B"); comparisons map both sides
// through the canonical index, so the stored data never needs reordering.

#include "mems/hypergraph.hpp"
#include "mems/matrix.hpp"
#include "mems/partitions.hpp"
#include "mems/reduction.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mems::fixtures {

struct ReferenceTable {
    // Row labels in reference spellings; parsed with normalization.
    std::vector<std::string> row_labels;
    // Column key: (edge label, partition-of-edge spelling).
    std::vector<std::pair<std::string, std::string>> columns;
    // 0/1 entries, one '0'/'1' string per row.
    std::vector<std::string> bits;
};

inline const std::vector<std::string>& reference_row_labels() {
    static const std::vector<std::string> rows{
        "ABC|D", "ABD|C", "AB|CD", "AB|C|D", "B|ACD", "AC|BD", "AC|B|D",
        "AD|BC", "A|BCD", "BC|A|D", "AD|B|C", "BD|A|C", "CD|A|B", "A|B|C|D"};
    return rows;
}

inline const ReferenceTable& reference_table_3uniform() {
    static const ReferenceTable table{
        reference_row_labels(),
        {{"ABC", "C|AB"}, {"ABC", "B|AC"}, {"ABC", "A|BC"}, {"ABC", "A|B|C"},
         {"ABD", "D|AB"}, {"ABD", "B|AD"}, {"ABD", "A|BD"}, {"ABD", "A|B|D"},
         {"ACD", "D|AC"}, {"ACD", "C|AD"}, {"ACD", "A|CD"}, {"ACD", "A|C|D"},
         {"BCD", "D|BC"}, {"BCD", "C|BD"}, {"BCD", "B|CD"}, {"BCD", "B|C|D"}},
        {"0000100010001000",
         "1000000001000100",
         "1000100000100010",
         "1000100000010001",
         "0100010000000010",
         "0100001010000100",
         "0100000110000001",
         "0010010001001000",
         "0010001000100000",
         "0010000100011000",
         "0001010001000001",
         "0001001000010100",
         "0001000100100010",
         "0001000100010001"}};
    return table;
}

inline const ReferenceTable& reference_table_2uniform() {
    static const ReferenceTable table{
        reference_row_labels(),
        {{"AB", "A|B"}, {"AC", "A|C"}, {"AD", "A|D"}, {"BC", "B|C"}, {"BD", "B|D"}, {"CD", "C|D"}},
        {"001011", "010101", "011110", "011111", "100110", "101101", "101111",
         "110011", "111000", "111011", "110111", "111101", "111110", "111111"}};
    return table;
}

// A linear equality as (reference partition spelling, integer coefficient)
// terms; the right-hand side is zero.
using ReferenceEquality = std::vector<std::pair<std::string, int>>;

// Equalities that cut out the 3-uniform-complete class on four vertices.
inline const std::vector<ReferenceEquality>& reference_equalities_3uniform() {
    static const std::vector<ReferenceEquality> eqs{
        {{"A|BCD", 1}, {"B|ACD", 1}, {"ABD|C", 1}, {"ABC|D", 1},
         {"AB|CD", -1}, {"AC|BD", -1}, {"AD|BC", -1}},
        {{"A|B|C|D", 3}, {"AB|C|D", -1}, {"AC|B|D", -1}, {"AD|B|C", -1}, {"BC|A|D", -1},
         {"BD|A|C", -1}, {"CD|A|B", -1}, {"AB|CD", 1}, {"AC|BD", 1}, {"AD|BC", 1}},
        {{"AD|B|C", 1}, {"BC|A|D", 1}, {"AB|C|D", -1}, {"CD|A|B", -1},
         {"AB|CD", 1}, {"AD|BC", -1}},
        {{"AD|B|C", 1}, {"BC|A|D", 1}, {"AC|B|D", -1}, {"BD|A|C", -1},
         {"AC|BD", 1}, {"AD|BC", -1}},
    };
    return eqs;
}

// Equalities for the 2-uniform-complete class: the four above plus four more.
inline const std::vector<ReferenceEquality>& reference_equalities_2uniform() {
    static const std::vector<ReferenceEquality> eqs = [] {
        std::vector<ReferenceEquality> all = reference_equalities_3uniform();
        all.push_back({{"A|B|C|D", 48}, {"AB|C|D", 10}, {"AC|B|D", 10}, {"AD|B|C", 10},
                       {"BC|A|D", 10}, {"BD|A|C", 10}, {"CD|A|B", 10},
                       {"AB|CD", -28}, {"AC|BD", -28}, {"AD|BC", -28},
                       {"A|BCD", -21}, {"B|ACD", -21}, {"ABD|C", -21}, {"ABC|D", -21}});
        all.push_back({{"BD|A|C", 1}, {"CD|A|B", 1}, {"AB|C|D", -1}, {"AC|B|D", -1},
                       {"A|BCD", -1}, {"ABC|D", 1}});
        all.push_back({{"AD|B|C", 1}, {"BD|A|C", 1}, {"AC|B|D", -1}, {"BC|A|D", -1},
                       {"ABD|C", -1}, {"ABC|D", 1}});
        all.push_back({{"BC|A|D", 1}, {"BD|A|C", 1}, {"AC|B|D", -1}, {"AD|B|C", -1},
                       {"A|BCD", -1}, {"B|ACD", 1}});
        return all;
    }();
    return eqs;
}

// The triangle's single signal in its reference spelling.
inline const ReferenceEquality& reference_triangle_signal() {
    static const ReferenceEquality eq{{"A|B|C", 2}, {"A|BC", -1}, {"B|AC", -1}, {"C|AB", -1}};
    return eq;
}

// --- comparison helpers ------------------------------------------------------

// Compare a built reduction matrix against a reference table entry-by-entry
// under the label mapping.  Returns "" on success, otherwise a description
// of the first differing entry naming its row and column labels.
inline std::string compare_to_reference(const ReductionMatrix& red, const ReferenceTable& table) {
    const VertexSet& verts = red.hypergraph.vertices;
    // Column offsets per edge in the built matrix.
    std::map<std::string, std::size_t> edge_index;
    for (std::size_t e = 0; e < red.hypergraph.edges.size(); ++e)
        edge_index[edge_label(verts, red.hypergraph.edges[e])] = e;
    std::vector<std::size_t> offsets(red.hypergraph.edges.size(), 0);
    std::vector<PartitionIndex> edge_partitions;
    {
        std::size_t col = 0;
        for (std::size_t e = 0; e < red.hypergraph.edges.size(); ++e) {
            offsets[e] = col;
            edge_partitions.push_back(
                PartitionIndex::build(edge_vertex_set(verts, red.hypergraph.edges[e])));
            col += edge_partitions.back().size();
        }
        if (col != red.matrix.cols()) return "column count mismatch";
    }
    if (table.row_labels.size() != red.matrix.rows()) return "row count mismatch";
    if (table.columns.size() != red.matrix.cols()) return "column count mismatch";

    for (std::size_t i = 0; i < table.row_labels.size(); ++i) {
        const Partition row_part = parse_partition(table.row_labels[i], verts, /*normalize=*/true);
        const std::size_t r = red.macro.position(row_part);
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            const auto it = edge_index.find(table.columns[j].first);
            if (it == edge_index.end()) return "unknown edge " + table.columns[j].first;
            const std::size_t e = it->second;
            const Partition col_part =
                parse_partition(table.columns[j].second, edge_partitions[e].verts, true);
            const std::size_t c = offsets[e] + edge_partitions[e].position(col_part);
            const Rational expected = (table.bits[i][j] == '1') ? 1 : 0;
            if (red.matrix.at(r, c) != expected)
                return "first mismatch at row " + table.row_labels[i] + ", column " +
                       table.columns[j].first + ":" + table.columns[j].second;
        }
    }
    return "";
}

// Equality terms as a coefficient row over the canonical index.
inline RationalMatrix equalities_to_rows(const std::vector<ReferenceEquality>& eqs,
                                         const PartitionIndex& idx) {
    RationalMatrix m(eqs.size(), idx.size());
    for (std::size_t i = 0; i < eqs.size(); ++i)
        for (const auto& [label, coeff] : eqs[i]) {
            const Partition p = parse_partition(label, idx.verts, /*normalize=*/true);
            m.at(i, idx.position(p)) = coeff;
        }
    return m;
}

struct FixtureCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct FixtureReport {
    std::vector<FixtureCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Regenerate everything the reference data pins down and compare.
inline FixtureReport check_reference_fixtures() {
    FixtureReport report;
    const VertexSet v4 = VertexSet::standard(4);
    const Hypergraph k3 = k_uniform_complete(v4, 3);
    const Hypergraph k2 = k_uniform_complete(v4, 2);
    const ReductionMatrix red3 = build_reduction_matrix(k3);
    const ReductionMatrix red2 = build_reduction_matrix(k2);

    const std::string diff3 = compare_to_reference(red3, reference_table_3uniform());
    report.checks.push_back({"reference-matrix-3-uniform", diff3.empty(), diff3});
    const std::string diff2 = compare_to_reference(red2, reference_table_2uniform());
    report.checks.push_back({"reference-matrix-2-uniform", diff2.empty(), diff2});

    const SignalSet sig3 = signals(k3);
    const SignalSet sig2 = signals(k2);
    report.checks.push_back({"codimension-pair", sig3.count() == 4 && sig2.count() == 8,
                             "k3n4: " + std::to_string(sig3.count()) +
                                 ", k2n4: " + std::to_string(sig2.count())});

    const RationalMatrix eq3 = equalities_to_rows(reference_equalities_3uniform(), sig3.macro);
    const RationalMatrix eq2 = equalities_to_rows(reference_equalities_2uniform(), sig2.macro);
    report.checks.push_back({"equality-span-3-uniform",
                             canonical_row_basis(sig3.coefficients) == canonical_row_basis(eq3),
                             ""});
    report.checks.push_back({"equality-span-2-uniform",
                             canonical_row_basis(sig2.coefficients) == canonical_row_basis(eq2),
                             ""});

    const VertexSet v3 = VertexSet::standard(3);
    const Hypergraph triangle = k_uniform_complete(v3, 2);
    const SignalSet tri_sig = signals(triangle);
    const RationalMatrix tri_ref =
        equalities_to_rows({reference_triangle_signal()}, tri_sig.macro);
    const bool tri_ok = tri_sig.count() == 1 &&
                        canonical_row_basis(tri_sig.coefficients) == canonical_row_basis(tri_ref);
    report.checks.push_back({"triangle-signal", tri_ok, ""});
    return report;
}

}  // namespace mems::fixtures
