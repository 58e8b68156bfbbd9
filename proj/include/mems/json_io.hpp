#pragma once

// JSON (de)serialization for the public file formats, plus DOT export for
// hypergraphs.  Schemas:
//   hypergraph: {"vertices": ["A",...], "edges": [["A","B"],...]}
//   matrix:     {"rows": r, "cols": c, "entries": [["p/q",...],...],
//                "row_labels": [...], "col_labels": [...]}
//   signals:    {"macro_order": ["A|B|C",...], "signals": [[int,...],...]}
//   point:      {"order": ["A|BC",...], "values": [2.0,...]}
// Matrix entries are strings with integers printed without "/1".  Readers
// accept macro_order/order lists in any permutation of the canonical order
// and remap columns internally; writers always emit canonical order.

#include "mems/hypergraph.hpp"
#include "mems/matrix.hpp"
#include "mems/partitions.hpp"
#include "mems/reduction.hpp"
#include "mems/structure.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mems {

using Json = nlohmann::ordered_json;

// --- hypergraph --------------------------------------------------------------

inline Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["vertices"] = h.vertices.labels;
    Json edges = Json::array();
    for (const auto& e : h.edges) {
        Json edge = Json::array();
        for (const std::size_t v : e) edge.push_back(h.vertices.labels[v]);
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    return j;
}

inline Hypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph json needs 'vertices' and 'edges'");
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices")) names.push_back(v.get<std::string>());
    const VertexSet verts(names);
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
        Edge e;
        for (const auto& v : je) e.push_back(verts.index_of(v.get<std::string>()));
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end(), edge_order_less);
    if (!is_antichain(verts, edges))
        throw std::invalid_argument("edges are not an antichain of size-2-or-larger subsets");
    return Hypergraph{verts, std::move(edges)};
}

// --- rational matrix ---------------------------------------------------------

inline Json matrix_to_json(const RationalMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(i, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    if (!m.row_labels.empty()) j["row_labels"] = m.row_labels;
    if (!m.col_labels.empty()) j["col_labels"] = m.col_labels;
    return j;
}

inline RationalMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    RationalMatrix m(rows, cols);
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("matrix row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw std::invalid_argument("matrix column count mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = parse_rational(entries[i][c].get<std::string>());
    }
    if (j.contains("row_labels")) m.row_labels = j.at("row_labels").get<std::vector<std::string>>();
    if (j.contains("col_labels")) m.col_labels = j.at("col_labels").get<std::vector<std::string>>();
    return m;
}

// --- signal sets -------------------------------------------------------------

inline std::int64_t to_int64_checked(const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::invalid_argument("signal coefficient is not an integer");
    const Int num = boost::multiprecision::numerator(q);
    if (num > Int(std::int64_t(1) << 62) || num < -Int(std::int64_t(1) << 62))
        throw std::invalid_argument("signal coefficient out of range");
    return num.convert_to<std::int64_t>();
}

inline Json signals_to_json(const SignalSet& sig) {
    Json j;
    Json order = Json::array();
    for (const auto& p : sig.macro.order) order.push_back(format_partition(p));
    j["macro_order"] = std::move(order);
    Json rows = Json::array();
    for (std::size_t r = 0; r < sig.coefficients.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < sig.coefficients.cols(); ++c)
            row.push_back(to_int64_checked(sig.coefficients.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["signals"] = std::move(rows);
    return j;
}

// Derive the vertex set from a partition label (every label lists all parties).
inline VertexSet vertex_set_of_partition_label(const std::string& label) {
    std::vector<std::string> names;
    std::string member;
    const bool commas = label.find(',') != std::string::npos;
    for (const char ch : label) {
        if (ch == '|' || ch == ',') {
            if (!member.empty()) names.push_back(member);
            member.clear();
            continue;
        }
        if (commas)
            member += ch;
        else
            names.emplace_back(1, ch);
    }
    if (!member.empty()) names.push_back(member);
    return VertexSet(names);
}

// Column permutation mapping an order list onto the canonical index.
inline std::vector<std::size_t> order_positions(const Json& order_list, const PartitionIndex& idx) {
    if (order_list.size() != idx.size())
        throw std::invalid_argument("order list length does not match the partition count");
    std::vector<std::size_t> pos;
    std::vector<bool> seen(idx.size(), false);
    for (const auto& item : order_list) {
        const Partition p = parse_partition(item.get<std::string>(), idx.verts);
        const std::size_t k = idx.position(p);
        if (seen[k]) throw std::invalid_argument("duplicate partition in order list");
        seen[k] = true;
        pos.push_back(k);
    }
    return pos;
}

inline SignalSet signals_from_json(const Json& j) {
    const auto& order = j.at("macro_order");
    if (order.empty()) throw std::invalid_argument("empty macro_order");
    SignalSet sig;
    sig.vertex_set = vertex_set_of_partition_label(order[0].get<std::string>());
    sig.macro = PartitionIndex::build(sig.vertex_set);
    const std::vector<std::size_t> pos = order_positions(order, sig.macro);
    const auto& rows = j.at("signals");
    sig.coefficients = RationalMatrix(rows.size(), sig.macro.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != pos.size())
            throw std::invalid_argument("signal row length does not match macro_order");
        for (std::size_t c = 0; c < pos.size(); ++c)
            sig.coefficients.at(r, pos[c]) = Rational(rows[r][c].get<std::int64_t>());
    }
    return sig;
}

// --- measure points ----------------------------------------------------------

inline Json point_to_json(const MemsPoint& p) {
    const PartitionIndex idx = PartitionIndex::build(p.vertex_set);
    Json j;
    Json order = Json::array();
    for (const auto& part : idx.order) order.push_back(format_partition(part));
    j["order"] = std::move(order);
    j["values"] = p.values;
    return j;
}

inline MemsPoint point_from_json(const Json& j) {
    const auto& order = j.at("order");
    if (order.empty()) throw std::invalid_argument("empty order");
    MemsPoint p;
    p.vertex_set = vertex_set_of_partition_label(order[0].get<std::string>());
    const PartitionIndex idx = PartitionIndex::build(p.vertex_set);
    const std::vector<std::size_t> pos = order_positions(order, idx);
    const auto& values = j.at("values");
    if (values.size() != pos.size())
        throw std::invalid_argument("values length does not match order");
    p.values.assign(idx.size(), 0.0);
    for (std::size_t c = 0; c < pos.size(); ++c) p.values[pos[c]] = values[c].get<double>();
    return p;
}

// --- DOT export ---------------------------------------------------------------

// Vertices as nodes; size-2 edges as plain edges; larger hyperedges as
// labeled auxiliary box nodes connected to their members.
inline std::string hypergraph_to_dot(const Hypergraph& h) {
    std::string out = "graph hypergraph {\n  node [shape=circle];\n";
    for (const auto& l : h.vertices.labels) out += "  \"" + l + "\";\n";
    std::size_t aux = 0;
    for (const auto& e : h.edges) {
        if (e.size() == 2) {
            out += "  \"" + h.vertices.labels[e[0]] + "\" -- \"" + h.vertices.labels[e[1]] + "\";\n";
        } else {
            const std::string name = "edge" + std::to_string(aux++);
            out += "  \"" + name + "\" [shape=box, label=\"" + edge_label(h.vertices, e) + "\"];\n";
            for (const std::size_t v : e)
                out += "  \"" + name + "\" -- \"" + h.vertices.labels[v] + "\";\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace mems
