#pragma once

// Set partitions of a vertex set: canonical restricted-growth-string (rgs)
// encoding, enumeration of the nontrivial partitions in a fixed total order,
// restriction to a subset, singleton extension, and Bell numbers.
//
// Canonical order of partitions: ascending block count, then lexicographic
// on the rgs.  The rgs assigns block ids by first appearance while scanning
// vertices in label order, so blocks are always listed by smallest member
// with members ascending.

#include "mems/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mems {

struct VertexSet {
    std::vector<std::string> labels;  // sorted, unique

    VertexSet() = default;
    explicit VertexSet(std::vector<std::string> names) : labels(std::move(names)) {
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            throw std::invalid_argument("duplicate vertex label");
        for (const auto& l : labels)
            if (l.empty()) throw std::invalid_argument("empty vertex label");
    }

    // The n-party set "A", "B", "C", ...
    static VertexSet standard(std::size_t n) {
        if (n > 26) throw std::invalid_argument("standard labels exhausted beyond 26");
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, char('A' + i));
        return VertexSet(std::move(names));
    }

    std::size_t size() const { return labels.size(); }

    std::size_t index_of(const std::string& name) const {
        const auto it = std::lower_bound(labels.begin(), labels.end(), name);
        if (it == labels.end() || *it != name)
            throw std::invalid_argument("unknown vertex label: " + name);
        return std::size_t(it - labels.begin());
    }

    bool contains(const std::string& name) const {
        return std::binary_search(labels.begin(), labels.end(), name);
    }

    // Multi-character labels switch the text format to comma-separated blocks.
    bool multi_char() const {
        return std::any_of(labels.begin(), labels.end(),
                           [](const std::string& l) { return l.size() > 1; });
    }

    bool operator==(const VertexSet& o) const { return labels == o.labels; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
};

struct Partition {
    VertexSet verts;
    std::vector<int> rgs;  // canonical: ids assigned by first appearance

    std::size_t block_count() const {
        return rgs.empty() ? 0 : std::size_t(*std::max_element(rgs.begin(), rgs.end())) + 1;
    }

    bool trivial() const { return block_count() <= 1; }

    // Blocks as vertex indices; canonical by construction of the rgs.
    std::vector<std::vector<std::size_t>> blocks() const {
        std::vector<std::vector<std::size_t>> out(block_count());
        for (std::size_t v = 0; v < rgs.size(); ++v) out[std::size_t(rgs[v])].push_back(v);
        return out;
    }

    bool operator==(const Partition& o) const { return verts == o.verts && rgs == o.rgs; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const {  // the canonical total order
        const auto bc = block_count(), obc = o.block_count();
        if (bc != obc) return bc < obc;
        return rgs < o.rgs;
    }
};

// Normalize arbitrary block ids to first-appearance order.
inline std::vector<int> normalize_rgs(std::vector<int> ids) {
    std::map<int, int> seen;
    for (int& x : ids) {
        const auto it = seen.find(x);
        if (it == seen.end()) {
            const int fresh = int(seen.size());
            seen.emplace(x, fresh);
            x = fresh;
        } else {
            x = it->second;
        }
    }
    return ids;
}

inline Partition partition_from_rgs(VertexSet verts, std::vector<int> ids) {
    if (ids.size() != verts.size()) throw std::invalid_argument("rgs length mismatch");
    return Partition{std::move(verts), normalize_rgs(std::move(ids))};
}

// Build a partition from blocks given as vertex index lists.
inline Partition partition_from_blocks(VertexSet verts,
                                       const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<int> ids(verts.size(), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block");
        for (const std::size_t v : blocks[b]) {
            if (v >= verts.size()) throw std::invalid_argument("block vertex out of range");
            if (ids[v] != -1) throw std::invalid_argument("blocks overlap");
            ids[v] = int(b);
        }
    }
    for (const int x : ids)
        if (x == -1) throw std::invalid_argument("blocks do not cover the vertex set");
    return partition_from_rgs(std::move(verts), std::move(ids));
}

// Bell numbers via the Bell triangle; exact.
inline Int bell_number(std::size_t n) {
    std::vector<Int> row{1};  // B_0
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const Int& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

// All partitions of V except the single-block one, in canonical order.
// Count: B_|V| - 1.  Generates restricted growth strings (ids[0] = 0,
// ids[i] <= max(prefix) + 1), then sorts into the canonical order.
inline std::vector<Partition> enumerate_nontrivial_partitions(const VertexSet& verts) {
    const std::size_t n = verts.size();
    if (n == 0) throw std::invalid_argument("empty vertex set");
    std::vector<Partition> out;
    std::vector<int> ids(n, 0);
    const auto rec = [&](auto&& self, std::size_t i, int max_id) -> void {
        if (i == n) {
            if (max_id > 0) out.push_back(Partition{verts, ids});
            return;
        }
        for (int b = 0; b <= max_id + 1; ++b) {
            ids[i] = b;
            self(self, i + 1, std::max(max_id, b));
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// The canonical total ordering of the nontrivial partitions of V.
struct PartitionIndex {
    VertexSet verts;
    std::vector<Partition> order;
    std::map<std::vector<int>, std::size_t> positions;

    static PartitionIndex build(const VertexSet& verts) {
        PartitionIndex idx;
        idx.verts = verts;
        idx.order = enumerate_nontrivial_partitions(verts);
        for (std::size_t i = 0; i < idx.order.size(); ++i)
            idx.positions.emplace(idx.order[i].rgs, i);
        return idx;
    }

    std::size_t size() const { return order.size(); }

    std::size_t position(const Partition& p) const {
        if (p.verts != verts) throw std::invalid_argument("partition over a different vertex set");
        const auto it = positions.find(p.rgs);
        if (it == positions.end()) throw std::invalid_argument("partition not in index (trivial?)");
        return it->second;
    }
};

// The restriction of a partition to a subset: intersect blocks, drop empties.
inline Partition restrict_partition(const Partition& p, const VertexSet& target) {
    if (target.size() == 0) throw std::invalid_argument("empty restriction target");
    std::vector<int> ids;
    ids.reserve(target.size());
    for (const auto& label : target.labels) ids.push_back(p.rgs[p.verts.index_of(label)]);
    return partition_from_rgs(target, std::move(ids));
}

// The extension of a partition on A to a superset B: untouched blocks of A
// plus one singleton block per vertex of B \ A.
inline Partition extend_singleton(const Partition& p, const VertexSet& superset) {
    for (const auto& label : p.verts.labels)
        if (!superset.contains(label)) throw std::invalid_argument("not a superset");
    std::vector<int> ids;
    ids.reserve(superset.size());
    int fresh = int(p.block_count());
    for (const auto& label : superset.labels) {
        if (p.verts.contains(label))
            ids.push_back(p.rgs[p.verts.index_of(label)]);
        else
            ids.push_back(fresh++);
    }
    return partition_from_rgs(superset, std::move(ids));
}

// Text form: blocks joined by "|"; members concatenated, or comma-separated
// when the vertex set carries multi-character labels.
inline std::string format_partition(const Partition& p) {
    const bool commas = p.verts.multi_char();
    std::string out;
    for (const auto& block : p.blocks()) {
        if (!out.empty()) out += "|";
        bool first = true;
        for (const std::size_t v : block) {
            if (!first && commas) out += ",";
            out += p.verts.labels[v];
            first = false;
        }
    }
    return out;
}

// Parse the partition grammar `block ("|" block)*`.  Members are single
// characters unless the vertex set has multi-character labels, in which
// case blocks are comma-separated.  Unless `normalize` is set,
// non-canonical spellings (unsorted members, blocks not ordered by smallest
// member) are rejected.
inline Partition parse_partition(const std::string& text, const VertexSet& verts,
                                 bool normalize = false) {
    if (text.empty()) throw std::invalid_argument("empty partition text");
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto bar = std::min(text.find('|', pos), text.size());
        const std::string block_text = text.substr(pos, bar - pos);
        if (block_text.empty()) throw std::invalid_argument("empty block in partition text");
        std::vector<std::size_t> block;
        if (verts.multi_char()) {
            std::size_t p2 = 0;
            while (p2 <= block_text.size()) {
                const auto comma = std::min(block_text.find(',', p2), block_text.size());
                block.push_back(verts.index_of(block_text.substr(p2, comma - p2)));
                p2 = comma + 1;
                if (comma == block_text.size()) break;
            }
        } else {
            for (const char c : block_text) block.push_back(verts.index_of(std::string(1, c)));
        }
        blocks.push_back(std::move(block));
        pos = bar + 1;
        if (bar == text.size()) break;
    }
    const Partition parsed = partition_from_blocks(verts, blocks);
    if (!normalize && format_partition(parsed) != text)
        throw std::invalid_argument("non-canonical partition text (pass normalize): " + text);
    return parsed;
}

}  // namespace mems
