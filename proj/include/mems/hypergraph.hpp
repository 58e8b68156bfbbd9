#pragma once

// Antichain hypergraphs over a vertex set: no hyperedge contains another and
// every hyperedge has at least two vertices.  Provides the dominance
// preorder, join/meet lattice operations, uniform-complete generators,
// exhaustive enumeration (small n) and a seeded random sampler.

#include "mems/partitions.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mems {

// Edges are sorted vertex-index lists; the edge list is ordered by size
// descending, then lexicographically.
using Edge = std::vector<std::size_t>;

struct Hypergraph {
    VertexSet vertices;
    std::vector<Edge> edges;

    std::size_t edge_count() const { return edges.size(); }

    bool operator==(const Hypergraph& o) const {
        return vertices == o.vertices && edges == o.edges;
    }
    bool operator!=(const Hypergraph& o) const { return !(*this == o); }
};

inline bool edge_order_less(const Edge& a, const Edge& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

inline bool edge_subset(const Edge& a, const Edge& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Keep only the inclusion-maximal subsets of size >= 2; the result is a
// valid antichain whatever the input family was.
inline Hypergraph antichain_normalize(const VertexSet& verts, std::vector<Edge> edges) {
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (const std::size_t v : e)
            if (v >= verts.size()) throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end(), edge_order_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<Edge> kept;
    for (const auto& e : edges) {
        if (e.size() < 2) continue;
        bool contained = false;
        for (const auto& f : kept)
            if (e != f && edge_subset(e, f)) { contained = true; break; }
        if (!contained) kept.push_back(e);
    }
    return Hypergraph{verts, std::move(kept)};
}

// True iff the family is already a valid canonical antichain edge list.
inline bool is_antichain(const VertexSet& verts, const std::vector<Edge>& edges) {
    return antichain_normalize(verts, edges).edges == edges;
}

// Dominance: every edge of the second graph is contained in some edge of the
// first.  Non-strict containment, so the relation is reflexive.
inline bool dominates(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertices != b.vertices) throw std::invalid_argument("dominates: vertex set mismatch");
    for (const auto& e : b.edges) {
        bool covered = false;
        for (const auto& f : a.edges)
            if (edge_subset(e, f)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

// Join: the antichain of the union of the edge families.
inline Hypergraph join(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertices != b.vertices) throw std::invalid_argument("join: vertex set mismatch");
    std::vector<Edge> all = a.edges;
    all.insert(all.end(), b.edges.begin(), b.edges.end());
    return antichain_normalize(a.vertices, std::move(all));
}

// Meet: the antichain of all pairwise edge intersections of size >= 2.
inline Hypergraph meet(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertices != b.vertices) throw std::invalid_argument("meet: vertex set mismatch");
    std::vector<Edge> inter;
    for (const auto& e : a.edges) {
        for (const auto& f : b.edges) {
            Edge x;
            std::set_intersection(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(x));
            if (x.size() >= 2) inter.push_back(std::move(x));
        }
    }
    return antichain_normalize(a.vertices, std::move(inter));
}

// Every size-k subset of the vertices as a hyperedge.
inline Hypergraph k_uniform_complete(const VertexSet& verts, std::size_t k) {
    if (k < 2 || k > verts.size()) throw std::invalid_argument("k out of range");
    std::vector<Edge> edges;
    Edge current;
    const auto rec = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == k) { edges.push_back(current); return; }
        for (std::size_t v = start; v < verts.size(); ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return antichain_normalize(verts, std::move(edges));
}

// All subsets of size >= 2 in the canonical edge order (size descending,
// then lexicographic): the candidate pool for enumeration and sampling.
inline std::vector<Edge> candidate_edges(const VertexSet& verts) {
    std::vector<Edge> out;
    const std::size_t n = verts.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Edge e;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1u << v)) e.push_back(v);
        if (e.size() >= 2) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), edge_order_less);
    return out;
}

// Visit every antichain over the size->=2 subsets of V exactly once,
// including the empty hypergraph, in a deterministic order.  Guarded at
// |V| <= 6: the count explodes beyond that.
inline void enumerate_antichains(const VertexSet& verts,
                                 const std::function<void(const Hypergraph&)>& visit) {
    if (verts.size() > 6) throw std::invalid_argument("enumeration limit");
    const std::vector<Edge> pool = candidate_edges(verts);
    std::vector<Edge> chosen;
    const auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == pool.size()) {
            visit(Hypergraph{verts, chosen});
            return;
        }
        self(self, i + 1);
        bool comparable = false;
        for (const auto& c : chosen)
            if (edge_subset(pool[i], c) || edge_subset(c, pool[i])) { comparable = true; break; }
        if (!comparable) {
            chosen.push_back(pool[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

inline std::vector<Hypergraph> all_antichains(const VertexSet& verts) {
    std::vector<Hypergraph> out;
    enumerate_antichains(verts, [&](const Hypergraph& h) { out.push_back(h); });
    return out;
}

// Seeded random antichain.  Shuffles the candidate pool and greedily accepts
// incomparable edges up to a random target count.  Uses raw engine draws
// (not std distributions) so results are identical across standard-library
// implementations.
inline Hypergraph random_antichain(const VertexSet& verts, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> pool = candidate_edges(verts);
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng() % i]);
    const std::size_t target = rng() % (2 * verts.size() + 1);
    std::vector<Edge> chosen;
    for (const auto& e : pool) {
        if (chosen.size() >= target) break;
        bool comparable = false;
        for (const auto& c : chosen)
            if (edge_subset(e, c) || edge_subset(c, e)) { comparable = true; break; }
        if (!comparable) chosen.push_back(e);
    }
    return antichain_normalize(verts, std::move(chosen));
}

// Label helpers for rendering edges.
inline std::string edge_label(const VertexSet& verts, const Edge& e) {
    const bool commas = verts.multi_char();
    std::string out;
    for (const std::size_t v : e) {
        if (!out.empty() && commas) out += ",";
        out += verts.labels[v];
    }
    return out;
}

// The edge as a vertex set of its own (for restrictions and micro indices).
inline VertexSet edge_vertex_set(const VertexSet& verts, const Edge& e) {
    std::vector<std::string> names;
    names.reserve(e.size());
    for (const std::size_t v : e) names.push_back(verts.labels[v]);
    return VertexSet(std::move(names));
}

}  // namespace mems
