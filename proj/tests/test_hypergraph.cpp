#include <catch2/catch_amalgamated.hpp>

#include "mems/hypergraph.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

using namespace mems;

namespace {

Hypergraph graph(std::size_t n, std::vector<Edge> edges) {
    return antichain_normalize(VertexSet::standard(n), std::move(edges));
}

// Edge family as a set of bitmasks, for comparison with the brute-force oracle.
std::set<std::uint32_t> mask_set(const Hypergraph& h) {
    std::set<std::uint32_t> out;
    for (const auto& e : h.edges) {
        std::uint32_t m = 0;
        for (const std::size_t v : e) m |= (1u << v);
        out.insert(m);
    }
    return out;
}

}  // namespace

TEST_CASE("antichain normalization keeps only maximal size->=2 edges") {
    REQUIRE(graph(3, {{0, 1}, {0, 1, 2}}) == graph(3, {{0, 1, 2}}));
    REQUIRE(graph(3, {{0}, {0, 1}}) == graph(3, {{0, 1}}));
    REQUIRE(graph(3, {{1, 0}, {1, 2}, {0, 2}, {2, 1}}) == graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    REQUIRE(graph(3, {}).edges.empty());
}

TEST_CASE("edge lists are ordered by size descending then lexicographically") {
    const Hypergraph h = graph(5, {{0, 1}, {2, 3, 4}, {0, 2}});
    REQUIRE(h.edges == std::vector<Edge>{{2, 3, 4}, {0, 1}, {0, 2}});
    const Hypergraph k = k_uniform_complete(VertexSet::standard(4), 3);
    REQUIRE(k.edges == std::vector<Edge>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

TEST_CASE("dominance is containment-covering, reflexive, and antisymmetric") {
    const Hypergraph full = graph(3, {{0, 1, 2}});
    const Hypergraph pair = graph(3, {{0, 1}, {1, 2}});
    const Hypergraph triangle = graph(3, {{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(dominates(full, pair));
    REQUIRE_FALSE(dominates(pair, full));
    REQUIRE_FALSE(dominates(triangle, full));
    REQUIRE(dominates(full, triangle));

    const auto all3 = all_antichains(VertexSet::standard(3));
    for (const auto& a : all3) {
        REQUIRE(dominates(a, a));
        for (const auto& b : all3)
            if (dominates(a, b) && dominates(b, a)) REQUIRE(a == b);
    }

    const Hypergraph other = graph(4, {{0, 1}});
    REQUIRE_THROWS_AS(dominates(full, other), std::invalid_argument);
}

TEST_CASE("join and meet match their defining examples") {
    REQUIRE(join(graph(3, {{0, 1}}), graph(3, {{1, 2}})) == graph(3, {{0, 1}, {1, 2}}));
    REQUIRE(join(graph(3, {{0, 1}}), graph(3, {{0, 1, 2}})) == graph(3, {{0, 1, 2}}));
    const Hypergraph triangle = graph(3, {{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(join(triangle, graph(3, {{0, 1, 2}})) == graph(3, {{0, 1, 2}}));

    REQUIRE(meet(graph(4, {{0, 1, 2}}), graph(4, {{1, 2, 3}})) == graph(4, {{1, 2}}));
    REQUIRE(meet(graph(4, {{0, 1}}), graph(4, {{2, 3}})).edges.empty());
    REQUIRE_THROWS_AS(meet(triangle, graph(4, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("join and meet are commutative, associative, and idempotent") {
    const auto all3 = all_antichains(VertexSet::standard(3));
    for (const auto& a : all3) {
        REQUIRE(join(a, a) == a);
        REQUIRE(meet(a, a) == a);
        for (const auto& b : all3) {
            REQUIRE(join(a, b) == join(b, a));
            REQUIRE(meet(a, b) == meet(b, a));
            REQUIRE(dominates(join(a, b), a));
            REQUIRE(dominates(a, meet(a, b)));
            for (const auto& c : all3) {
                REQUIRE(join(join(a, b), c) == join(a, join(b, c)));
                REQUIRE(meet(meet(a, b), c) == meet(a, meet(b, c)));
            }
        }
    }
    // Seeded spot checks at n = 5.
    const VertexSet v5 = VertexSet::standard(5);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Hypergraph a = random_antichain(v5, 3 * s);
        const Hypergraph b = random_antichain(v5, 3 * s + 1);
        const Hypergraph c = random_antichain(v5, 3 * s + 2);
        REQUIRE(join(a, b) == join(b, a));
        REQUIRE(meet(a, b) == meet(b, a));
        REQUIRE(join(join(a, b), c) == join(a, join(b, c)));
        REQUIRE(meet(meet(a, b), c) == meet(a, meet(b, c)));
        REQUIRE(dominates(join(a, b), a));
        REQUIRE(dominates(a, meet(a, b)));
    }
}

TEST_CASE("k-uniform-complete generators and their guards") {
    const VertexSet v4 = VertexSet::standard(4);
    REQUIRE(k_uniform_complete(v4, 3).edge_count() == 4);
    REQUIRE(k_uniform_complete(v4, 2).edge_count() == 6);
    REQUIRE(k_uniform_complete(v4, 4) == graph(4, {{0, 1, 2, 3}}));
    REQUIRE_THROWS_AS(k_uniform_complete(v4, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(k_uniform_complete(v4, 5), std::invalid_argument);
}

TEST_CASE("antichain enumeration agrees with the brute-force oracle") {
    for (std::size_t n = 2; n <= 4; ++n) {
        std::set<std::set<std::uint32_t>> enumerated;
        enumerate_antichains(VertexSet::standard(n), [&](const Hypergraph& h) {
            REQUIRE(is_antichain(h.vertices, h.edges));
            REQUIRE(enumerated.insert(mask_set(h)).second);  // no duplicates
        });
        std::set<std::set<std::uint32_t>> brute;
        for (const auto& fam : oracles::brute_force_antichains(n))
            brute.insert(std::set<std::uint32_t>(fam.begin(), fam.end()));
        REQUIRE(enumerated == brute);
    }
}

TEST_CASE("antichain counts are frozen") {
    const auto count = [](std::size_t n) {
        std::size_t c = 0;
        enumerate_antichains(VertexSet::standard(n), [&](const Hypergraph&) { ++c; });
        return c;
    };
    REQUIRE(count(2) == 2);
    REQUIRE(count(3) == 9);
    REQUIRE(count(4) == 114);
    REQUIRE(count(5) == 6894);
    REQUIRE_THROWS_AS(count(7), std::invalid_argument);
}

TEST_CASE("the empty hypergraph is enumerated first") {
    bool first = true;
    enumerate_antichains(VertexSet::standard(3), [&](const Hypergraph& h) {
        if (first) {
            REQUIRE(h.edges.empty());
            first = false;
        }
    });
}

TEST_CASE("random antichains are valid, seeded, and deterministic") {
    const VertexSet v6 = VertexSet::standard(6);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Hypergraph a = random_antichain(v6, s);
        REQUIRE(is_antichain(a.vertices, a.edges));
        REQUIRE(a == random_antichain(v6, s));
    }
    // Different seeds produce different graphs at least once.
    bool any_difference = false;
    for (std::uint64_t s = 1; s < 10 && !any_difference; ++s)
        any_difference = !(random_antichain(v6, 0) == random_antichain(v6, s));
    REQUIRE(any_difference);
}

TEST_CASE("edge labels concatenate or comma-join vertex names") {
    const VertexSet v = VertexSet::standard(4);
    REQUIRE(edge_label(v, {0, 2, 3}) == "ACD");
    const VertexSet multi(std::vector<std::string>{"P1", "P2", "Q"});
    REQUIRE(edge_label(multi, {0, 2}) == "P1,Q");
}
