#include <catch2/catch_amalgamated.hpp>

#include "mems/partitions.hpp"
#include "oracles.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace mems;

namespace {

std::vector<std::string> formatted_partitions(std::size_t n) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_nontrivial_partitions(VertexSet::standard(n)))
        out.push_back(format_partition(p));
    return out;
}

}  // namespace

TEST_CASE("Bell numbers match the binomial recurrence") {
    const std::vector<long> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(bell_number(i) == Int(expected[i]));
        REQUIRE(bell_number(i) == Int(oracles::bell_by_recurrence(i).str()));
    }
}

TEST_CASE("canonical partition order is frozen for three parties") {
    REQUIRE(formatted_partitions(3) ==
            std::vector<std::string>{"AB|C", "AC|B", "A|BC", "A|B|C"});
}

TEST_CASE("canonical partition order is frozen for four parties") {
    REQUIRE(formatted_partitions(4) ==
            std::vector<std::string>{"ABC|D", "ABD|C", "AB|CD", "ACD|B", "AC|BD", "AD|BC",
                                     "A|BCD", "AB|C|D", "AC|B|D", "A|BC|D", "AD|B|C", "A|BD|C",
                                     "A|B|CD", "A|B|C|D"});
}

TEST_CASE("nontrivial partition counts equal Bell minus one") {
    for (std::size_t n = 2; n <= 6; ++n)
        REQUIRE(enumerate_nontrivial_partitions(VertexSet::standard(n)).size() ==
                std::size_t(bell_number(n) - 1));
}

TEST_CASE("block counts ascend within the canonical order") {
    const auto parts = enumerate_nontrivial_partitions(VertexSet::standard(5));
    for (std::size_t i = 1; i < parts.size(); ++i)
        REQUIRE(parts[i - 1].block_count() <= parts[i].block_count());
}

TEST_CASE("parse and format round-trip every partition") {
    const VertexSet v = VertexSet::standard(4);
    for (const auto& p : enumerate_nontrivial_partitions(v))
        REQUIRE(parse_partition(format_partition(p), v) == p);
}

TEST_CASE("non-canonical spellings are rejected unless normalized") {
    const VertexSet v = VertexSet::standard(3);
    REQUIRE_THROWS_AS(parse_partition("C|AB", v), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_partition("BA|C", v), std::invalid_argument);
    REQUIRE(format_partition(parse_partition("C|AB", v, /*normalize=*/true)) == "AB|C");
    REQUIRE(format_partition(parse_partition("B|AC", v, /*normalize=*/true)) == "AC|B");
    REQUIRE(format_partition(parse_partition("BA|C", v, /*normalize=*/true)) == "AB|C");
}

TEST_CASE("parse rejects malformed partition text") {
    const VertexSet v = VertexSet::standard(3);
    REQUIRE_THROWS_AS(parse_partition("AB", v), std::invalid_argument);       // C missing
    REQUIRE_THROWS_AS(parse_partition("AB|X", v), std::invalid_argument);     // unknown vertex
    REQUIRE_THROWS_AS(parse_partition("AB|BC", v), std::invalid_argument);    // B repeated
    REQUIRE_THROWS_AS(parse_partition("AB||C", v), std::invalid_argument);    // empty block
    REQUIRE_THROWS_AS(parse_partition("", v), std::invalid_argument);
}

TEST_CASE("the trivial partition parses but is excluded from the index") {
    const VertexSet v = VertexSet::standard(3);
    const Partition t = parse_partition("ABC", v);
    REQUIRE(t.trivial());
    REQUIRE(t == partition_from_rgs(v, std::vector<int>(3, 0)));
    const PartitionIndex idx = PartitionIndex::build(v);
    REQUIRE_THROWS_AS(idx.position(t), std::invalid_argument);
}

TEST_CASE("partition index positions follow the canonical order") {
    const VertexSet v = VertexSet::standard(4);
    const PartitionIndex idx = PartitionIndex::build(v);
    REQUIRE(idx.size() == 14);
    REQUIRE(idx.position(parse_partition("ABC|D", v)) == 0);
    REQUIRE(idx.position(parse_partition("A|B|C|D", v)) == 13);
    REQUIRE(idx.position(parse_partition("AB|C|D", v)) == 7);
    // A partition of a different vertex set is rejected.
    const Partition foreign = parse_partition("AB|C", VertexSet::standard(3));
    REQUIRE_THROWS_AS(idx.position(foreign), std::invalid_argument);
}

TEST_CASE("restriction picks out the induced partition") {
    const VertexSet v4 = VertexSet::standard(4);
    const VertexSet v3 = VertexSet::standard(3);
    const VertexSet v2(std::vector<std::string>{"A", "B"});
    const Partition p = parse_partition("AC|BD", v4);
    REQUIRE(format_partition(restrict_partition(p, v3)) == "AC|B");
    REQUIRE(restrict_partition(parse_partition("AB|CD", v4), v2).trivial());
    REQUIRE_THROWS_AS(restrict_partition(p, VertexSet(std::vector<std::string>{})),
                      std::invalid_argument);
}

TEST_CASE("restriction is idempotent along chains of subsets") {
    const VertexSet v4 = VertexSet::standard(4);
    const VertexSet v3 = VertexSet::standard(3);
    const VertexSet v2(std::vector<std::string>{"A", "B"});
    for (const auto& p : enumerate_nontrivial_partitions(v4))
        REQUIRE(restrict_partition(restrict_partition(p, v3), v2) == restrict_partition(p, v2));
}

TEST_CASE("singleton extension appends new vertices as blocks") {
    const VertexSet v3 = VertexSet::standard(3);
    const VertexSet v4 = VertexSet::standard(4);
    const Partition p = parse_partition("AB|C", v3);
    REQUIRE(format_partition(extend_singleton(p, v4)) == "AB|C|D");
    REQUIRE(restrict_partition(extend_singleton(p, v4), v3) == p);
    REQUIRE_THROWS_AS(extend_singleton(parse_partition("AB|CD", v4), v3), std::invalid_argument);
}

TEST_CASE("multi-character labels switch to comma-separated blocks") {
    const VertexSet v(std::vector<std::string>{"P1", "P2", "Q"});
    REQUIRE(v.multi_char());
    const auto parts = enumerate_nontrivial_partitions(v);
    REQUIRE(parts.size() == 4);
    REQUIRE(format_partition(parts[0]) == "P1,P2|Q");
    for (const auto& p : parts) REQUIRE(parse_partition(format_partition(p), v) == p);
}

TEST_CASE("partition_from_blocks validates coverage and disjointness") {
    const VertexSet v = VertexSet::standard(3);
    REQUIRE(format_partition(partition_from_blocks(v, {{2}, {1, 0}})) == "AB|C");
    REQUIRE_THROWS_AS(partition_from_blocks(v, {{0, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(partition_from_blocks(v, {{0, 1}, {1, 2}}), std::invalid_argument);
}
