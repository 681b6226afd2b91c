#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "degseq/erdos_gallai.hpp"
#include "degseq/oracle.hpp"
#include "test_util.hpp"

using degseq::Degree;
using degseq::DegreeSequence;
using degseq::Realization;
using testutil::seq_of;

namespace {

// Re-derives the degree list from the edges and checks simple-graph shape.
void check_realizes(const Realization& graph, const DegreeSequence& seq) {
    REQUIRE(graph.vertex_count == static_cast<std::int64_t>(seq.size()));
    std::vector<std::int64_t> degree(seq.size(), 0);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& [u, v] : graph.edges) {
        REQUIRE(u < v);
        REQUIRE(v < graph.vertex_count);
        REQUIRE(u >= 0);
        REQUIRE(seen.insert({u, v}).second);
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    for (std::size_t i = 0; i < seq.size(); ++i) REQUIRE(degree[i] == seq[i]);
}

}  // namespace

TEST_CASE("havel_hakimi worked cases") {
    const auto complete = degseq::havel_hakimi(seq_of({3, 3, 3, 3}));
    REQUIRE(complete.has_value());
    CHECK(complete->edges.size() == 6);
    check_realizes(*complete, seq_of({3, 3, 3, 3}));

    CHECK_FALSE(degseq::havel_hakimi(seq_of({3, 3, 1, 1})).has_value());

    const auto empty = degseq::havel_hakimi(DegreeSequence{});
    REQUIRE(empty.has_value());
    CHECK(empty->vertex_count == 0);
    CHECK(empty->edges.empty());
}

TEST_CASE("every returned realization matches its input exactly") {
    testutil::for_each_canonical(6, 0, [](const DegreeSequence& seq) {
        const auto graph = degseq::havel_hakimi(seq);
        if (graph) check_realizes(*graph, seq);
    });
}

TEST_CASE("enumerator streams nonincreasing sequences in decreasing order") {
    degseq::SequenceEnumerator small(2, 1);
    CHECK(small.next() == seq_of({1, 1}));
    CHECK(small.next() == seq_of({1, 0}));
    CHECK(small.next() == seq_of({0, 0}));
    CHECK_FALSE(small.next().has_value());
    CHECK_FALSE(small.next().has_value());

    degseq::SequenceEnumerator empty_only(0, 5);
    CHECK(empty_only.next() == DegreeSequence{});
    CHECK_FALSE(empty_only.next().has_value());
}

TEST_CASE("enumerator yields the stars-and-bars count, each sequence once") {
    const auto binomial = [](std::int64_t n, std::int64_t k) {
        std::int64_t result = 1;
        for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
        return result;
    };
    for (std::int64_t n = 1; n <= 5; ++n) {
        for (Degree cap = 0; cap <= 4; ++cap) {
            degseq::SequenceEnumerator enumerator(n, cap);
            std::set<std::vector<Degree>> seen;
            std::vector<Degree> previous;
            bool first = true;
            while (auto seq = enumerator.next()) {
                CHECK(seen.insert(seq->values()).second);
                if (!first) CHECK(seq->values() < previous);  // lexicographically decreasing
                previous = seq->values();
                first = false;
            }
            CHECK(static_cast<std::int64_t>(seen.size()) == binomial(cap + n, n));
        }
    }
}

TEST_CASE("cross_check sweeps cleanly with pinned regression counts") {
    const auto trivial = degseq::cross_check(0);
    CHECK(trivial.sequences == 1);
    CHECK(trivial.graphic == 1);
    CHECK(trivial.disagreements == 0);

    // Counts pinned from the first verified run of two independent routes
    // (construction vs inequalities).
    const auto small = degseq::cross_check(4);
    CHECK(small.sequences == 50);
    CHECK(small.graphic == 19);
    CHECK(small.disagreements == 0);

    const auto wide = degseq::cross_check(7);
    CHECK(wide.sequences == 2354);
    CHECK(wide.graphic == 494);
    CHECK(wide.disagreements == 0);
    std::int64_t decided_total = 0;
    for (const auto count : wide.decided_by) decided_total += count;
    CHECK(decided_total == wide.sequences);

    CHECK_THROWS_AS(degseq::cross_check(degseq::kExhaustiveLimit + 1), std::invalid_argument);
}
