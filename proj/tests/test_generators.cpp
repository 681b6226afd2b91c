#include <random>
#include <vector>

#include "doctest.h"

#include "degseq/bench.hpp"
#include "degseq/bounds.hpp"
#include "degseq/generators.hpp"
#include "degseq/oracle.hpp"
#include "test_util.hpp"

using degseq::DegreeSequence;
using degseq::Ordering;
using degseq::SequenceStats;
using testutil::seq_of;

TEST_CASE("random_with_stats pins all four statistics") {
    const SequenceStats target{4, 2, 5, 14};
    const DegreeSequence out = degseq::random_with_stats(target, 1);
    CHECK(degseq::stats(out) == target);

    // Only two members exist for these stats.
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        const DegreeSequence member = degseq::random_with_stats({3, 1, 4, 8}, seed);
        CHECK((member == seq_of({3, 3, 1, 1}) || member == seq_of({3, 2, 2, 1})));
    }

    CHECK_THROWS_AS(degseq::random_with_stats({2, 2, 3, 6}, 1), degseq::InfeasibleStats);
    CHECK_THROWS_AS(degseq::random_with_stats({5, 1, 4, 18}, 1), degseq::InfeasibleStats);
}

TEST_CASE("random_with_stats is deterministic per (stats, seed)") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const SequenceStats st = testutil::random_feasible_stats(rng);
        const std::uint64_t seed = rng();
        CHECK(degseq::random_with_stats(st, seed) == degseq::random_with_stats(st, seed));
        CHECK(degseq::stats(degseq::random_with_stats(st, seed)) == st);
    }
}

TEST_CASE("the threshold shape dominates random members of its class") {
    std::mt19937_64 rng(90125);
    for (int trial = 0; trial < 2000; ++trial) {
        const SequenceStats st = testutil::random_feasible_stats(rng);
        const DegreeSequence top = degseq::threshold_majorant(st);
        const DegreeSequence member = degseq::random_with_stats(st, rng());
        const auto direction = degseq::majorizes(top, member).direction;
        CHECK((direction == Ordering::Majorizes || direction == Ordering::Equal));
    }
}

TEST_CASE("sharpness_family instantiation") {
    const auto inst = degseq::sharpness_family(4);
    CHECK(inst.base == seq_of({4, 4, 2, 2, 2}));
    CHECK(inst.increase_max == seq_of({5, 3, 2, 2, 2}));
    CHECK(inst.decrease_length == seq_of({4, 4, 4, 2}));
    CHECK(inst.decrease_min == seq_of({4, 4, 3, 2, 1}));
    CHECK(inst.increase_sum == seq_of({4, 4, 4, 2, 2}));

    const auto smallest = degseq::sharpness_family(3);
    CHECK(smallest.base == seq_of({3, 3, 2, 2}));
    const auto cmp = degseq::span_bound_comparison(degseq::stats(smallest.base));
    CHECK(cmp.lhs_cross == cmp.rhs_cross);

    CHECK_THROWS_AS(degseq::sharpness_family(2), degseq::ParameterTooSmall);
}

TEST_CASE("a corpus of family bases is decided entirely by the span bound") {
    // From 4 upward; the parameter-3 base has span 1 and the near-regular
    // rule takes it first.
    std::vector<degseq::DegreeSequence> corpus;
    for (degseq::Degree a = 4; a <= 20; ++a) corpus.push_back(degseq::sharpness_family(a).base);
    const degseq::BenchReport report = degseq::run_bench(corpus, 1);
    CHECK(report.agreement);
    CHECK(report.fraction(degseq::Stage::CZBound) == 1.0);
}

TEST_CASE("each perturbation moves exactly its labeled statistic") {
    // From 4 upward; at 3 the shifted entries collide with the extremes and
    // the resulting stats are not a single-parameter move.
    for (degseq::Degree a = 4; a <= 30; ++a) {
        const auto inst = degseq::sharpness_family(a);
        const SequenceStats base = degseq::stats(inst.base);
        CHECK(base == SequenceStats{a, 2, a + 1, 4 * a - 2});
        CHECK(degseq::stats(inst.increase_max) ==
              SequenceStats{a + 1, base.min_degree, base.length, base.degree_sum});
        CHECK(degseq::stats(inst.decrease_length) ==
              SequenceStats{a, base.min_degree, base.length - 1, base.degree_sum});
        CHECK(degseq::stats(inst.decrease_min) ==
              SequenceStats{a, 1, base.length, base.degree_sum});
        CHECK(degseq::stats(inst.increase_sum) ==
              SequenceStats{a, base.min_degree, base.length, base.degree_sum + 2});
    }
}

TEST_CASE("family bases sit exactly on the bound; perturbations break realizability") {
    for (degseq::Degree a = 3; a <= 12; ++a) {
        const auto inst = degseq::sharpness_family(a);
        const auto cmp = degseq::span_bound_comparison(degseq::stats(inst.base));
        CHECK(cmp.satisfied);
        CHECK(cmp.lhs_cross == cmp.rhs_cross);
        CHECK(degseq::havel_hakimi(inst.base).has_value());
        for (const DegreeSequence* p :
             {&inst.increase_max, &inst.decrease_length, &inst.decrease_min, &inst.increase_sum}) {
            CHECK_FALSE(degseq::havel_hakimi(*p).has_value());
        }
    }
}
