#pragma once

// Shared helpers for the test binaries: exhaustive sweeps, a literal
// re-evaluation of the k-th inequality (kept free of the library's prefix-sum
// machinery so witness checks stay independent), and random feasible stats.

#include <cstdint>
#include <random>
#include <vector>

#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"

namespace testutil {

inline degseq::DegreeSequence seq_of(std::vector<degseq::Degree> values) {
    return degseq::canonicalize(std::move(values));
}

// Visits every canonical sequence with length <= n_max and entries
// <= length - 1 + cap_offset.
template <typename F>
void for_each_canonical(std::int64_t n_max, std::int64_t cap_offset, F&& visit) {
    for (std::int64_t n = 0; n <= n_max; ++n) {
        degseq::SequenceEnumerator enumerator(n,
                                              std::max<degseq::Degree>(n - 1 + cap_offset, 0));
        while (auto seq = enumerator.next()) visit(*seq);
    }
}

// Direct evaluation of sum(d[1..k]) > k(k-1) + sum_{i>k} min(k, d[i]).
inline bool direct_eg_violated(const degseq::DegreeSequence& seq, std::int64_t k) {
    std::int64_t lhs = 0;
    std::int64_t rhs = k * (k - 1);
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(seq.size()); ++i) {
        if (i < k)
            lhs += seq[static_cast<std::size_t>(i)];
        else
            rhs += std::min<std::int64_t>(k, seq[static_cast<std::size_t>(i)]);
    }
    return lhs > rhs;
}

inline std::int64_t rand_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Stats with max > min and a sum that lets both extremes be attained.
inline degseq::SequenceStats random_feasible_stats(std::mt19937_64& rng) {
    const std::int64_t n = rand_between(rng, 2, 60);
    const degseq::Degree min = rand_between(rng, 0, 15);
    const degseq::Degree span = rand_between(rng, 1, 20);
    const degseq::Degree max = min + span;
    const std::int64_t s = rand_between(rng, n * min + span, n * max - span);
    return degseq::SequenceStats{max, min, n, s};
}

inline degseq::DegreeSequence random_canonical(std::mt19937_64& rng, std::int64_t length) {
    std::vector<degseq::Degree> values;
    values.reserve(static_cast<std::size_t>(length));
    for (std::int64_t i = 0; i < length; ++i) {
        values.push_back(rand_between(rng, 0, std::max<std::int64_t>(length - 1, 0)));
    }
    return degseq::canonicalize(std::move(values));
}

}  // namespace testutil
