#pragma once

#include <cstdint>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

enum class EgFailure { None, Parity, Inequality };

struct EgVerdict {
    bool graphic = false;
    EgFailure failure = EgFailure::None;
    // 1-based index k of the violated inequality when failure == Inequality;
    // re-evaluating sum(d[1..k]) <= k(k-1) + sum_{i>k} min(k, d[i]) at this k
    // reproduces the violation.
    std::int64_t witness = 0;
    std::vector<std::int64_t> checked_indices;
};

/// Indices whose inequalities suffice for the full characterization
/// (Tripathi-Vijay): positions where the value drops, plus the last index,
/// clipped to the Durfee cutoff m = max{k : d_k >= k}; falls back to {m}
/// when clipping empties the set.  Never empty for nonempty input.
std::vector<std::int64_t> reduction_indices(const DegreeSequence& seq);

/// Full Erdos-Gallai characterization: graphic iff the sum is even and the
/// inequality holds at every k.  One pass, O(n) total: prefix sums plus a
/// moving crossover index below which entries are < k.
EgVerdict eg_full(const DegreeSequence& seq);

/// Same verdict as eg_full but only evaluates the reduction_indices,
/// each via an O(log n) crossover search after O(n) prefix-sum setup.
EgVerdict eg_reduced(const DegreeSequence& seq);

}  // namespace degseq
