#include "degseq/erdos_gallai.hpp"

#include <algorithm>
#include <numeric>

namespace degseq {

namespace {

std::vector<std::int64_t> prefix_sums(const DegreeSequence& seq) {
    std::vector<std::int64_t> prefix(seq.size() + 1, 0);
    for (std::size_t i = 0; i < seq.size(); ++i) prefix[i + 1] = prefix[i] + seq[i];
    return prefix;
}

// Right-hand side of the inequality at k, given t = number of entries >= k.
// Entries at positions k+1..t contribute k each; the rest contribute
// themselves via the prefix sums.
std::int64_t rhs_at(std::int64_t k, std::int64_t t, const std::vector<std::int64_t>& prefix) {
    const std::int64_t n = static_cast<std::int64_t>(prefix.size()) - 1;
    const std::int64_t capped = std::max<std::int64_t>(t - k, 0);
    return k * (k - 1) + k * capped + (prefix[static_cast<std::size_t>(n)] -
                                       prefix[static_cast<std::size_t>(k + capped)]);
}

}  // namespace

std::vector<std::int64_t> reduction_indices(const DegreeSequence& seq) {
    const auto n = static_cast<std::int64_t>(seq.size());
    if (n == 0) return {};
    // d_k - k is strictly decreasing, so {k : d_k >= k} is a prefix; find its
    // end by binary search.
    std::int64_t lo = 0, hi = n;  // invariant: d at [1..lo] >= index, fails after hi
    while (lo < hi) {
        const std::int64_t mid = (lo + hi + 1) / 2;
        if (seq[static_cast<std::size_t>(mid - 1)] >= mid)
            lo = mid;
        else
            hi = mid - 1;
    }
    const std::int64_t m = std::max<std::int64_t>(lo, 1);
    std::vector<std::int64_t> indices;
    for (std::int64_t i = 1; i < std::min(m + 1, n); ++i) {
        if (seq[static_cast<std::size_t>(i - 1)] > seq[static_cast<std::size_t>(i)])
            indices.push_back(i);
    }
    if (n <= m) indices.push_back(n);
    if (indices.empty()) indices.push_back(m);
    return indices;
}

EgVerdict eg_full(const DegreeSequence& seq) {
    EgVerdict verdict;
    const auto n = static_cast<std::int64_t>(seq.size());
    const auto prefix = prefix_sums(seq);
    if (prefix.back() % 2 != 0) {
        verdict.failure = EgFailure::Parity;
        return verdict;
    }
    verdict.checked_indices.reserve(static_cast<std::size_t>(n));
    std::int64_t t = n;  // count of entries >= k; only ever moves left
    for (std::int64_t k = 1; k <= n; ++k) {
        while (t >= 1 && seq[static_cast<std::size_t>(t - 1)] < k) --t;
        verdict.checked_indices.push_back(k);
        if (prefix[static_cast<std::size_t>(k)] > rhs_at(k, t, prefix)) {
            verdict.failure = EgFailure::Inequality;
            verdict.witness = k;
            return verdict;
        }
    }
    verdict.graphic = true;
    return verdict;
}

EgVerdict eg_reduced(const DegreeSequence& seq) {
    EgVerdict verdict;
    const auto prefix = prefix_sums(seq);
    if (prefix.back() % 2 != 0) {
        verdict.failure = EgFailure::Parity;
        return verdict;
    }
    const auto& v = seq.values();
    for (const std::int64_t k : reduction_indices(seq)) {
        // First position with value < k, i.e. the count of entries >= k.
        const auto it =
            std::lower_bound(v.begin(), v.end(), k, [](Degree d, std::int64_t key) { return d >= key; });
        const auto t = static_cast<std::int64_t>(it - v.begin());
        verdict.checked_indices.push_back(k);
        if (prefix[static_cast<std::size_t>(k)] > rhs_at(k, t, prefix)) {
            verdict.failure = EgFailure::Inequality;
            verdict.witness = k;
            return verdict;
        }
    }
    verdict.graphic = true;
    return verdict;
}

}  // namespace degseq
