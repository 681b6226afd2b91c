#include "degseq/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "degseq/int128.hpp"

namespace degseq {

ParameterTooSmall::ParameterTooSmall(Degree value_)
    : std::invalid_argument("family parameter " + std::to_string(value_) + " is below 3"),
      value(value_) {}

SharpnessInstance sharpness_family(Degree max_degree) {
    if (max_degree < 3) throw ParameterTooSmall(max_degree);
    const Degree a = max_degree;
    SharpnessInstance inst;
    inst.max_degree = a;

    // Boundary stats: min 2, length a+1, sum 4a-2; the bound holds with
    // exact equality, and the threshold shape realizes them.
    inst.base = threshold_majorant(SequenceStats{a, 2, a + 1, 4 * a - 2});

    std::vector<Degree> raised{a + 1, a - 1};
    raised.insert(raised.end(), static_cast<std::size_t>(a - 1), 2);
    inst.increase_max = canonicalize(std::move(raised));

    std::vector<Degree> shorter{a, a, 4};
    shorter.insert(shorter.end(), static_cast<std::size_t>(a - 3), 2);
    inst.decrease_length = canonicalize(std::move(shorter));

    std::vector<Degree> lowered{a, a, 3};
    lowered.insert(lowered.end(), static_cast<std::size_t>(a - 3), 2);
    lowered.push_back(1);
    inst.decrease_min = canonicalize(std::move(lowered));

    std::vector<Degree> heavier{a, a, 4};
    heavier.insert(heavier.end(), static_cast<std::size_t>(a - 2), 2);
    inst.increase_sum = canonicalize(std::move(heavier));

    return inst;
}

DegreeSequence random_with_stats(const SequenceStats& st, std::uint64_t seed) {
    const std::int64_t n = st.length;
    const Degree span = st.max_degree - st.min_degree;
    if (span <= 0) throw InfeasibleStats("max_degree must exceed min_degree");
    if (n < 2) throw InfeasibleStats("length must be at least 2 to pin both extremes");
    const WideInt low = WideInt{n} * st.min_degree + span;
    const WideInt high = WideInt{n} * st.max_degree - span;
    if (st.degree_sum < low || st.degree_sum > high) {
        throw InfeasibleStats("sum " + std::to_string(st.degree_sum) + " outside attainable [" +
                              to_string(low) + ", " + to_string(high) + "]");
    }

    // Pin one max and one min, then spread the residual over the middle with
    // bounded random increments; the final sort restores canonical order.
    std::mt19937_64 rng(seed);
    std::vector<Degree> out;
    out.reserve(static_cast<std::size_t>(n));
    out.push_back(st.max_degree);
    std::int64_t residual = st.degree_sum - st.max_degree - (n - 1) * st.min_degree;
    for (std::int64_t i = 0; i < n - 2; ++i) {
        const std::int64_t capacity_after = (n - 3 - i) * span;
        const std::int64_t lo = std::max<std::int64_t>(0, residual - capacity_after);
        const std::int64_t hi = std::min<std::int64_t>(span, residual);
        std::uniform_int_distribution<std::int64_t> pick(lo, hi);
        const std::int64_t bump = pick(rng);
        out.push_back(st.min_degree + bump);
        residual -= bump;
    }
    out.push_back(st.min_degree);
    std::sort(out.begin(), out.end(), std::greater<Degree>());
    return DegreeSequence::from_nonincreasing(std::move(out));
}

}  // namespace degseq
