#pragma once

#include <cstdint>
#include <stdexcept>

#include "degseq/sequence.hpp"

namespace degseq {

struct ParameterTooSmall : std::invalid_argument {
    explicit ParameterTooSmall(Degree value);
    Degree value;
};

/// One member of the sharpness family: the base sequence meets the span
/// bound with exact equality, and bending any single parameter of
/// (max, min, length, sum) past the boundary yields a non-graphic sequence.
struct SharpnessInstance {
    Degree max_degree = 0;
    DegreeSequence base;             // <a, a, 2, ..., 2> of length a+1, sum 4a-2
    DegreeSequence increase_max;     // max raised by one
    DegreeSequence decrease_length;  // one entry shorter, same max/min/sum
    DegreeSequence decrease_min;     // min lowered to one
    DegreeSequence increase_sum;     // sum raised by two
};

/// Builds the family for max_degree >= 3 (ParameterTooSmall below that;
/// the boundary equality needs a span of at least one and positive
/// denominators, which first happens at 3).
SharpnessInstance sharpness_family(Degree max_degree);

/// A pseudo-random canonical sequence attaining exactly the requested
/// extremes, length and sum, entries within [min_degree, max_degree].
/// Deterministic for a fixed (stats, seed) pair.  Requires
/// max > min, n >= 2, and n*min + span <= sum <= n*max - span so both
/// extremes can be pinned (InfeasibleStats otherwise).
DegreeSequence random_with_stats(const SequenceStats& st, std::uint64_t seed);

}  // namespace degseq
