#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "degseq/erdos_gallai.hpp"
#include "degseq/int128.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

enum class BoundOutcome { Graphic, Inconclusive, NotApplicable };

enum class NaReason { None, ZeroMinDegree, DegreeRange, RegularDenominator, EmptySequence };

struct BoundVerdict {
    BoundOutcome outcome = BoundOutcome::Inconclusive;
    NaReason reason = NaReason::None;
};

/// Exact cross-multiplied evaluation of the span bound
///   (a1 - an) * ( (n-a1-1)/(n*a1 - s) + an/(s - n*an) ) >= 1
/// with both denominators positive, so the inequality is preserved:
///   lhs_cross = (a1-an) * ((n-a1-1)(s-n*an) + an(n*a1-s))
///   rhs_cross = (n*a1-s)(s-n*an)
/// Only defined when n*a1 > s and s > n*an.
struct BoundComparison {
    WideInt lhs_cross = 0;
    WideInt rhs_cross = 0;
    bool satisfied = false;  // lhs_cross >= rhs_cross
};

BoundComparison span_bound_comparison(const SequenceStats& st);

/// Near-regular rule: a gap of at most one with an even sum is graphic.
/// Callers guarantee an even sum from a zero-stripped, nonempty sequence.
BoundVerdict near_regular_check(const SequenceStats& st);

/// Zverovich-Zverovich length bound, exact integer form
///   4 * min * n >= (max + min + 1)^2.
/// Requires strictly positive degrees (NotApplicable with ZeroMinDegree
/// otherwise); even sum is a caller guarantee.
BoundVerdict zverovich_check(const SequenceStats& st);

/// The generalized sufficient condition on (max, min, length, sum).
/// NotApplicable when max > n-1 (the range restriction cannot be relaxed)
/// or when either denominator vanishes (regular sequences are routed to the
/// near-regular rule instead).
BoundVerdict span_bound_check(const SequenceStats& st);

/// Algebraically reordered form of the same condition,
///   (1+a1+an)^2 d^2 - 4 n an d^2 <= (2s - n(n-1) + (n-an-1)(n-an) - a1(a1+1))^2
/// with d = a1 - an; kept as an independent evaluation path for
/// cross-validation of span_bound_check.
BoundVerdict span_bound_reordered_check(const SequenceStats& st);

enum class Stage {
    ParityCheck,
    DegreeRangeCheck,
    NearRegular,
    ZZBound,
    CZBound,
    ErdosGallai,
};

inline constexpr int kStageCount = 6;

const char* stage_name(Stage stage);

struct StageRecord {
    Stage stage;
    std::variant<BoundVerdict, EgVerdict> result;
};

/// Definitive verdict plus the per-stage record of how it was reached.
/// Every stage recorded before deciding_stage was Inconclusive or
/// NotApplicable.
struct PipelineTrace {
    bool graphic = false;
    Stage deciding_stage = Stage::ErdosGallai;
    std::vector<StageRecord> stage_results;
    std::int64_t stripped_zeros = 0;
};

/// Short-circuiting decision pipeline: strip zeros, then run
/// parity -> degree range -> near-regular -> length bound -> span bound,
/// cheapest first, falling back to the reduced Erdos-Gallai check.
/// Never inconclusive.
PipelineTrace classify(const DegreeSequence& seq);

}  // namespace degseq
