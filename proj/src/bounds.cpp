#include "degseq/bounds.hpp"

#include <numeric>

namespace degseq {

BoundComparison span_bound_comparison(const SequenceStats& st) {
    const WideInt a1 = st.max_degree;
    const WideInt an = st.min_degree;
    const WideInt n = st.length;
    const WideInt s = st.degree_sum;
    const WideInt max_slack = n * a1 - s;  // > 0 by precondition
    const WideInt min_slack = s - n * an;  // > 0 by precondition
    BoundComparison cmp;
    cmp.lhs_cross = (a1 - an) * ((n - a1 - 1) * min_slack + an * max_slack);
    cmp.rhs_cross = max_slack * min_slack;
    cmp.satisfied = cmp.lhs_cross >= cmp.rhs_cross;
    return cmp;
}

BoundVerdict near_regular_check(const SequenceStats& st) {
    // The rule presumes a realizable degree range; <2,2> is near-regular but
    // not graphic.  The pipeline filters this earlier, direct callers may not.
    if (st.max_degree > st.length - 1) return {BoundOutcome::NotApplicable, NaReason::DegreeRange};
    if (st.max_degree - st.min_degree <= 1) return {BoundOutcome::Graphic, NaReason::None};
    return {BoundOutcome::Inconclusive, NaReason::None};
}

BoundVerdict zverovich_check(const SequenceStats& st) {
    if (st.min_degree < 1) return {BoundOutcome::NotApplicable, NaReason::ZeroMinDegree};
    const WideInt lhs = WideInt{4} * st.min_degree * st.length;
    const WideInt edge = WideInt{st.max_degree} + st.min_degree + 1;
    // Satisfying this inequality already forces max <= n-1.
    if (lhs >= edge * edge) return {BoundOutcome::Graphic, NaReason::None};
    return {BoundOutcome::Inconclusive, NaReason::None};
}

BoundVerdict span_bound_check(const SequenceStats& st) {
    if (st.max_degree > st.length - 1) return {BoundOutcome::NotApplicable, NaReason::DegreeRange};
    const WideInt max_slack = WideInt{st.length} * st.max_degree - st.degree_sum;
    const WideInt min_slack = WideInt{st.degree_sum} - WideInt{st.length} * st.min_degree;
    if (max_slack <= 0 || min_slack <= 0)
        return {BoundOutcome::NotApplicable, NaReason::RegularDenominator};
    if (span_bound_comparison(st).satisfied) return {BoundOutcome::Graphic, NaReason::None};
    return {BoundOutcome::Inconclusive, NaReason::None};
}

BoundVerdict span_bound_reordered_check(const SequenceStats& st) {
    if (st.max_degree > st.length - 1) return {BoundOutcome::NotApplicable, NaReason::DegreeRange};
    const WideInt a1 = st.max_degree;
    const WideInt an = st.min_degree;
    const WideInt n = st.length;
    const WideInt s = st.degree_sum;
    const WideInt span = a1 - an;
    if (span <= 0 || n * a1 - s <= 0 || s - n * an <= 0)
        return {BoundOutcome::NotApplicable, NaReason::RegularDenominator};
    const WideInt lhs = (1 + a1 + an) * (1 + a1 + an) * span * span - 4 * n * an * span * span;
    const WideInt inner = 2 * s - n * (n - 1) + (n - an - 1) * (n - an) - a1 * (a1 + 1);
    if (lhs <= inner * inner) return {BoundOutcome::Graphic, NaReason::None};
    return {BoundOutcome::Inconclusive, NaReason::None};
}

const char* stage_name(Stage stage) {
    switch (stage) {
        case Stage::ParityCheck: return "ParityCheck";
        case Stage::DegreeRangeCheck: return "DegreeRangeCheck";
        case Stage::NearRegular: return "NearRegular";
        case Stage::ZZBound: return "ZZBound";
        case Stage::CZBound: return "CZBound";
        case Stage::ErdosGallai: return "ErdosGallai";
    }
    return "?";
}

namespace {

BoundVerdict run_bound_stage(Stage stage, const SequenceStats& st) {
    switch (stage) {
        case Stage::NearRegular: return near_regular_check(st);
        case Stage::ZZBound: return zverovich_check(st);
        default: return span_bound_check(st);
    }
}

}  // namespace

PipelineTrace classify(const DegreeSequence& seq) {
    PipelineTrace trace;
    const DegreeSequence work = strip_zeros(seq);
    trace.stripped_zeros = static_cast<std::int64_t>(seq.size() - work.size());
    const auto n = static_cast<std::int64_t>(work.size());
    const std::int64_t sum =
        std::accumulate(work.begin(), work.end(), std::int64_t{0});

    // ParityCheck
    if (sum % 2 != 0) {
        trace.graphic = false;
        trace.deciding_stage = Stage::ParityCheck;
        trace.stage_results.push_back(
            {Stage::ParityCheck, EgVerdict{false, EgFailure::Parity, 0, {}}});
        return trace;
    }
    trace.stage_results.push_back({Stage::ParityCheck, BoundVerdict{BoundOutcome::Inconclusive}});

    // DegreeRangeCheck: after stripping, all entries are positive, so the
    // inequality at k = 1 reads max <= n - 1.
    if (n > 0 && work[0] > n - 1) {
        trace.graphic = false;
        trace.deciding_stage = Stage::DegreeRangeCheck;
        trace.stage_results.push_back(
            {Stage::DegreeRangeCheck, EgVerdict{false, EgFailure::Inequality, 1, {1}}});
        return trace;
    }
    trace.stage_results.push_back(
        {Stage::DegreeRangeCheck, BoundVerdict{BoundOutcome::Inconclusive}});

    // The three sufficient conditions, cheapest first.
    if (n > 0) {
        const SequenceStats st = stats(work);
        for (const Stage stage : {Stage::NearRegular, Stage::ZZBound, Stage::CZBound}) {
            const BoundVerdict verdict = run_bound_stage(stage, st);
            trace.stage_results.push_back({stage, verdict});
            if (verdict.outcome == BoundOutcome::Graphic) {
                trace.graphic = true;
                trace.deciding_stage = stage;
                return trace;
            }
        }
    } else {
        for (const Stage stage : {Stage::NearRegular, Stage::ZZBound, Stage::CZBound}) {
            trace.stage_results.push_back(
                {stage, BoundVerdict{BoundOutcome::NotApplicable, NaReason::EmptySequence}});
        }
    }

    // Complete fallback.
    EgVerdict verdict = eg_reduced(work);
    trace.graphic = verdict.graphic;
    trace.deciding_stage = Stage::ErdosGallai;
    trace.stage_results.push_back({Stage::ErdosGallai, std::move(verdict)});
    return trace;
}

}  // namespace degseq
