#include "degseq/bench.hpp"

#include <chrono>

#include "degseq/erdos_gallai.hpp"

namespace degseq {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

}  // namespace

void BenchAccumulator::add(const DegreeSequence& seq) {
    const auto classify_start = Clock::now();
    const PipelineTrace trace = classify(seq);
    const std::int64_t classify_ns = elapsed_ns(classify_start);

    const auto baseline_start = Clock::now();
    const EgVerdict baseline = eg_full(seq);
    const std::int64_t baseline_ns = elapsed_ns(baseline_start);

    ++report_.total;
    ++report_.decided_by[static_cast<int>(trace.deciding_stage)];
    report_.stage_ns[static_cast<int>(trace.deciding_stage)] += classify_ns;
    report_.classify_ns += classify_ns;
    report_.baseline_ns += baseline_ns;
    if (trace.graphic != baseline.graphic) report_.agreement = false;
}

BenchReport run_bench(std::span<const DegreeSequence> corpus, int repeat) {
    BenchAccumulator acc;
    for (int r = 0; r < repeat; ++r) {
        for (const DegreeSequence& seq : corpus) acc.add(seq);
    }
    acc.report().repeat = repeat;
    return acc.report();
}

}  // namespace degseq
