#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "degseq/bounds.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Per-stage decision tallies and timings for the pipeline against a
/// full-check-only baseline over the same sequences.
struct BenchReport {
    std::int64_t total = 0;  // sequences processed, repeats included
    int repeat = 1;
    std::array<std::int64_t, kStageCount> decided_by{};
    std::array<std::int64_t, kStageCount> stage_ns{};  // classify time billed to its deciding stage
    std::int64_t classify_ns = 0;
    std::int64_t baseline_ns = 0;
    bool agreement = true;  // pipeline verdict == full-check verdict everywhere

    double classify_mean_ns() const { return total ? double(classify_ns) / double(total) : 0.0; }
    double baseline_mean_ns() const { return total ? double(baseline_ns) / double(total) : 0.0; }
    double fraction(Stage stage) const {
        return total ? double(decided_by[static_cast<int>(stage)]) / double(total) : 0.0;
    }
};

/// Streaming tally: feed sequences one at a time so corpora need not be
/// held in memory.
class BenchAccumulator {
public:
    void add(const DegreeSequence& seq);
    const BenchReport& report() const { return report_; }
    BenchReport& report() { return report_; }

private:
    BenchReport report_;
};

BenchReport run_bench(std::span<const DegreeSequence> corpus, int repeat);

}  // namespace degseq
