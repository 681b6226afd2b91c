#include "degseq/oracle.hpp"

#include <algorithm>
#include <string>

#include "degseq/erdos_gallai.hpp"

namespace degseq {

namespace {

struct Slot {
    Degree remaining;
    std::int64_t vertex;
};

}  // namespace

std::optional<Realization> havel_hakimi(const DegreeSequence& seq) {
    Realization graph;
    graph.vertex_count = static_cast<std::int64_t>(seq.size());
    std::vector<Slot> slots;
    slots.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        slots.push_back({seq[i], static_cast<std::int64_t>(i)});
    }
    // slots stays sorted by remaining degree, nonincreasing.
    while (!slots.empty() && slots.front().remaining > 0) {
        const Slot head = slots.front();
        slots.erase(slots.begin());
        const auto d = static_cast<std::size_t>(head.remaining);
        if (d > slots.size()) return std::nullopt;
        if (slots[d - 1].remaining == 0) return std::nullopt;  // not enough partners
        // Connect to the d largest.  Within each run of equal values,
        // decrement the rightmost members so the order survives in place.
        std::size_t i = 0;
        while (i < d) {
            const Degree value = slots[i].remaining;
            std::size_t run_end = i;
            while (run_end + 1 < slots.size() && slots[run_end + 1].remaining == value) ++run_end;
            const std::size_t count = std::min(d - 1, run_end) - i + 1;
            for (std::size_t t = 0; t < count; ++t) {
                Slot& partner = slots[run_end - t];
                --partner.remaining;
                graph.edges.emplace_back(std::min(head.vertex, partner.vertex),
                                         std::max(head.vertex, partner.vertex));
            }
            i += count;
        }
    }
    return graph;
}

SequenceEnumerator::SequenceEnumerator(std::int64_t length, Degree max_degree)
    : current_(static_cast<std::size_t>(length), max_degree) {}

std::optional<DegreeSequence> SequenceEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return DegreeSequence::from_nonincreasing(current_);
    }
    // Successor in decreasing lexicographic order: decrement the rightmost
    // positive entry and raise the tail to the new value (the largest valid
    // completion).
    std::size_t i = current_.size();
    while (i > 0 && current_[i - 1] == 0) --i;
    if (i == 0) {
        done_ = true;
        return std::nullopt;
    }
    const Degree value = current_[i - 1] - 1;
    for (std::size_t j = i - 1; j < current_.size(); ++j) current_[j] = value;
    return DegreeSequence::from_nonincreasing(current_);
}

OracleDisagreement::OracleDisagreement(const DegreeSequence& seq, const std::string& detail)
    : std::runtime_error("oracle disagreement on <" + degseq::to_string(seq) + ">: " + detail),
      sequence(seq.values()) {}

CrossCheckReport cross_check(std::int64_t n_max) {
    if (n_max > kExhaustiveLimit) {
        throw std::invalid_argument("n_max " + std::to_string(n_max) +
                                    " exceeds the exhaustive limit " +
                                    std::to_string(kExhaustiveLimit));
    }
    CrossCheckReport report;
    report.max_length = n_max;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        SequenceEnumerator enumerator(n, std::max<Degree>(n - 1, 0));
        while (auto seq = enumerator.next()) {
            ++report.sequences;
            const bool realizable = havel_hakimi(*seq).has_value();
            const EgVerdict full = eg_full(*seq);
            const EgVerdict reduced = eg_reduced(*seq);
            if (full.graphic != realizable) {
                throw OracleDisagreement(*seq, std::string("eg_full says ") +
                                                   (full.graphic ? "graphic" : "non-graphic") +
                                                   ", construction disagrees");
            }
            if (reduced.graphic != full.graphic) {
                throw OracleDisagreement(*seq, "eg_reduced disagrees with eg_full");
            }
            const PipelineTrace trace = classify(*seq);
            if (trace.graphic != realizable) {
                throw OracleDisagreement(*seq, std::string("pipeline says ") +
                                                   (trace.graphic ? "graphic" : "non-graphic") +
                                                   " at " + stage_name(trace.deciding_stage) +
                                                   ", construction disagrees");
            }
            if (realizable) ++report.graphic;
            ++report.decided_by[static_cast<int>(trace.deciding_stage)];
        }
    }
    return report;
}

}  // namespace degseq
