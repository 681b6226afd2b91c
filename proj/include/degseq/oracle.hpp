#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "degseq/bounds.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// A simple graph realizing a degree sequence: vertex i has the i-th degree.
struct Realization {
    std::int64_t vertex_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;  // u < v, no duplicates
};

/// Constructive test: connects the highest-degree vertex to the next-highest
/// ones, keeping the working array sorted by decrementing the rightmost
/// members of each equal-value run.  O(n^2); returns nothing when the
/// sequence is not graphic.  Shares no code with the inequality checks.
std::optional<Realization> havel_hakimi(const DegreeSequence& seq);

/// Streams every nonincreasing sequence of the given length with entries in
/// [0, max_degree], each exactly once, in lexicographically decreasing order.
class SequenceEnumerator {
public:
    SequenceEnumerator(std::int64_t length, Degree max_degree);
    std::optional<DegreeSequence> next();

private:
    std::vector<Degree> current_;
    bool started_ = false;
    bool done_ = false;
};

struct OracleDisagreement : std::runtime_error {
    OracleDisagreement(const DegreeSequence& seq, const std::string& detail);
    std::vector<Degree> sequence;
};

struct CrossCheckReport {
    std::int64_t max_length = 0;
    std::int64_t sequences = 0;
    std::int64_t graphic = 0;
    std::array<std::int64_t, kStageCount> decided_by{};
    std::int64_t disagreements = 0;  // a nonzero count is never returned; see below
};

/// Largest length cross_check accepts; the space grows as C(2n-1, n), which
/// is ~1.35M sequences at 12 and quadruples with each further step.
inline constexpr std::int64_t kExhaustiveLimit = 12;

/// Exhaustively enumerates every sequence with length <= n_max and entries
/// <= length-1, asserting that eg_full, eg_reduced, and havel_hakimi agree
/// and that no pipeline stage claims graphic for an unrealizable sequence.
/// Throws OracleDisagreement at the first conflict instead of tallying it,
/// and std::invalid_argument when n_max exceeds kExhaustiveLimit.
CrossCheckReport cross_check(std::int64_t n_max);

}  // namespace degseq
