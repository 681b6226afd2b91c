#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace degseq {

using Degree = std::int64_t;

struct NegativeDegree : std::invalid_argument {
    NegativeDegree(std::size_t index, Degree value);
    std::size_t index;
    Degree value;
};

struct EmptySequence : std::invalid_argument {
    EmptySequence();
};

struct DegreeExceedsOrder : std::invalid_argument {
    DegreeExceedsOrder(Degree max_degree, std::int64_t length);
    Degree max_degree;
    std::int64_t length;
};

struct RegularSequence : std::invalid_argument {
    RegularSequence();
};

struct InfeasibleStats : std::invalid_argument {
    explicit InfeasibleStats(const std::string& what);
};

/// A degree sequence: nonnegative integers in nonincreasing order.
/// The empty sequence is valid (degree list of the empty graph).
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Wraps an already-sorted vector; throws if an entry is negative or the
    /// order is not nonincreasing.
    static DegreeSequence from_nonincreasing(std::vector<Degree> degrees);

    const std::vector<Degree>& values() const { return degrees_; }
    std::size_t size() const { return degrees_.size(); }
    bool empty() const { return degrees_.empty(); }
    Degree operator[](std::size_t i) const { return degrees_[i]; }
    auto begin() const { return degrees_.begin(); }
    auto end() const { return degrees_.end(); }

    bool operator==(const DegreeSequence&) const = default;

private:
    explicit DegreeSequence(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {}
    std::vector<Degree> degrees_;
};

/// Sorts a raw degree list into canonical nonincreasing order.
/// Throws NegativeDegree naming the first offending position of the raw input.
DegreeSequence canonicalize(std::vector<Degree> raw);

/// Drops trailing zero entries (isolated vertices); graphicality is unchanged.
DegreeSequence strip_zeros(const DegreeSequence& seq);

/// The four numbers every bound in this library is driven by.
struct SequenceStats {
    Degree max_degree = 0;
    Degree min_degree = 0;
    std::int64_t length = 0;
    std::int64_t degree_sum = 0;

    bool operator==(const SequenceStats&) const = default;
};

/// Throws EmptySequence; stats of an empty sequence are undefined.
SequenceStats stats(const DegreeSequence& seq);

/// Complement sequence <n-d_n-1, ..., n-d_1-1>; an involution whenever
/// max_degree <= n-1 (throws DegreeExceedsOrder otherwise).
DegreeSequence complement(const DegreeSequence& seq);

enum class Ordering { Majorizes, MajorizedBy, Equal, Incomparable };

struct MajorizationResult {
    bool comparable = false;
    Ordering direction = Ordering::Incomparable;
};

/// Prefix-sum dominance between equal-length, equal-sum sequences.
/// A length or sum mismatch is reported as incomparable, not as an error.
MajorizationResult majorizes(const DegreeSequence& a, const DegreeSequence& b);

/// The threshold-shaped sequence (block of max values, one middle value,
/// block of min values) that majorizes every sequence sharing these stats
/// with entries in [min_degree, max_degree].  Requires max_degree > min_degree
/// (RegularSequence otherwise) and a sum within [n*min, n*max]
/// (InfeasibleStats otherwise).
DegreeSequence threshold_majorant(const SequenceStats& st);

std::string to_string(const DegreeSequence& seq);

}  // namespace degseq
