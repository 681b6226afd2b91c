#include "degseq/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "degseq/int128.hpp"

namespace degseq {

NegativeDegree::NegativeDegree(std::size_t index_, Degree value_)
    : std::invalid_argument("negative degree " + std::to_string(value_) + " at position " +
                            std::to_string(index_)),
      index(index_),
      value(value_) {}

EmptySequence::EmptySequence() : std::invalid_argument("empty degree sequence") {}

DegreeExceedsOrder::DegreeExceedsOrder(Degree max_degree_, std::int64_t length_)
    : std::invalid_argument("degree " + std::to_string(max_degree_) + " exceeds order-1 = " +
                            std::to_string(length_ - 1)),
      max_degree(max_degree_),
      length(length_) {}

RegularSequence::RegularSequence()
    : std::invalid_argument("stats describe a regular sequence (max == min)") {}

InfeasibleStats::InfeasibleStats(const std::string& what) : std::invalid_argument(what) {}

DegreeSequence DegreeSequence::from_nonincreasing(std::vector<Degree> degrees) {
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 0) throw NegativeDegree(i, degrees[i]);
        if (i > 0 && degrees[i - 1] < degrees[i])
            throw std::invalid_argument("degree list is not nonincreasing at position " +
                                        std::to_string(i));
    }
    return DegreeSequence(std::move(degrees));
}

DegreeSequence canonicalize(std::vector<Degree> raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) throw NegativeDegree(i, raw[i]);
    }
    std::sort(raw.begin(), raw.end(), std::greater<Degree>());
    return DegreeSequence::from_nonincreasing(std::move(raw));
}

DegreeSequence strip_zeros(const DegreeSequence& seq) {
    // Canonical order puts all zeros at the tail.
    const auto& v = seq.values();
    auto first_zero = std::lower_bound(v.begin(), v.end(), 0, std::greater<Degree>());
    return DegreeSequence::from_nonincreasing(std::vector<Degree>(v.begin(), first_zero));
}

SequenceStats stats(const DegreeSequence& seq) {
    if (seq.empty()) throw EmptySequence();
    const auto& v = seq.values();
    return SequenceStats{
        .max_degree = v.front(),
        .min_degree = v.back(),
        .length = static_cast<std::int64_t>(v.size()),
        .degree_sum = std::accumulate(v.begin(), v.end(), std::int64_t{0}),
    };
}

DegreeSequence complement(const DegreeSequence& seq) {
    const auto n = static_cast<std::int64_t>(seq.size());
    if (n > 0 && seq[0] > n - 1) throw DegreeExceedsOrder(seq[0], n);
    std::vector<Degree> out;
    out.reserve(seq.size());
    // Reversal restores nonincreasing order.
    for (auto it = seq.values().rbegin(); it != seq.values().rend(); ++it) {
        out.push_back(n - *it - 1);
    }
    return DegreeSequence::from_nonincreasing(std::move(out));
}

MajorizationResult majorizes(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.size() != b.size()) return {false, Ordering::Incomparable};
    std::int64_t prefix_a = 0;
    std::int64_t prefix_b = 0;
    bool a_dominates = true;
    bool b_dominates = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        prefix_a += a[i];
        prefix_b += b[i];
        if (prefix_a < prefix_b) a_dominates = false;
        if (prefix_b < prefix_a) b_dominates = false;
    }
    if (prefix_a != prefix_b) return {false, Ordering::Incomparable};  // sums differ
    if (a_dominates && b_dominates) return {true, Ordering::Equal};
    if (a_dominates) return {true, Ordering::Majorizes};
    if (b_dominates) return {true, Ordering::MajorizedBy};
    return {false, Ordering::Incomparable};
}

DegreeSequence threshold_majorant(const SequenceStats& st) {
    if (st.max_degree == st.min_degree) throw RegularSequence();
    const std::int64_t n = st.length;
    // Length-times-degree products can exceed 64 bits for stats built by hand.
    const WideInt low = WideInt{n} * st.min_degree;
    const WideInt high = WideInt{n} * st.max_degree;
    if (st.degree_sum < low || st.degree_sum > high) {
        throw InfeasibleStats("sum " + std::to_string(st.degree_sum) + " outside [" +
                              to_string(low) + ", " + to_string(high) + "]");
    }
    // Unique split s = p*max + middle + (n-p-1)*min with max >= middle >= min.
    const std::int64_t span = st.max_degree - st.min_degree;
    const auto excess = static_cast<std::int64_t>(st.degree_sum - low);
    std::int64_t p = excess / span;
    const Degree middle = st.min_degree + excess % span;
    std::vector<Degree> out;
    out.reserve(static_cast<std::size_t>(n));
    if (p >= n) p = n;  // s == n*max: the max block fills everything
    out.insert(out.end(), static_cast<std::size_t>(p), st.max_degree);
    if (p < n) {
        out.push_back(middle);
        out.insert(out.end(), static_cast<std::size_t>(n - p - 1), st.min_degree);
    }
    return DegreeSequence::from_nonincreasing(std::move(out));
}

std::string to_string(const DegreeSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(seq[i]);
    }
    return out;
}

}  // namespace degseq
