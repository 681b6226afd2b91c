#include "degseq/int128.hpp"

#include <algorithm>

namespace degseq {

std::string to_string(WideInt value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Peel digits from the magnitude; negate digit-wise to survive the
    // minimum value, where -value overflows.
    std::string digits;
    WideInt v = value;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        v /= 10;
        digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace degseq
