#pragma once

#include <string>

namespace degseq {

// Exact signed wide arithmetic for bound cross-products, whose magnitudes
// reach ~n^3 * max_degree^2 and must never be rounded.
using WideInt = __int128;

std::string to_string(WideInt value);

}  // namespace degseq
