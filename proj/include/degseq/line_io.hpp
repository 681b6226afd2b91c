#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

/// One line of batch input: integers separated by whitespace and/or commas.
/// Blank lines and lines starting with '#' are Blank; a malformed token
/// yields Error with a message naming it.
struct ParsedLine {
    enum class Kind { Values, Blank, Error };
    Kind kind = Kind::Blank;
    std::vector<Degree> values;
    std::string error;
};

ParsedLine parse_degree_line(std::string_view line);

}  // namespace degseq
