#include "degseq/line_io.hpp"

#include <cctype>
#include <charconv>

namespace degseq {

ParsedLine parse_degree_line(std::string_view line) {
    ParsedLine parsed;
    std::size_t pos = 0;
    const auto is_separator = [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c));
    };
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size() || line[pos] == '#') return parsed;  // Blank

    while (pos < line.size()) {
        while (pos < line.size() && is_separator(line[pos])) ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && !is_separator(line[end])) ++end;
        const std::string_view token = line.substr(pos, end - pos);
        Degree value = 0;
        const auto [rest, ec] = std::from_chars(token.begin(), token.end(), value);
        if (ec != std::errc{} || rest != token.end()) {
            parsed.kind = ParsedLine::Kind::Error;
            parsed.error = "invalid integer '" + std::string(token) + "'";
            return parsed;
        }
        parsed.values.push_back(value);
        pos = end;
    }
    parsed.kind = parsed.values.empty() ? ParsedLine::Kind::Blank : ParsedLine::Kind::Values;
    return parsed;
}

}  // namespace degseq
