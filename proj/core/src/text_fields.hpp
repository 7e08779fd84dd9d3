#pragma once

#include <string_view>
#include <vector>

namespace sdn::detail {

// Whitespace-separated tokens of one line.
std::vector<std::string_view> split_fields(std::string_view line);

// Strict numeric parsing of a whole token; throws FormatError naming
// `what` and `line_no` on failure.
double parse_real(std::string_view token, std::string_view what, std::size_t line_no);
long parse_integer(std::string_view token, std::string_view what, std::size_t line_no);

// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace sdn::detail
