// Hex parsing and formatting. Parsers accept upper or lower case and
// require the exact digit count; formatters emit lower case.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kasumi {

// Parses exactly `digits` hex digits. Throws std::invalid_argument with a
// width diagnostic naming `what` on any violation.
uint64_t parse_hex(std::string_view s, int digits, const char* what);

std::string to_hex(uint64_t v, int digits);

}  // namespace kasumi
