#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coauth::io {

/// Quotes a field when it contains a comma, quote, CR or LF (RFC 4180).
std::string csv_field(std::string_view s);

/// Reads one logical record; quoted fields may span lines. Returns nullopt
/// at end of input. `line` is advanced past the physical lines consumed.
/// Throws ParseError on an unterminated quote or stray quote character.
std::optional<std::vector<std::string>> read_csv_record(std::istream& in, std::size_t& line);

}  // namespace coauth::io
