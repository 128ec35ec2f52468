#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tablecast::csv {

/// Splits one CSV record. Double-quoted fields may contain commas and
/// doubled quotes; unquoted fields are trimmed of surrounding blanks.
/// Returns false on an unterminated quote.
bool split_line(std::string_view line, std::vector<std::string>& fields);

/// Quotes a field only when it contains a comma, quote or line break.
std::string escape(std::string_view field);

/// Strips a trailing '\r' and a leading UTF-8 byte order mark if present.
std::string_view clean_line(std::string_view line, bool first_line);

bool is_blank(std::string_view line);

}  // namespace tablecast::csv
