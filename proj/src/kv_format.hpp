#pragma once

// Shared reader for the line-oriented `key = value-list` data files.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degraph/arithmetic.hpp"

namespace degraph::detail {

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

/// Splits `text` into key/value lines. Blank lines and `#` comments are
/// skipped; anything else without an `=` is a parse error.
std::vector<KeyValue> parse_key_values(std::string_view text, const std::string& source);

std::vector<std::string> split_list(std::string_view value, char sep = ',');
std::string_view trim(std::string_view s);
u64 parse_u64(std::string_view token, const std::string& context);

std::string read_file(const std::filesystem::path& path);

}  // namespace degraph::detail
