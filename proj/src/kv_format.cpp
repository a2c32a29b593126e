#include "kv_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "degraph/error.hpp"

namespace degraph::detail {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<KeyValue> parse_key_values(std::string_view text, const std::string& source) {
  std::vector<KeyValue> out;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::parse_error,
                  source + ":" + std::to_string(line_no) + ": expected `key = value`");
    }
    out.push_back({std::string(trim(line.substr(0, eq))),
                   std::string(trim(line.substr(eq + 1))), line_no});
    if (out.back().key.empty()) {
      throw Error(Errc::parse_error, source + ":" + std::to_string(line_no) + ": empty key");
    }
  }
  return out;
}

std::vector<std::string> split_list(std::string_view value, char sep) {
  std::vector<std::string> out;
  while (true) {
    const auto pos = value.find(sep);
    auto item = trim(value.substr(0, pos));
    if (!item.empty()) out.emplace_back(item);
    if (pos == std::string_view::npos) break;
    value = value.substr(pos + 1);
  }
  return out;
}

u64 parse_u64(std::string_view token, const std::string& context) {
  token = trim(token);
  u64 v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw Error(Errc::parse_error,
                context + ": `" + std::string(token) + "` is not a nonnegative integer");
  }
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace degraph::detail
