#pragma once

#include <stdexcept>
#include <string>

namespace degraph {

enum class Errc {
  invalid_argument,
  overflow,
  unsupported_family,
  unsupported,
  precondition,
  parse_error,
  unknown_claim,
  io_error,
};

const char* to_string(Errc code) noexcept;

/// Single exception type thrown by the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace degraph
