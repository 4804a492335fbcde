#pragma once

#include <stdexcept>
#include <string>

namespace wpd {

enum class ErrorKind {
  dimension_mismatch,
  not_hermitian,
  invalid_state,
  not_unitary,
  out_of_range,
  degenerate_branch,
  parse_error,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception type thrown by every validating operation in the library.
class DualityError : public std::runtime_error {
 public:
  DualityError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wpd
