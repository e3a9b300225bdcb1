#pragma once

#include <stdexcept>
#include <string>

namespace fibercover {

enum class ErrorKind {
  malformed_cycle,
  out_of_range,
  degree_mismatch,
  syntax,
  validation,
  inconsistent_cover,
  label_conflict,
  label_order_conflict,
  base_genus_mismatch,
  not_belyi_pair,
  inconsistent_dessin,
  resolution_failure,
  tracking_failure,
  monodromy_inconsistency,
  internal_inconsistency,
  invalid_argument,
  io,
};

const char* to_string(ErrorKind kind);

// Process exit code for an error escaping to the command line:
// 1 parse/validation, 2 numerical failure.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  // `column` is 1-based; 0 means no position is attached.
  Error(ErrorKind kind, const std::string& what, std::size_t column)
      : std::runtime_error(what), kind_(kind), column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t column() const noexcept { return column_; }

private:
  ErrorKind kind_;
  std::size_t column_ = 0;
};

}  // namespace fibercover
