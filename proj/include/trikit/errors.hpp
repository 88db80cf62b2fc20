#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trikit {

enum class ErrorKind {
  malformed_facet,
  empty_complex,
  dimension,
  missing_simplex,
  join_collision,
  unknown_vertex,
  redundant_vertex,
  not_a_pseudomanifold,
  unknown_fixture,
  invalid_coefficient,
  connectivity,
  hypothesis,
  unsupported_input,
  degenerate_input,
  parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trikit
