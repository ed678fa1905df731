#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "waring/polynomial.hpp"

namespace waring {

// Raised for any malformed expression. position() is a byte offset into the
// source text (0-based, always < text length).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar, loosest binding first:
//   sum     := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' INTEGER)?
//   atom    := INTEGER | 'x' INDEX | '(' sum ')'
// Variables are x1, x2, ...; there is no implicit multiplication.
// The result lives in Z[x1..xm] with m = max(highest index seen, hint, 1).
Polynomial parse_poly(std::string_view text, std::optional<std::size_t> num_vars_hint = std::nullopt);

}  // namespace waring
