#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "keller/poly.hpp"

namespace keller {

// Positioned parse failure; thrown by parse_polynomial for every malformed
// input (parsing never crashes or accepts garbage).
class parse_error : public error {
 public:
  parse_error(std::size_t position, std::string expected, std::string found)
      : error("parse error at offset " + std::to_string(position) + ": expected " +
              expected + ", found " + (found.empty() ? "end of input" : "'" + found + "'")),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

// Grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nonneg-int)?      -- '^' is non-associative
//   base     := rational | name | '(' expr ')'
//   rational := int ('/' int)?
// Variable names must be declared in the ring; implicit multiplication is
// not accepted.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Canonical text form: terms descending under the ring order, explicit '^'
// and '*', rational coefficients. parse_polynomial(to_string(p)) == p.
std::string to_string(const Polynomial& p);

}  // namespace keller
