#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "omega/scalar.hpp"

namespace omega {

/// Syntax or name error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Where an expression sits in a larger document, for error positions.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Scalar literal grammar: integers, `p/q`, `alpha` (only over Q(alpha)),
/// `+ - * / ^` and parentheses. Exponents are integer literals.
Scalar parse_scalar(std::string_view text, Field field, SourcePos at = {});

/// A linear combination of basis names with scalar coefficients, e.g.
/// `z + alpha*x` or `(alpha+1)/2*y - h0`. The literal `0` is the zero vector.
/// Returns coordinates with respect to `names`.
Vector parse_linear_combination(std::string_view text, Field field, std::span<const std::string> names,
                                SourcePos at = {});

bool is_identifier(std::string_view name);

/// Renders coordinates as a linear combination that parse_linear_combination
/// reads back exactly.
std::string format_linear_combination(const Vector& v, std::span<const std::string> names);

}  // namespace omega
