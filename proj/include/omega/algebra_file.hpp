#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "omega/algebra.hpp"
#include "omega/expression.hpp"

namespace omega {

// Text format:
//
//   # comment
//   kind  = lie            (lie | lsa)
//   field = Q(alpha)       (Q | Q(alpha), default Q)
//   dim   = 3
//   basis = x, y, z
//
//   [brackets]             ([products] for kind = lsa)
//   x,y = x
//   y,z = z + alpha*x
//
//   [omega]
//   y,z = -1
//
// Unlisted pairs are zero. For lie, listing both x,y and y,x is an error.

/// Parses without checking axioms. Throws ParseError.
AnyAlgebra parse_algebra_text(std::string_view text);

struct LoadError {
  enum class Kind { Syntax, Axiom };
  Kind kind = Kind::Syntax;
  std::string message;
  std::size_t line = 0;  // 0 when not tied to a position
  std::size_t column = 0;
  std::optional<AxiomReport> report;
};

struct LoadResult {
  std::optional<AnyAlgebra> algebra;
  std::optional<LoadError> error;
  bool ok() const { return algebra.has_value(); }
};

/// Parses and runs the axiom checker; never throws on bad input.
LoadResult load_algebra(std::string_view text);

std::string emit_algebra(const OmegaLieAlgebra& L, std::string_view comment = {});
std::string emit_algebra(const OmegaLsaAlgebra& A, std::string_view comment = {});
std::string emit_algebra(const AnyAlgebra& a, std::string_view comment = {});

}  // namespace omega
