#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/algebra.hpp"

namespace omega {

enum class AlgebraKind { Lie, Lsa };

std::string_view kind_name(AlgebraKind k);  // "lie" / "lsa"

struct ParameterSlot {
  std::string name;
  std::string default_value;  // empty: required over Q, bound to alpha over Q(alpha)
  std::string condition;      // human-readable side condition, may be empty
};

struct CatalogEntry {
  std::string name;
  AlgebraKind kind;
  std::size_t dim;        // fixed dimension, or the minimum when extensible
  bool extensible;        // P1/P2: dim = dimH + 3
  std::vector<ParameterSlot> slots;
  std::string description;
};

/// Parameter values as expressions: scalars (`alpha=1/2`, `a=2`), integers
/// (`dimH=3`) or vectors over the instance basis (`h1=h0 + f2`).
using CatalogParams = std::map<std::string, std::string>;

/// Side-condition violation or malformed parameter.
class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All built-in families in a fixed order: the ten perfect omega-Lie
/// families, then the two dim-3 omega-left-symmetric families.
const std::vector<CatalogEntry>& list_entries();
std::vector<CatalogEntry> list_entries(std::optional<AlgebraKind> kind, std::optional<std::size_t> dim = std::nullopt);
const CatalogEntry& find_entry(std::string_view name);

/// Builds the named algebra. Over Q(alpha) an unset `alpha` slot is the
/// formal parameter; over Q it must be given. Throws CatalogError on a side
/// condition, AxiomError when the instance fails its axiom check.
AnyAlgebra instantiate(std::string_view name, const CatalogParams& params = {}, Field field = Field::Q);
OmegaLieAlgebra instantiate_lie(std::string_view name, const CatalogParams& params = {}, Field field = Field::Q);
OmegaLsaAlgebra instantiate_lsa(std::string_view name, const CatalogParams& params = {}, Field field = Field::Q);

/// Names of the families carrying the alpha parameter.
bool has_alpha(std::string_view name);

}  // namespace omega
