#pragma once

#include <optional>
#include <span>
#include <vector>

#include "omega/mpoly.hpp"

namespace omega {

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;   // removed by the coprime or chain criterion
  std::uint32_t max_degree = 0;    // largest S-pair lcm degree reduced
};

struct GroebnerResult {
  /// Reduced basis with monic leading terms, sorted by increasing leading
  /// monomial. Meaningless when cap_exceeded.
  std::vector<MultivariatePolynomial> basis;
  bool cap_exceeded = false;
  GroebnerStats stats;
};

/// Full normal form of f modulo `basis` (leading-term reduction, then tail).
MultivariatePolynomial reduce(const MultivariatePolynomial& f, std::span<const MultivariatePolynomial> basis);

MultivariatePolynomial s_polynomial(const MultivariatePolynomial& f, const MultivariatePolynomial& g);

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree first, ties by pair creation order). Gives up with cap_exceeded
/// as soon as a pair that has to be reduced has lcm degree > degree_cap.
GroebnerResult buchberger(std::span<const MultivariatePolynomial> generators,
                          MonomialOrder order = MonomialOrder::DegRevLex, unsigned degree_cap = 6);

/// true iff the basis is {1}; nullopt when the cap was exceeded.
std::optional<bool> contains_one(const GroebnerResult& r);

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(std::span<const MultivariatePolynomial> basis);

}  // namespace omega
