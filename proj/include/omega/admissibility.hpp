#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega/algebra.hpp"
#include "omega/groebner.hpp"
#include "omega/linalg.hpp"
#include "omega/mpoly.hpp"

namespace omega {

enum class Verdict { Admissible, Inadmissible, Unknown };
enum class DeciderMode { Full, ModuleOnly };

std::string_view verdict_name(Verdict v);     // "ADMISSIBLE", "INADMISSIBLE", "UNKNOWN"
std::string_view mode_name(DeciderMode m);    // "full", "module-only"
DeciderMode parse_mode_name(std::string_view name);

struct DeciderSettings {
  DeciderMode mode = DeciderMode::Full;
  unsigned degree_cap = 6;
};

/// Unknowns are the entries of the left multiplication matrices M_0..M_{n-1};
/// coordinate m*n^2 + r*n + c holds M_m(r, c), the e_r coefficient of e_m e_c.
std::size_t unknown_index(std::size_t n, std::size_t m, std::size_t r, std::size_t c);

/// The n matrices M_m of a point in the unknown space.
std::vector<Matrix> operators_at(std::size_t n, const Vector& point);
StructureTensor product_from_point(std::size_t n, const Vector& point);
Vector point_from_product(const StructureTensor& product);

struct LinearSystem {
  Matrix a;
  Vector b;
};

/// M_i e_j - M_j e_i = [e_i, e_j] for i < j.
LinearSystem compatibility_constraints(const OmegaLieAlgebra& L);

/// l_w = s id for every triple i<j<k, with w the omega-Jacobi right side
/// and s the cyclic sum of omega([e_i,e_j], e_k).
LinearSystem jacobi_consequence_constraints(const OmegaLieAlgebra& L);

/// l_[e_i,e_j] - [M_i, M_j] - omega(e_i,e_j) id for i<j, entrywise, in the
/// parameters of `space` (one variable per basis vector). Zero entries are
/// dropped.
std::vector<MultivariatePolynomial> module_identity_residuals(const OmegaLieAlgebra& L, const AffineSpace& space);

struct Stage {
  std::string name;
  int dimension = 0;  // -1 when empty
  /// The operators when the stage collapsed the space to a single point.
  std::optional<std::vector<Matrix>> pinned;
};

struct PropagationResult {
  AffineSpace space = AffineSpace::empty(0);
  /// Quadratic residuals left at the fixed point, in the space's parameters.
  std::vector<MultivariatePolynomial> residuals;
  std::vector<Stage> trace;
};

PropagationResult propagate(const OmegaLieAlgebra& L, DeciderMode mode);

struct AdmissibilityReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<StructureTensor> witness;
  std::vector<Stage> certificate;
  /// "witness", "exists-over-closure", "module-system-consistent",
  /// "linear-infeasible", "groebner-unit" or "degree-cap".
  std::string termination;
  std::vector<MultivariatePolynomial> residuals;
  std::optional<GroebnerResult> groebner;
  DeciderSettings settings;
  AffineSpace space = AffineSpace::empty(0);
  /// Nonconstant polynomials in alpha divided by during the run.
  std::vector<UnivariatePolynomial> denominators;
};

/// Throws AxiomError when L is not an omega-Lie algebra.
AdmissibilityReport decide_admissible(const OmegaLieAlgebra& L, const DeciderSettings& settings = {});

/// The product is an omega-LSA with L's omega whose commutator is L's bracket.
bool verify_witness(const OmegaLieAlgebra& L, const StructureTensor& product);

struct DecideOutcome {
  std::optional<AdmissibilityReport> report;
  std::string error;  // set when decide_admissible threw
};

/// Independent instances decided concurrently; results keep input order.
std::vector<DecideOutcome> decide_batch(const std::vector<OmegaLieAlgebra>& algebras, const DeciderSettings& settings);
std::vector<DecideOutcome> decide_batch_serial(const std::vector<OmegaLieAlgebra>& algebras,
                                               const DeciderSettings& settings);

struct SampleCheck {
  Rational alpha;
  bool skipped = false;  // a recorded denominator or a coefficient vanishes there
  std::optional<Verdict> verdict;
  bool coherent = true;
};

/// Re-decides a generic Q(alpha) instance at alpha = at and compares verdicts.
SampleCheck check_sample(const OmegaLieAlgebra& generic, const AdmissibilityReport& generic_report, const Rational& at);

}  // namespace omega
