#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "omega/linalg.hpp"
#include "omega/matrix.hpp"

namespace omega {

/// Coefficients c[i][j][k] of e_k in (e_i o e_j) for a bilinear map on an
/// n-dimensional space.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// e_i o e_j in coordinates.
  Vector apply(std::size_t i, std::size_t j) const;
  /// u o v for arbitrary coordinate vectors.
  Vector apply(const Vector& u, const Vector& v) const;
  /// Sets e_i o e_j.
  void set(std::size_t i, std::size_t j, const Vector& value);

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

/// Skew-symmetric bilinear form; set() writes both (i,j) and (j,i).
class OmegaForm {
 public:
  OmegaForm() = default;
  explicit OmegaForm(std::size_t dim) : m_(dim, dim) {}

  std::size_t dim() const { return m_.rows(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, const Scalar& v);
  Scalar evaluate(const Vector& u, const Vector& v) const;
  const Matrix& matrix() const { return m_; }
  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const OmegaForm& a, const OmegaForm& b) = default;

 private:
  Matrix m_;
};

struct OmegaLieAlgebra {
  Field field = Field::Q;
  std::vector<std::string> basis_names;
  StructureTensor bracket;
  OmegaForm omega;

  std::size_t dim() const { return basis_names.size(); }
  friend bool operator==(const OmegaLieAlgebra&, const OmegaLieAlgebra&) = default;
};

struct OmegaLsaAlgebra {
  Field field = Field::Q;
  std::vector<std::string> basis_names;
  StructureTensor product;
  OmegaForm omega;

  std::size_t dim() const { return basis_names.size(); }
  friend bool operator==(const OmegaLsaAlgebra&, const OmegaLsaAlgebra&) = default;
};

using AnyAlgebra = std::variant<OmegaLieAlgebra, OmegaLsaAlgebra>;

/// Default basis labels e1..en.
std::vector<std::string> default_basis_names(std::size_t n);

// ---------------------------------------------------------------------------
// Axiom reports

struct TripleResidual {
  std::array<std::size_t, 3> triple{};
  Vector residual;
  bool is_zero() const { return omega::is_zero(residual); }
};

struct AxiomReport {
  /// Pairs (i, j), i <= j, where the antisymmetry requirement fails.
  std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_violations;
  bool omega_skew = true;
  std::vector<TripleResidual> residuals;

  bool passed() const;
  std::optional<TripleResidual> first_failure() const;
};

struct PairResidual {
  std::size_t i = 0;
  std::size_t j = 0;
  Matrix residual;
};

struct ModuleIdentityReport {
  std::vector<PairResidual> residuals;
  bool passed() const;
};

class AxiomError : public std::invalid_argument {
 public:
  AxiomError(const std::string& what, AxiomReport report) : std::invalid_argument(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// omega-Jacobi residual on every unordered triple i<j<k plus bracket
/// antisymmetry. Triples are evaluated in parallel (OpenMP).
AxiomReport check_omega_lie(const OmegaLieAlgebra& L);
/// Single-threaded reference for check_omega_lie.
AxiomReport check_omega_lie_serial(const OmegaLieAlgebra& L);

/// (xy)z - x(yz) - (yx)z + y(xz) - omega(x,y) z on every (i<j, k).
/// Parallel over triples.
AxiomReport check_omega_lsa(const OmegaLsaAlgebra& A);
AxiomReport check_omega_lsa_serial(const OmegaLsaAlgebra& A);

/// Bracket xy - yx with the same omega. Throws AxiomError when A is not an
/// omega-left-symmetric algebra.
OmegaLieAlgebra commutator_algebra(const OmegaLsaAlgebra& A);

/// Matrix of v -> e_i v; column j is e_i e_j.
Matrix left_mult(const OmegaLsaAlgebra& A, std::size_t i);

/// l_[e_i,e_j] - [l_i, l_j] - omega(e_i,e_j) id for all i<j, with l extended
/// linearly and [e_i,e_j] = e_i e_j - e_j e_i.
ModuleIdentityReport check_module_identity(const OmegaLsaAlgebra& A);

struct DerivedSubalgebra {
  std::vector<Vector> basis;  // reduced row echelon rows
  std::size_t dimension = 0;
};

DerivedSubalgebra derived_subalgebra(const OmegaLieAlgebra& L);
bool is_perfect(const OmegaLieAlgebra& L);

/// New basis e'_i = sum_k t(k,i) e_k (columns of t). Throws
/// std::invalid_argument when t is singular or the wrong size.
OmegaLieAlgebra basis_change(const OmegaLieAlgebra& L, const Matrix& t,
                             std::optional<std::vector<std::string>> names = std::nullopt);

/// Substitutes alpha = at in every coefficient; the result lives over Q.
/// Throws DivisionByZero when a coefficient's denominator vanishes.
OmegaLieAlgebra specialize(const OmegaLieAlgebra& L, const Rational& at);
OmegaLsaAlgebra specialize(const OmegaLsaAlgebra& A, const Rational& at);

/// Converts every coefficient into `field`.
OmegaLieAlgebra with_field(OmegaLieAlgebra L, Field field);
OmegaLsaAlgebra with_field(OmegaLsaAlgebra A, Field field);

}  // namespace omega
