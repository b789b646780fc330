#pragma once

#include <optional>
#include <vector>

#include "omega/matrix.hpp"

namespace omega {

struct RowEchelon {
  Matrix matrix;  // reduced row echelon form, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Affine subspace origin + span(basis) of an ambient coordinate space, or
/// the empty set. Kept canonical: the basis is in reduced row echelon form
/// and the origin is reduced against it (zero at every basis pivot), so two
/// equal sets compare equal member-wise.
class AffineSpace {
 public:
  static AffineSpace empty(std::size_t ambient_dim);
  static AffineSpace whole(std::size_t ambient_dim);
  static AffineSpace point(Vector p);
  /// Canonicalizes; `directions` need not be independent.
  static AffineSpace from(Vector origin, std::span<const Vector> directions);

  std::size_t ambient_dim() const { return ambient_; }
  bool is_empty() const { return empty_; }
  /// -1 for the empty set.
  int dimension() const { return empty_ ? -1 : static_cast<int>(basis_.size()); }
  const Vector& origin() const { return origin_; }
  const std::vector<Vector>& basis() const { return basis_; }
  /// Pivot coordinate of each basis vector.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// origin + sum_t params[t] * basis[t]
  Vector point_at(std::span<const Scalar> params) const;
  bool contains(const Vector& x) const;

  friend bool operator==(const AffineSpace& a, const AffineSpace& b) = default;

 private:
  AffineSpace() = default;
  std::size_t ambient_ = 0;
  bool empty_ = true;
  Vector origin_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Full solution set of a x = b.
AffineSpace solve_affine(const Matrix& a, const Vector& b);

/// Points of `s` that additionally satisfy c x = d (c over ambient coordinates).
AffineSpace intersect(const AffineSpace& s, const Matrix& c, const Vector& d);

/// Points origin + B^T t of `s` whose parameters satisfy c t = d, where c has
/// one column per basis vector of `s`.
AffineSpace restrict_parameters(const AffineSpace& s, const Matrix& c, const Vector& d);

}  // namespace omega
