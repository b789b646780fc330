#include "omega/linalg.hpp"

#include <stdexcept>

namespace omega {

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r)
      if (!e.matrix(r, f).is_zero()) v[e.pivots[r]] = -e.matrix(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

AffineSpace AffineSpace::empty(std::size_t ambient_dim) {
  AffineSpace s;
  s.ambient_ = ambient_dim;
  return s;
}

AffineSpace AffineSpace::whole(std::size_t ambient_dim) {
  AffineSpace s;
  s.ambient_ = ambient_dim;
  s.empty_ = false;
  s.origin_ = zero_vector(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

AffineSpace AffineSpace::point(Vector p) {
  AffineSpace s;
  s.ambient_ = p.size();
  s.empty_ = false;
  s.origin_ = std::move(p);
  return s;
}

AffineSpace AffineSpace::from(Vector origin, std::span<const Vector> directions) {
  AffineSpace s;
  s.ambient_ = origin.size();
  s.empty_ = false;
  if (!directions.empty()) {
    const RowEchelon e = rref(Matrix::from_rows(directions, s.ambient_));
    for (std::size_t r = 0; r < e.rank; ++r) {
      const auto row = e.matrix.row(r);
      s.basis_.emplace_back(row.begin(), row.end());
      s.pivots_.push_back(e.pivots[r]);
    }
    for (std::size_t t = 0; t < s.basis_.size(); ++t) {
      const Scalar f = origin[s.pivots_[t]];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < s.ambient_; ++k)
        if (!s.basis_[t][k].is_zero()) origin[k] -= f * s.basis_[t][k];
    }
  }
  s.origin_ = std::move(origin);
  return s;
}

Vector AffineSpace::point_at(std::span<const Scalar> params) const {
  if (empty_) throw std::logic_error("point_at on the empty affine space");
  if (params.size() != basis_.size()) throw std::invalid_argument("point_at: wrong parameter count");
  Vector x = origin_;
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    if (params[t].is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!basis_[t][k].is_zero()) x[k] += params[t] * basis_[t][k];
  }
  return x;
}

bool AffineSpace::contains(const Vector& x) const {
  if (empty_ || x.size() != ambient_) return false;
  // With the canonical form, the only candidate parameters are x at the pivots.
  std::vector<Scalar> params;
  for (auto p : pivots_) params.push_back(x[p]);
  return point_at(params) == x;
}

AffineSpace solve_affine(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_affine: rows != length(b)");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return AffineSpace::empty(a.cols());
  Vector origin(a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t r = 0; r < e.rank; ++r) {
    origin[e.pivots[r]] = e.matrix(r, a.cols());
    is_pivot[e.pivots[r]] = true;
  }
  std::vector<Vector> dirs;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r)
      if (!e.matrix(r, f).is_zero()) v[e.pivots[r]] = -e.matrix(r, f);
    dirs.push_back(std::move(v));
  }
  return AffineSpace::from(std::move(origin), dirs);
}

AffineSpace restrict_parameters(const AffineSpace& s, const Matrix& c, const Vector& d) {
  if (s.is_empty() || c.rows() == 0) return s;
  if (c.cols() != s.basis().size()) throw std::invalid_argument("restrict_parameters: column count");
  const AffineSpace sub = solve_affine(c, d);
  if (sub.is_empty()) return AffineSpace::empty(s.ambient_dim());
  Vector origin = s.point_at(sub.origin());
  std::vector<Vector> dirs;
  dirs.reserve(sub.basis().size());
  for (const auto& k : sub.basis()) {
    Vector v(s.ambient_dim());
    for (std::size_t t = 0; t < k.size(); ++t) {
      if (k[t].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!s.basis()[t][j].is_zero()) v[j] += k[t] * s.basis()[t][j];
    }
    dirs.push_back(std::move(v));
  }
  return AffineSpace::from(std::move(origin), dirs);
}

AffineSpace intersect(const AffineSpace& s, const Matrix& c, const Vector& d) {
  if (c.rows() != d.size()) throw std::invalid_argument("intersect: rows != length(d)");
  if (s.is_empty() || c.rows() == 0) return s;
  if (c.cols() != s.ambient_dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
  // c (origin + B^T t) = d  <=>  (c B^T) t = d - c origin
  const auto& basis = s.basis();
  Matrix cb(c.rows(), basis.size());
  Vector rhs = d;
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const Scalar& crj = c(r, j);
      if (crj.is_zero()) continue;
      if (!s.origin()[j].is_zero()) rhs[r] -= crj * s.origin()[j];
      for (std::size_t t = 0; t < basis.size(); ++t)
        if (!basis[t][j].is_zero()) cb(r, t) += crj * basis[t][j];
    }
  }
  return restrict_parameters(s, cb, rhs);
}

}  // namespace omega
