#include "omega/algebra.hpp"

#include <algorithm>

namespace omega {

Vector StructureTensor::apply(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

Vector StructureTensor::apply(const Vector& u, const Vector& v) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!(*this)(i, j, k).is_zero()) out[k] += uv * (*this)(i, j, k);
    }
  }
  return out;
}

void StructureTensor::set(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw std::invalid_argument("StructureTensor::set: wrong vector length");
  for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k) = value[k];
}

void OmegaForm::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i == j) {
    if (!v.is_zero()) throw std::invalid_argument("omega must vanish on the diagonal");
    return;
  }
  m_(i, j) = v;
  m_(j, i) = -v;
}

Scalar OmegaForm::evaluate(const Vector& u, const Vector& v) const {
  Scalar acc;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!v[j].is_zero() && !m_(i, j).is_zero()) acc += u[i] * v[j] * m_(i, j);
  }
  return acc;
}

std::vector<std::string> default_basis_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

bool AxiomReport::passed() const {
  return antisymmetry_violations.empty() && omega_skew &&
         std::all_of(residuals.begin(), residuals.end(), [](const TripleResidual& r) { return r.is_zero(); });
}

std::optional<TripleResidual> AxiomReport::first_failure() const {
  for (const auto& r : residuals)
    if (!r.is_zero()) return r;
  return std::nullopt;
}

bool ModuleIdentityReport::passed() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const PairResidual& r) { return r.residual.is_zero(); });
}

namespace {

void require_shape(std::size_t n, const StructureTensor& t, const OmegaForm& w) {
  if (t.dim() != n || w.dim() != n)
    throw std::invalid_argument("dimension mismatch between basis (" + std::to_string(n) + "), tensor (" +
                                std::to_string(t.dim()) + ") and omega (" + std::to_string(w.dim()) + ")");
}

// sum_m u[m] * (e_m o e_k)
Vector right_apply(const StructureTensor& t, const Vector& u, std::size_t k) {
  const std::size_t n = t.dim();
  Vector out(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (u[m].is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r)
      if (!t(m, k, r).is_zero()) out[r] += u[m] * t(m, k, r);
  }
  return out;
}

// sum_m u[m] * (e_k o e_m)
Vector left_apply(const StructureTensor& t, std::size_t k, const Vector& u) {
  const std::size_t n = t.dim();
  Vector out(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (u[m].is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r)
      if (!t(k, m, r).is_zero()) out[r] += u[m] * t(k, m, r);
  }
  return out;
}

void add_into(Vector& acc, const Vector& v, const Scalar& s = Scalar(1)) {
  for (std::size_t r = 0; r < acc.size(); ++r)
    if (!v[r].is_zero()) acc[r] += s * v[r];
}

// [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] - (w(ei,ej) ek + w(ej,ek) ei + w(ek,ei) ej)
Vector jacobi_residual(const OmegaLieAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  const auto& c = L.bracket;
  Vector res = right_apply(c, c.apply(i, j), k);
  add_into(res, right_apply(c, c.apply(j, k), i));
  add_into(res, right_apply(c, c.apply(k, i), j));
  res[k] -= L.omega(i, j);
  res[i] -= L.omega(j, k);
  res[j] -= L.omega(k, i);
  return res;
}

// (xy)z - x(yz) - (yx)z + y(xz) - w(x,y) z with x=ei, y=ej, z=ek
Vector lsa_residual(const OmegaLsaAlgebra& A, std::size_t i, std::size_t j, std::size_t k) {
  const auto& p = A.product;
  Vector res = right_apply(p, p.apply(i, j), k);
  add_into(res, left_apply(p, i, p.apply(j, k)), Scalar(-1));
  add_into(res, right_apply(p, p.apply(j, i), k), Scalar(-1));
  add_into(res, left_apply(p, j, p.apply(i, k)));
  res[k] -= A.omega(i, j);
  return res;
}

std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_violations(const StructureTensor& c) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(c(i, j, k) + c(j, i, k)).is_zero()) {
          bad.emplace_back(i, j);
          break;
        }
  return bad;
}

std::vector<std::array<std::size_t, 3>> unordered_triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

std::vector<std::array<std::size_t, 3>> lsa_triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.push_back({i, j, k});
  return out;
}

template <class Kernel>
std::vector<TripleResidual> evaluate_triples(const std::vector<std::array<std::size_t, 3>>& triples, Kernel kernel,
                                             bool parallel) {
  std::vector<TripleResidual> out(triples.size());
  const auto count = static_cast<std::ptrdiff_t>(triples.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const auto& [i, j, k] = triples[static_cast<std::size_t>(t)];
      out[static_cast<std::size_t>(t)] = TripleResidual{triples[static_cast<std::size_t>(t)], kernel(i, j, k)};
    }
  } else {
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const auto& [i, j, k] = triples[static_cast<std::size_t>(t)];
      out[static_cast<std::size_t>(t)] = TripleResidual{triples[static_cast<std::size_t>(t)], kernel(i, j, k)};
    }
  }
  return out;
}

AxiomReport check_lie_impl(const OmegaLieAlgebra& L, bool parallel) {
  require_shape(L.dim(), L.bracket, L.omega);
  AxiomReport report;
  report.antisymmetry_violations = antisymmetry_violations(L.bracket);
  report.residuals = evaluate_triples(
      unordered_triples(L.dim()), [&](std::size_t i, std::size_t j, std::size_t k) { return jacobi_residual(L, i, j, k); },
      parallel);
  return report;
}

AxiomReport check_lsa_impl(const OmegaLsaAlgebra& A, bool parallel) {
  require_shape(A.dim(), A.product, A.omega);
  AxiomReport report;
  report.residuals = evaluate_triples(
      lsa_triples(A.dim()), [&](std::size_t i, std::size_t j, std::size_t k) { return lsa_residual(A, i, j, k); },
      parallel);
  return report;
}

template <class Alg, class F>
Alg map_coefficients(Alg a, F f) {
  const std::size_t n = a.dim();
  auto& t = [&]() -> StructureTensor& {
    if constexpr (std::is_same_v<Alg, OmegaLieAlgebra>) return a.bracket;
    else return a.product;
  }();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = f(t(i, j, k));
  OmegaForm w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w.set(i, j, f(a.omega(i, j)));
  a.omega = std::move(w);
  return a;
}

}  // namespace

AxiomReport check_omega_lie(const OmegaLieAlgebra& L) { return check_lie_impl(L, true); }
AxiomReport check_omega_lie_serial(const OmegaLieAlgebra& L) { return check_lie_impl(L, false); }
AxiomReport check_omega_lsa(const OmegaLsaAlgebra& A) { return check_lsa_impl(A, true); }
AxiomReport check_omega_lsa_serial(const OmegaLsaAlgebra& A) { return check_lsa_impl(A, false); }

OmegaLieAlgebra commutator_algebra(const OmegaLsaAlgebra& A) {
  AxiomReport report = check_omega_lsa(A);
  if (!report.passed()) throw AxiomError("input is not an omega-left-symmetric algebra", std::move(report));
  const std::size_t n = A.dim();
  OmegaLieAlgebra L{A.field, A.basis_names, StructureTensor(n), A.omega};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) L.bracket(i, j, k) = A.product(i, j, k) - A.product(j, i, k);
  return L;
}

Matrix left_mult(const OmegaLsaAlgebra& A, std::size_t i) {
  const std::size_t n = A.dim();
  if (i >= n) throw std::out_of_range("left_mult: basis index " + std::to_string(i) + " out of range");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = A.product(i, j, k);
  return m;
}

ModuleIdentityReport check_module_identity(const OmegaLsaAlgebra& A) {
  const std::size_t n = A.dim();
  require_shape(n, A.product, A.omega);
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(left_mult(A, i));
  ModuleIdentityReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix r(n, n);
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar w = A.product(i, j, m) - A.product(j, i, m);
        if (!w.is_zero()) r += w * l[m];
      }
      r -= commutator(l[i], l[j]);
      r -= Matrix::scalar(n, A.omega(i, j));
      report.residuals.push_back(PairResidual{i, j, std::move(r)});
    }
  return report;
}

DerivedSubalgebra derived_subalgebra(const OmegaLieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rows.push_back(L.bracket.apply(i, j));
  DerivedSubalgebra out;
  if (rows.empty()) return out;
  const RowEchelon e = rref(Matrix::from_rows(rows, n));
  for (std::size_t r = 0; r < e.rank; ++r) {
    const auto row = e.matrix.row(r);
    out.basis.emplace_back(row.begin(), row.end());
  }
  out.dimension = e.rank;
  return out;
}

bool is_perfect(const OmegaLieAlgebra& L) { return derived_subalgebra(L).dimension == L.dim(); }

OmegaLieAlgebra basis_change(const OmegaLieAlgebra& L, const Matrix& t, std::optional<std::vector<std::string>> names) {
  const std::size_t n = L.dim();
  if (t.rows() != n || t.cols() != n) throw std::invalid_argument("basis_change: transform has the wrong size");
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = t(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw std::invalid_argument("basis_change: transform is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.matrix(r, n + c);

  OmegaLieAlgebra out{L.field, names.value_or(L.basis_names), StructureTensor(n), OmegaForm(n)};
  if (out.basis_names.size() != n) throw std::invalid_argument("basis_change: wrong number of names");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(t.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.bracket.set(i, j, inv.apply(L.bracket.apply(cols[i], cols[j])));
      if (i < j) out.omega.set(i, j, L.omega.evaluate(cols[i], cols[j]));
    }
  return with_field(std::move(out), L.field);
}

OmegaLieAlgebra specialize(const OmegaLieAlgebra& L, const Rational& at) {
  OmegaLieAlgebra out = map_coefficients(L, [&](const Scalar& s) { return Scalar(s.evaluate(at)); });
  out.field = Field::Q;
  return out;
}

OmegaLsaAlgebra specialize(const OmegaLsaAlgebra& A, const Rational& at) {
  OmegaLsaAlgebra out = map_coefficients(A, [&](const Scalar& s) { return Scalar(s.evaluate(at)); });
  out.field = Field::Q;
  return out;
}

OmegaLieAlgebra with_field(OmegaLieAlgebra L, Field field) {
  L.field = field;
  // Zero stays the untagged default scalar; it is the same element in both fields.
  return map_coefficients(std::move(L), [&](const Scalar& s) { return s.is_zero() ? Scalar() : s.in(field); });
}

OmegaLsaAlgebra with_field(OmegaLsaAlgebra A, Field field) {
  A.field = field;
  return map_coefficients(std::move(A), [&](const Scalar& s) { return s.is_zero() ? Scalar() : s.in(field); });
}

}  // namespace omega
