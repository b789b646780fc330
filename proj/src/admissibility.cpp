#include "omega/admissibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace omega {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Admissible: return "ADMISSIBLE";
    case Verdict::Inadmissible: return "INADMISSIBLE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view mode_name(DeciderMode m) { return m == DeciderMode::Full ? "full" : "module-only"; }

DeciderMode parse_mode_name(std::string_view name) {
  if (name == "full") return DeciderMode::Full;
  if (name == "module-only" || name == "module_only") return DeciderMode::ModuleOnly;
  throw std::invalid_argument("unknown decider mode '" + std::string(name) + "'");
}

std::size_t unknown_index(std::size_t n, std::size_t m, std::size_t r, std::size_t c) { return (m * n + r) * n + c; }

std::vector<Matrix> operators_at(std::size_t n, const Vector& point) {
  std::vector<Matrix> ops(n, Matrix(n, n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) ops[m](r, c) = point[unknown_index(n, m, r, c)];
  return ops;
}

StructureTensor product_from_point(std::size_t n, const Vector& point) {
  StructureTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = point[unknown_index(n, i, k, j)];
  return t;
}

Vector point_from_product(const StructureTensor& product) {
  const std::size_t n = product.dim();
  Vector x(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) x[unknown_index(n, i, k, j)] = product(i, j, k);
  return x;
}

LinearSystem compatibility_constraints(const OmegaLieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::size_t rows = n * (n - 1) / 2 * n;
  LinearSystem sys{Matrix(rows, n * n * n), Vector(rows)};
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r, ++row) {
        sys.a(row, unknown_index(n, i, r, j)) = 1;
        sys.a(row, unknown_index(n, j, r, i)) = -1;
        sys.b[row] = L.bracket(i, j, r);
      }
  return sys;
}

LinearSystem jacobi_consequence_constraints(const OmegaLieAlgebra& L) {
  const std::size_t n = L.dim();
  const auto& w = L.omega;
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector lw = zero_vector(n);
        lw[k] += w(i, j);
        lw[i] += w(j, k);
        lw[j] += w(k, i);
        const Scalar s = w.evaluate(L.bracket.apply(i, j), unit_vector(n, k)) +
                         w.evaluate(L.bracket.apply(j, k), unit_vector(n, i)) +
                         w.evaluate(L.bracket.apply(k, i), unit_vector(n, j));
        if (is_zero(lw) && s.is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            Vector row(n * n * n);
            for (std::size_t m = 0; m < n; ++m)
              if (!lw[m].is_zero()) row[unknown_index(n, m, r, c)] = lw[m];
            rows.push_back(std::move(row));
            rhs.push_back(r == c ? s : Scalar());
          }
      }
  return LinearSystem{Matrix::from_rows(rows, n * n * n), std::move(rhs)};
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by column, no zeros

SparseRow axpy(const SparseRow& a, const Scalar& f, const SparseRow& b) {
  // a - f * b
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -(f * ib->second));
      ++ib;
    } else {
      Scalar v = ia->second - f * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

/// Incremental row echelon form over sparse rows; pivot rows have leading
/// coefficient 1.
class SparseEchelon {
 public:
  void add(SparseRow row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const Scalar inv = row.front().second.inverse();
        for (auto& [c, v] : row) v *= inv;
        const std::size_t col = row.front().first;
        pivots_.emplace(col, std::move(row));
        return;
      }
      const Scalar f = row.front().second;
      row = axpy(row, f, it->second);
    }
  }
  const std::map<std::size_t, SparseRow>& pivots() const { return pivots_; }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

/// Column layout for polynomials of degree <= 2 in d variables: monomials
/// p_s p_t (s <= t) first, then p_t, then the constant.
struct QuadraticLayout {
  std::size_t d;
  std::size_t quad_count() const { return d * (d + 1) / 2; }
  std::size_t quad(std::size_t s, std::size_t t) const { return s * d - s * (s - 1) / 2 + (t - s); }
  std::size_t linear(std::size_t t) const { return quad_count() + t; }
  std::size_t constant() const { return quad_count() + d; }

  MultivariatePolynomial to_polynomial(const SparseRow& row) const {
    std::vector<Term> terms;
    for (const auto& [col, v] : row) {
      Monomial m(d);
      if (col == constant()) {
      } else if (col >= quad_count()) {
        m = Monomial::variable(d, col - quad_count());
      } else {
        // Invert quad(s, t).
        std::size_t s = 0;
        while (s + 1 < d && quad(s + 1, s + 1) <= col) ++s;
        const std::size_t t = col - quad(s, s) + s;
        std::vector<std::uint32_t> e(d, 0);
        e[s] += 1;
        e[t] += 1;
        m = Monomial(std::move(e));
      }
      terms.push_back(Term{std::move(m), v});
    }
    return MultivariatePolynomial(d, MonomialOrder::DegRevLex, std::move(terms));
  }
};

struct ParametrizedOperators {
  std::vector<Matrix> origin;                    // A_m
  std::vector<std::vector<Matrix>> direction;    // direction[t][m] = B_{m,t}
  std::vector<std::vector<bool>> touches;        // touches[t][m]: B_{m,t} != 0
};

ParametrizedOperators parametrize(std::size_t n, const AffineSpace& space) {
  ParametrizedOperators p;
  p.origin = operators_at(n, space.origin());
  for (const auto& b : space.basis()) {
    p.direction.push_back(operators_at(n, b));
    std::vector<bool> t(n);
    for (std::size_t m = 0; m < n; ++m) t[m] = !p.direction.back()[m].is_zero();
    p.touches.push_back(std::move(t));
  }
  return p;
}

/// Residual rows, one per (pair i<j, r, c), in the quadratic layout.
std::vector<SparseRow> residual_rows(const OmegaLieAlgebra& L, const AffineSpace& space) {
  const std::size_t n = L.dim();
  const std::size_t d = space.basis().size();
  const QuadraticLayout layout{d};
  const ParametrizedOperators ops = parametrize(n, space);
  std::vector<SparseRow> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector b = L.bracket.apply(i, j);
      std::vector<std::map<std::size_t, Scalar>> acc(n * n);
      auto add = [&](const Matrix& m, std::size_t col, const Scalar& factor) {
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (!m(r, c).is_zero()) acc[r * n + c][col] += factor * m(r, c);
      };

      Matrix constant = commutator(ops.origin[i], ops.origin[j]);
      constant = Scalar(-1) * std::move(constant);
      for (std::size_t m = 0; m < n; ++m)
        if (!b[m].is_zero()) constant += b[m] * ops.origin[m];
      if (!L.omega(i, j).is_zero()) constant -= Matrix::scalar(n, L.omega(i, j));
      add(constant, layout.constant(), Scalar(1));

      for (std::size_t t = 0; t < d; ++t) {
        const auto& bt = ops.direction[t];
        Matrix lin(n, n);
        for (std::size_t m = 0; m < n; ++m)
          if (!b[m].is_zero() && ops.touches[t][m]) lin += b[m] * bt[m];
        if (ops.touches[t][j]) lin -= commutator(ops.origin[i], bt[j]);
        if (ops.touches[t][i]) lin -= commutator(bt[i], ops.origin[j]);
        add(lin, layout.linear(t), Scalar(1));
      }

      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = s; t < d; ++t) {
          const bool st = ops.touches[s][i] && ops.touches[t][j];
          const bool ts = s != t && ops.touches[t][i] && ops.touches[s][j];
          if (!st && !ts) continue;
          Matrix q(n, n);
          if (st) q += commutator(ops.direction[s][i], ops.direction[t][j]);
          if (ts) q += commutator(ops.direction[t][i], ops.direction[s][j]);
          add(q, layout.quad(s, t), Scalar(-1));
        }
      }

      for (auto& entry : acc) {
        SparseRow row;
        for (auto& [col, v] : entry)
          if (!v.is_zero()) row.emplace_back(col, std::move(v));
        if (!row.empty()) out.push_back(std::move(row));
      }
    }
  return out;
}

Stage make_stage(std::string name, const AffineSpace& space, std::size_t n) {
  Stage st{std::move(name), space.dimension(), std::nullopt};
  if (space.dimension() == 0) st.pinned = operators_at(n, space.origin());
  return st;
}

}  // namespace

std::vector<MultivariatePolynomial> module_identity_residuals(const OmegaLieAlgebra& L, const AffineSpace& space) {
  if (space.is_empty()) throw std::invalid_argument("module_identity_residuals: empty space");
  const QuadraticLayout layout{space.basis().size()};
  std::vector<MultivariatePolynomial> out;
  for (const auto& row : residual_rows(L, space)) out.push_back(layout.to_polynomial(row));
  return out;
}

PropagationResult propagate(const OmegaLieAlgebra& L, DeciderMode mode) {
  const std::size_t n = L.dim();
  PropagationResult res;
  res.space = AffineSpace::whole(n * n * n);
  res.trace.push_back(make_stage("unknowns", res.space, n));

  const LinearSystem jac = jacobi_consequence_constraints(L);
  res.space = intersect(res.space, jac.a, jac.b);
  res.trace.push_back(make_stage("jacobi-consequences", res.space, n));
  if (mode == DeciderMode::Full && !res.space.is_empty()) {
    const LinearSystem comp = compatibility_constraints(L);
    res.space = intersect(res.space, comp.a, comp.b);
    res.trace.push_back(make_stage("compatibility", res.space, n));
  }

  for (int round = 1; !res.space.is_empty(); ++round) {
    const std::size_t d = res.space.basis().size();
    const QuadraticLayout layout{d};
    SparseEchelon echelon;
    for (auto& row : residual_rows(L, res.space)) echelon.add(std::move(row));

    std::vector<const SparseRow*> linear;
    res.residuals.clear();
    for (const auto& [col, row] : echelon.pivots()) {
      if (col >= layout.quad_count()) linear.push_back(&row);
      else res.residuals.push_back(layout.to_polynomial(row));
    }
    if (linear.empty()) break;
    res.residuals.clear();

    Matrix c(linear.size(), d);
    Vector rhs(linear.size());
    for (std::size_t r = 0; r < linear.size(); ++r)
      for (const auto& [col, v] : *linear[r]) {
        if (col == layout.constant()) rhs[r] = -v;
        else c(r, col - layout.quad_count()) = v;
      }
    res.space = restrict_parameters(res.space, c, rhs);
    res.trace.push_back(make_stage("module-identity-" + std::to_string(round), res.space, n));
  }
  return res;
}

bool verify_witness(const OmegaLieAlgebra& L, const StructureTensor& product) {
  if (product.dim() != L.dim()) return false;
  const OmegaLsaAlgebra a{L.field, L.basis_names, product, L.omega};
  if (!check_omega_lsa(a).passed()) return false;
  return commutator_algebra(a).bracket == L.bracket;
}

namespace {

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  // coeffs[k] multiplies x^k; returns the distinct rational roots.
  std::vector<Rational> roots;
  std::vector<mpz_class> a;
  mpz_class lcm_den = 1;
  for (const auto& q : coeffs) lcm_den = lcm(lcm_den, mpz_class(q.get_den()));
  for (const auto& q : coeffs) a.push_back(mpz_class(q.get_num() * (lcm_den / q.get_den())));
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low == a.size()) return roots;
  if (low > 0) roots.emplace_back(0);
  const mpz_class a0 = abs(a[low]);
  const mpz_class an = abs(a.back());
  const mpz_class limit = 1000000;
  if (a0 > limit || an > limit) return roots;
  auto divisors = [](const mpz_class& v) {
    std::vector<mpz_class> out;
    for (mpz_class k = 1; k <= v; ++k)
      if (v % k == 0) out.push_back(k);
    return out;
  };
  for (const auto& p : divisors(a0))
    for (const auto& q : divisors(an))
      for (int sign : {1, -1}) {
        const Rational x(sign * p, q);
        Rational v = 0;
        for (std::size_t k = a.size(); k-- > low;) v = v * x + Rational(a[k]);
        if (v == 0 && std::find(roots.begin(), roots.end(), Rational(x)) == roots.end())
          roots.push_back(Rational(x));
      }
  return roots;
}

/// Candidate values for variable t from a lex elimination polynomial.
std::vector<Scalar> elimination_candidates(const std::vector<MultivariatePolynomial>& gens, std::size_t t,
                                           unsigned cap) {
  const std::size_t d = gens.front().nvars();
  std::vector<std::size_t> perm(d);
  // Variable t becomes the last (lex-smallest) one.
  for (std::size_t v = 0, k = 0; v < d; ++v)
    if (v != t) perm[v] = k++;
  perm[t] = d - 1;
  std::vector<MultivariatePolynomial> lex;
  for (const auto& g : gens) lex.push_back(g.permuted(perm, MonomialOrder::Lex));
  const GroebnerResult r = buchberger(lex, MonomialOrder::Lex, cap);
  std::vector<Scalar> out;
  if (r.cap_exceeded) return out;
  for (const auto& g : r.basis) {
    bool univariate = true;
    for (std::size_t v = 0; v + 1 < d && univariate; ++v) univariate = !g.involves(v);
    if (!univariate) continue;
    const std::uint32_t deg = g.total_degree();
    std::vector<Scalar> coeffs(deg + 1);
    for (const auto& term : g.terms()) coeffs[term.monomial[d - 1]] = term.coefficient;
    if (deg == 1) {
      out.push_back(-coeffs[0] / coeffs[1]);
      continue;
    }
    if (!std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.is_constant(); })) continue;
    std::vector<Rational> q;
    for (const auto& c : coeffs) q.push_back(c.constant_value());
    for (auto& root : rational_roots(q)) out.emplace_back(std::move(root));
  }
  return out;
}

/// Best-effort rational point of the ideal with reduced basis `basis`: fixes
/// one variable at a time and keeps a value when the specialized ideal is
/// still proper.
std::optional<std::vector<Scalar>> find_point(std::vector<MultivariatePolynomial> basis, std::size_t d, unsigned cap) {
  std::vector<Scalar> values(d);
  static const std::vector<Rational> small = {Rational(0),    Rational(1),     Rational(-1),
                                              Rational(2),    Rational(-2),    Rational(1, 2),
                                              Rational(-1, 2), Rational(3),    Rational(-3)};
  for (std::size_t t = 0; t < d; ++t) {
    if (std::none_of(basis.begin(), basis.end(), [t](const auto& g) { return g.involves(t); })) continue;
    std::vector<Scalar> candidates(small.begin(), small.end());
    bool fixed = false;
    for (int pass = 0; pass < 2 && !fixed; ++pass) {
      if (pass == 1) candidates = elimination_candidates(basis, t, cap);
      for (const auto& c : candidates) {
        std::vector<MultivariatePolynomial> trial;
        for (const auto& g : basis) trial.push_back(g.substitute(t, c));
        GroebnerResult r = buchberger(trial, MonomialOrder::DegRevLex, cap);
        if (contains_one(r) == false) {
          basis = std::move(r.basis);
          values[t] = c;
          fixed = true;
          break;
        }
      }
    }
    if (!fixed) return std::nullopt;
  }
  return values;
}

}  // namespace

AdmissibilityReport decide_admissible(const OmegaLieAlgebra& L, const DeciderSettings& settings) {
  if (auto check = check_omega_lie(L); !check.passed())
    throw AxiomError("decide_admissible: input is not an omega-Lie algebra", std::move(check));
  const std::size_t n = L.dim();
  DenominatorLog log;
  DenominatorScope scope(log);

  AdmissibilityReport rep;
  rep.settings = settings;
  PropagationResult prop = propagate(L, settings.mode);
  rep.certificate = std::move(prop.trace);
  rep.space = prop.space;
  rep.residuals = std::move(prop.residuals);

  auto finish = [&]() -> AdmissibilityReport {
    rep.denominators = log.polynomials();
    return std::move(rep);
  };
  const bool module_only = settings.mode == DeciderMode::ModuleOnly;

  if (rep.space.is_empty()) {
    rep.verdict = Verdict::Inadmissible;
    rep.termination = "linear-infeasible";
    return finish();
  }
  const std::size_t d = rep.space.basis().size();
  std::optional<std::vector<Scalar>> params;
  const std::vector<Scalar> origin(d);
  const bool origin_solves = std::all_of(rep.residuals.begin(), rep.residuals.end(),
                                         [&](const MultivariatePolynomial& p) { return p.evaluate(origin).is_zero(); });
  if (origin_solves) {
    params = origin;
  } else {
    rep.groebner = buchberger(rep.residuals, MonomialOrder::DegRevLex, settings.degree_cap);
    const auto unit = contains_one(*rep.groebner);
    if (!unit) {
      rep.verdict = Verdict::Unknown;
      rep.termination = "degree-cap";
      return finish();
    }
    if (*unit) {
      rep.verdict = Verdict::Inadmissible;
      rep.termination = "groebner-unit";
      return finish();
    }
    if (!module_only) params = find_point(rep.groebner->basis, d, settings.degree_cap);
  }
  rep.verdict = Verdict::Admissible;
  if (module_only) {
    rep.termination = "module-system-consistent";
    return finish();
  }
  if (params) {
    StructureTensor product = product_from_point(n, rep.space.point_at(*params));
    if (verify_witness(L, product)) {
      rep.witness = std::move(product);
      rep.termination = "witness";
      return finish();
    }
  }
  rep.termination = "exists-over-closure";
  return finish();
}

namespace {

DecideOutcome decide_one(const OmegaLieAlgebra& L, const DeciderSettings& settings) {
  DecideOutcome out;
  try {
    out.report = decide_admissible(L, settings);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

std::vector<DecideOutcome> decide_batch(const std::vector<OmegaLieAlgebra>& algebras, const DeciderSettings& settings) {
  std::vector<DecideOutcome> out(algebras.size());
  const auto count = static_cast<std::ptrdiff_t>(algebras.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) out[k] = decide_one(algebras[k], settings);
  return out;
}

std::vector<DecideOutcome> decide_batch_serial(const std::vector<OmegaLieAlgebra>& algebras,
                                               const DeciderSettings& settings) {
  std::vector<DecideOutcome> out;
  out.reserve(algebras.size());
  for (const auto& L : algebras) out.push_back(decide_one(L, settings));
  return out;
}

SampleCheck check_sample(const OmegaLieAlgebra& generic, const AdmissibilityReport& generic_report, const Rational& at) {
  SampleCheck sc;
  sc.alpha = at;
  for (const auto& p : generic_report.denominators)
    if (p.evaluate(at) == 0) {
      sc.skipped = true;
      return sc;
    }
  OmegaLieAlgebra special;
  try {
    special = specialize(generic, at);
  } catch (const DivisionByZero&) {
    sc.skipped = true;
    return sc;
  }
  sc.verdict = decide_admissible(special, generic_report.settings).verdict;
  sc.coherent = *sc.verdict == generic_report.verdict;
  return sc;
}

}  // namespace omega
