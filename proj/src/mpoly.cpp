#include "omega/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace omega {

Monomial::Monomial(std::size_t nvars) : n_(nvars) {
  if (n_ > kInline) large_.assign(n_, 0);
}

Monomial::Monomial(std::span<const std::uint32_t> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), data());
  recount();
}

void Monomial::recount() {
  const std::uint32_t* e = data();
  degree_ = std::accumulate(e, e + n_, std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("Monomial::variable: index out of range");
  Monomial m(nvars);
  m.data()[i] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  const std::uint32_t* a = data();
  const std::uint32_t* b = other.data();
  for (std::size_t i = 0; i < n_; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q(n_);
  const std::uint32_t* a = data();
  const std::uint32_t* b = other.data();
  std::uint32_t* e = q.data();
  for (std::size_t i = 0; i < n_; ++i) {
    if (b[i] > a[i]) throw std::logic_error("Monomial::quotient: not divisible");
    e[i] = a[i] - b[i];
  }
  q.degree_ = degree_ - other.degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(n_);
  const std::uint32_t* a = data();
  const std::uint32_t* b = other.data();
  std::uint32_t* e = l.data();
  for (std::size_t i = 0; i < n_; ++i) e[i] = std::max(a[i], b[i]);
  l.recount();
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  const std::uint32_t* a = data();
  const std::uint32_t* b = other.data();
  for (std::size_t i = 0; i < n_; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.n_);
  const std::uint32_t* x = a.data();
  const std::uint32_t* y = b.data();
  std::uint32_t* e = m.data();
  for (std::size_t i = 0; i < a.n_; ++i) e[i] = x[i] + y[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.n_ == b.n_ && a.degree_ == b.degree_ && std::equal(a.data(), a.data() + a.n_, b.data());
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const std::size_t n = a.nvars();
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

// ---------------------------------------------------------------------------

MultivariatePolynomial::MultivariatePolynomial(std::size_t nvars, MonomialOrder order, std::vector<Term> terms)
    : nvars_(nvars), order_(order) {
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return compare(a.monomial, b.monomial, order) > 0; });
  for (auto& t : terms) {
    if (t.monomial.nvars() != nvars) throw std::invalid_argument("term with the wrong number of variables");
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
      if (terms_.back().coefficient.is_zero()) terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

MultivariatePolynomial MultivariatePolynomial::constant(std::size_t nvars, const Scalar& c, MonomialOrder order) {
  MultivariatePolynomial p(nvars, order);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(nvars), c});
  return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(std::size_t nvars, std::size_t i, MonomialOrder order) {
  MultivariatePolynomial p(nvars, order);
  p.terms_.push_back(Term{Monomial::variable(nvars, i), Scalar(1)});
  return p;
}

std::uint32_t MultivariatePolynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool MultivariatePolynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] != 0; });
}

MultivariatePolynomial MultivariatePolynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  const Scalar inv = leading_coefficient().inverse();
  MultivariatePolynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= inv;
  return r;
}

MultivariatePolynomial MultivariatePolynomial::with_order(MonomialOrder order) const {
  return MultivariatePolynomial(nvars_, order, terms_);
}

MultivariatePolynomial MultivariatePolynomial::permuted(std::span<const std::size_t> perm, MonomialOrder order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(nvars_, 0);
    for (std::size_t i = 0; i < nvars_; ++i) e[perm[i]] = t.monomial[i];
    out.push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  return MultivariatePolynomial(nvars_, order, std::move(out));
}

MultivariatePolynomial MultivariatePolynomial::mul_term(const Monomial& m, const Scalar& c) const {
  MultivariatePolynomial r(nvars_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return r;
}

void MultivariatePolynomial::subtract_scaled(const Scalar& c, const Monomial& m, const MultivariatePolynomial& g) {
  if (c.is_zero() || g.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto ia = std::make_move_iterator(terms_.begin());
  const auto ea = std::make_move_iterator(terms_.end());
  auto ib = g.terms_.begin();
  Monomial shifted;
  bool have_shifted = false;
  while (ia != ea || ib != g.terms_.end()) {
    if (ib != g.terms_.end() && !have_shifted) {
      shifted = ib->monomial * m;
      have_shifted = true;
    }
    int cmp;
    if (ia == ea) cmp = -1;
    else if (ib == g.terms_.end()) cmp = 1;
    else cmp = compare(ia->monomial, shifted, order_);
    if (cmp > 0) {
      out.push_back(*ia);
      ++ia;
    } else if (cmp < 0) {
      out.push_back(Term{std::move(shifted), -(c * ib->coefficient)});
      ++ib;
      have_shifted = false;
    } else {
      Term t = *ia;
      t.coefficient -= c * ib->coefficient;
      if (!t.coefficient.is_zero()) out.push_back(std::move(t));
      ++ia;
      ++ib;
      have_shifted = false;
    }
  }
  terms_ = std::move(out);
}

Term MultivariatePolynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

MultivariatePolynomial MultivariatePolynomial::from_sorted(std::size_t nvars, MonomialOrder order, std::vector<Term> terms) {
  MultivariatePolynomial p(nvars, order);
  p.terms_ = std::move(terms);
  return p;
}

Scalar MultivariatePolynomial::evaluate(std::span<const Scalar> point) const {
  Scalar acc;
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

MultivariatePolynomial MultivariatePolynomial::substitute(std::size_t var, const Scalar& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const std::uint32_t e = t.monomial[var];
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    Scalar c = t.coefficient;
    for (std::uint32_t k = 0; k < e; ++k) c *= value;
    std::vector<std::uint32_t> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[var] = 0;
    out.push_back(Term{Monomial(exps), std::move(c)});
  }
  return MultivariatePolynomial(nvars_, order_, std::move(out));
}

MultivariatePolynomial MultivariatePolynomial::operator-() const {
  MultivariatePolynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

MultivariatePolynomial MultivariatePolynomial::merge(const MultivariatePolynomial& a, const MultivariatePolynomial& b,
                                                     bool subtract) {
  if (a.nvars() != b.nvars() || a.order() != b.order())
    throw std::invalid_argument("polynomials over different rings");
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    int c;
    if (ia == a.terms().end()) c = -1;
    else if (ib == b.terms().end()) c = 1;
    else c = compare(ia->monomial, ib->monomial, a.order());
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back(Term{ib->monomial, subtract ? -ib->coefficient : ib->coefficient});
      ++ib;
    } else {
      Scalar s = subtract ? ia->coefficient - ib->coefficient : ia->coefficient + ib->coefficient;
      if (!s.is_zero()) out.push_back(Term{ia->monomial, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  MultivariatePolynomial r(a.nvars(), a.order());
  r.terms_ = std::move(out);
  return r;
}

MultivariatePolynomial operator+(const MultivariatePolynomial& a, const MultivariatePolynomial& b) { return MultivariatePolynomial::merge(a, b, false); }
MultivariatePolynomial operator-(const MultivariatePolynomial& a, const MultivariatePolynomial& b) { return MultivariatePolynomial::merge(a, b, true); }

MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  MultivariatePolynomial r(a.nvars(), a.order());
  for (const auto& t : a.terms()) r = r + b.mul_term(t.monomial, t.coefficient);
  return r;
}

bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coefficient == b.terms_[i].coefficient))
      return false;
  return true;
}

std::string MultivariatePolynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string coef;
    bool negative = false;
    if (t.coefficient.is_constant()) {
      Rational q = t.coefficient.constant_value();
      negative = q < 0;
      q = abs(q);
      if (q != 1 || t.monomial.is_one()) coef = q.get_str();
    } else {
      coef = "(" + t.coefficient.to_string() + ")";
    }
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "p" + std::to_string(i);
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (!coef.empty() && !mono.empty()) out += coef + "*" + mono;
    else out += coef + mono;
  }
  return out;
}

}  // namespace omega
