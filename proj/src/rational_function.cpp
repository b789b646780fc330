#include "omega/rational_function.hpp"

#include <algorithm>
#include <sstream>

namespace omega {

namespace {
thread_local DenominatorLog* active_log = nullptr;

void note_divisor(const UnivariatePolynomial& p) {
  if (active_log != nullptr && !p.is_constant()) active_log->record(p);
}
}  // namespace

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial::UnivariatePolynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UnivariatePolynomial UnivariatePolynomial::variable() {
  return UnivariatePolynomial(std::vector<Rational>{0, 1});
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::coefficient(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : Rational(0);
}

const Rational& UnivariatePolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  UnivariatePolynomial r = *this;
  const Rational lc = leading();
  if (lc == 1) return r;
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Rational UnivariatePolynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (d > 1) out << "^" << d;
  }
  return out.str();
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  UnivariatePolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(out));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divide(
    const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {UnivariatePolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    const Rational c = rem[static_cast<std::size_t>(d)] / lb;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(d - db)] = c;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(d - db + k)] -= c * b.coeffs_[static_cast<std::size_t>(k)];
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial poly_gcd(UnivariatePolynomial p, UnivariatePolynomial q) {
  while (!q.is_zero()) {
    auto r = UnivariatePolynomial::divide(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(UnivariatePolynomial num, UnivariatePolynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UnivariatePolynomial(1);
    return;
  }
  if (!den.is_constant()) {
    UnivariatePolynomial g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = UnivariatePolynomial::divide(num, g).first;
      den = UnivariatePolynomial::divide(den, g).first;
    }
  }
  const Rational lc = den.leading();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num = num * UnivariatePolynomial(inv);
    den = den * UnivariatePolynomial(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(alpha)");
  note_divisor(num_);
  return RationalFunction(den_, num_);
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = den_.evaluate(at);
  if (d == 0) throw DivisionByZero("denominator " + den_.to_string() + " vanishes at alpha = " + at.get_str());
  return num_.evaluate(at) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const UnivariatePolynomial& p) {
    const auto& c = p.coefficients();
    const auto nonzero = std::count_if(c.begin(), c.end(), [](const Rational& q) { return q != 0; });
    const bool simple = nonzero == 1 && (p.leading() == 1 || p.is_constant());
    return simple ? p.to_string() : "(" + p.to_string() + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_.is_constant() && b.den_.is_constant()) return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Canonical{});
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_constant() && b.den_.is_constant()) return RationalFunction(a.num_ * b.num_, a.den_, RationalFunction::Canonical{});
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

// ---------------------------------------------------------------------------
// DenominatorLog

void DenominatorLog::record(const UnivariatePolynomial& p) {
  UnivariatePolynomial m = p.monic();
  if (std::find(polys_.begin(), polys_.end(), m) == polys_.end()) polys_.push_back(std::move(m));
}

bool DenominatorLog::vanishes_at(const Rational& at) const {
  return std::any_of(polys_.begin(), polys_.end(), [&](const auto& p) { return p.evaluate(at) == 0; });
}

DenominatorScope::DenominatorScope(DenominatorLog& log) : previous_(active_log) { active_log = &log; }
DenominatorScope::~DenominatorScope() { active_log = previous_; }

}  // namespace omega
