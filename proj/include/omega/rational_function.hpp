#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace omega {

/// Arbitrary-precision rational; GMP keeps it canonical (reduced, positive
/// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Builds num/den in canonical form. Throws DivisionByZero when den == 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);

std::string to_string(const Rational& q);

/// Dense polynomial over Q in one formal variable. coefficients()[d] is the
/// coefficient of x^d; the leading coefficient is never zero.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);
  UnivariatePolynomial(const Rational& constant);  // NOLINT: implicit by design of the field tower
  UnivariatePolynomial(int constant) : UnivariatePolynomial(Rational(constant)) {}

  static UnivariatePolynomial variable();

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t d) const;
  const Rational& leading() const;

  UnivariatePolynomial monic() const;
  Rational evaluate(const Rational& at) const;
  std::string to_string(const std::string& var = "alpha") const;

  UnivariatePolynomial operator-() const;
  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) = default;

  /// Quotient and remainder; throws DivisionByZero on a zero divisor.
  static std::pair<UnivariatePolynomial, UnivariatePolynomial> divide(const UnivariatePolynomial& a,
                                                                      const UnivariatePolynomial& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial poly_gcd(UnivariatePolynomial p, UnivariatePolynomial q);

/// Element of Q(alpha): numerator / denominator with the denominator monic and
/// coprime to the numerator. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(UnivariatePolynomial num, UnivariatePolynomial den = UnivariatePolynomial(1));

  static RationalFunction alpha() { return RationalFunction(UnivariatePolynomial::variable()); }

  const UnivariatePolynomial& numerator() const { return num_; }
  const UnivariatePolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Only meaningful when is_constant().
  Rational constant_value() const { return num_.coefficient(0); }

  RationalFunction inverse() const;
  /// Throws DivisionByZero when the denominator vanishes at `at`.
  Rational evaluate(const Rational& at) const;
  std::string to_string() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  struct Canonical {};
  RationalFunction(UnivariatePolynomial num, UnivariatePolynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  UnivariatePolynomial num_;
  UnivariatePolynomial den_;
};

/// Records every polynomial that a computation divided by while a
/// DenominatorScope is active on the current thread. A rational sample
/// alpha0 is a sound specialization of the generic run iff none of the
/// recorded polynomials vanish there.
class DenominatorLog {
 public:
  void record(const UnivariatePolynomial& p);
  bool vanishes_at(const Rational& at) const;
  const std::vector<UnivariatePolynomial>& polynomials() const { return polys_; }

 private:
  std::vector<UnivariatePolynomial> polys_;
};

class DenominatorScope {
 public:
  explicit DenominatorScope(DenominatorLog& log);
  ~DenominatorScope();
  DenominatorScope(const DenominatorScope&) = delete;
  DenominatorScope& operator=(const DenominatorScope&) = delete;

 private:
  DenominatorLog* previous_;
};

}  // namespace omega
