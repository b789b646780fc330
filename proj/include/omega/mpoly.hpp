#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omega/scalar.hpp"

namespace omega {

enum class MonomialOrder { DegRevLex, Lex };

/// Exponent vector over variables p0..p{n-1}. Up to 16 variables are stored
/// inline; the total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::span<const std::uint32_t> exps);
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return data()[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const std::uint32_t> exponents() const { return {data(), n_}; }

  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  static constexpr std::size_t kInline = 16;
  const std::uint32_t* data() const { return n_ <= kInline ? small_.data() : large_.data(); }
  std::uint32_t* data() { return n_ <= kInline ? small_.data() : large_.data(); }
  void recount();

  std::size_t n_ = 0;
  std::uint32_t degree_ = 0;
  std::array<std::uint32_t, kInline> small_{};
  std::vector<std::uint32_t> large_;
};

/// <0, 0, >0 as a is smaller, equal, larger than b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial with terms kept strictly decreasing in its monomial
/// order and no zero coefficients.
class MultivariatePolynomial {
 public:
  MultivariatePolynomial() = default;
  explicit MultivariatePolynomial(std::size_t nvars, MonomialOrder order = MonomialOrder::DegRevLex)
      : nvars_(nvars), order_(order) {}
  /// Sorts and merges like terms, drops zeros.
  MultivariatePolynomial(std::size_t nvars, MonomialOrder order, std::vector<Term> terms);

  static MultivariatePolynomial constant(std::size_t nvars, const Scalar& c,
                                         MonomialOrder order = MonomialOrder::DegRevLex);
  static MultivariatePolynomial variable(std::size_t nvars, std::size_t i,
                                         MonomialOrder order = MonomialOrder::DegRevLex);

  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
  std::uint32_t total_degree() const;
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coefficient() const { return terms_.front().coefficient; }
  bool involves(std::size_t var) const;

  MultivariatePolynomial monic() const;
  MultivariatePolynomial with_order(MonomialOrder order) const;
  /// Renames variable i to perm[i].
  MultivariatePolynomial permuted(std::span<const std::size_t> perm, MonomialOrder order) const;
  MultivariatePolynomial mul_term(const Monomial& m, const Scalar& c) const;
  /// this -= c * m * g in one pass.
  void subtract_scaled(const Scalar& c, const Monomial& m, const MultivariatePolynomial& g);
  /// Removes and returns the leading term.
  Term pop_leading();
  /// Trusts that `terms` is strictly decreasing with no zero coefficients.
  static MultivariatePolynomial from_sorted(std::size_t nvars, MonomialOrder order, std::vector<Term> terms);
  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replaces variable `var` by `value`; the variable count is unchanged.
  MultivariatePolynomial substitute(std::size_t var, const Scalar& value) const;

  MultivariatePolynomial operator-() const;
  friend MultivariatePolynomial operator+(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  friend MultivariatePolynomial operator-(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b);

  /// Variables print as p0, p1, ... unless names are given.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  static MultivariatePolynomial merge(const MultivariatePolynomial& a, const MultivariatePolynomial& b, bool subtract);
  std::size_t nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::DegRevLex;
  std::vector<Term> terms_;
};

}  // namespace omega
