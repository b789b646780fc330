#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "omega/rational_function.hpp"

namespace omega {

/// Which scalar field an algebra instance lives over.
enum class Field { Q, QAlpha };

std::string_view field_name(Field f);  // "Q" or "Q(alpha)"
Field parse_field_name(std::string_view name);

/// Exact scalar: a rational, or a rational function in the formal parameter
/// alpha. Mixed arithmetic promotes to Q(alpha); comparison is by value, so
/// Rational(2) == RationalFunction(2).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : value_(Rational(v)) {}  // NOLINT
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT
  Scalar(RationalFunction v) : value_(std::move(v)) {}  // NOLINT

  static Scalar alpha() { return Scalar(RationalFunction::alpha()); }

  Field field() const { return std::holds_alternative<Rational>(value_) ? Field::Q : Field::QAlpha; }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  /// Promotes a rational into Q(alpha).
  RationalFunction as_rational_function() const;

  /// Converts into `f`. Demotion to Q throws std::domain_error unless the
  /// value is constant.
  Scalar in(Field f) const;

  bool is_zero() const;
  bool is_one() const;
  /// True for rationals and for constant rational functions.
  bool is_constant() const;
  Rational constant_value() const;

  Scalar inverse() const;
  /// Substitutes alpha = at (identity on rationals).
  Rational evaluate(const Rational& at) const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, RationalFunction> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

}  // namespace omega
