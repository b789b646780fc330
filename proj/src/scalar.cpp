#include "omega/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace omega {

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "Q(alpha)"; }

Field parse_field_name(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "Q(alpha)") return Field::QAlpha;
  throw std::invalid_argument("unknown field '" + std::string(name) + "' (expected Q or Q(alpha))");
}

RationalFunction Scalar::as_rational_function() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return RationalFunction(*q);
  return std::get<RationalFunction>(value_);
}

Scalar Scalar::in(Field f) const {
  if (f == field()) return *this;
  if (f == Field::QAlpha) return Scalar(as_rational_function());
  const auto& rf = std::get<RationalFunction>(value_);
  if (!rf.is_constant()) throw std::domain_error("'" + rf.to_string() + "' is not an element of Q");
  return Scalar(rf.constant_value());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) return v == 0;
    else return v.is_zero();
  }, value_);
}

bool Scalar::is_one() const { return is_constant() && constant_value() == 1; }

bool Scalar::is_constant() const {
  if (const auto* rf = std::get_if<RationalFunction>(&value_)) return rf->is_constant();
  return true;
}

Rational Scalar::constant_value() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  return std::get<RationalFunction>(value_).constant_value();
}

Scalar Scalar::inverse() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    if (*q == 0) throw DivisionByZero("inverse of zero");
    return Scalar(Rational(1) / *q);
  }
  return Scalar(std::get<RationalFunction>(value_).inverse());
}

Rational Scalar::evaluate(const Rational& at) const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  return std::get<RationalFunction>(value_).evaluate(at);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  return std::get<RationalFunction>(value_).to_string();
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

namespace {
template <class Op>
void combine(std::variant<Rational, RationalFunction>& lhs, const std::variant<Rational, RationalFunction>& rhs, Op op) {
  if (auto* a = std::get_if<Rational>(&lhs)) {
    if (const auto* b = std::get_if<Rational>(&rhs)) {
      *a = Rational(op(*a, *b));
      return;
    }
    lhs = RationalFunction(op(RationalFunction(*a), std::get<RationalFunction>(rhs)));
    return;
  }
  auto& a = std::get<RationalFunction>(lhs);
  if (const auto* b = std::get_if<Rational>(&rhs)) a = op(a, RationalFunction(*b));
  else a = op(a, std::get<RationalFunction>(rhs));
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(value_, o.value_, [](const auto& a, const auto& b) { return a + b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(value_, o.value_, [](const auto& a, const auto& b) { return a - b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(value_, o.value_, [](const auto& a, const auto& b) { return a * b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  combine(value_, o.value_, [](const auto& a, const auto& b) { return a / b; });
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* qa = std::get_if<Rational>(&a.value_);
  const auto* qb = std::get_if<Rational>(&b.value_);
  if (qa != nullptr && qb != nullptr) return *qa == *qb;
  return a.as_rational_function() == b.as_rational_function();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace omega
