#include "omega/expression.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace omega {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(std::move(message)),
      line_(line),
      column_(column) {}

bool is_identifier(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

namespace {

// Intermediate value: scalar part plus (optional) vector part. Linearity is
// enforced at every operator.
struct Value {
  Scalar constant;
  std::optional<Vector> vec;
};

class Parser {
 public:
  Parser(std::string_view text, Field field, std::span<const std::string> names, SourcePos at)
      : text_(text), field_(field), names_(names), at_(at) {}

  Value parse_all() {
    Value v = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& msg) const {
    throw ParseError(msg, at_.line, at_.column + p);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value acc = unary();
    for (;;) {
      const std::size_t at = (skip_ws(), pos_);
      if (accept('+')) acc = add(acc, unary(), at, false);
      else if (accept('-')) acc = add(acc, unary(), at, true);
      else return acc;
    }
  }

  Value unary() {
    if (accept('-')) return negate(unary());
    if (accept('+')) return unary();
    return term();
  }

  Value term() {
    Value acc = power();
    for (;;) {
      const std::size_t at = (skip_ws(), pos_);
      if (accept('*')) {
        acc = multiply(acc, signed_power(), at);
      } else if (accept('/')) {
        Value d = signed_power();
        if (d.vec) fail_at(at, "division by a basis element");
        if (d.constant.is_zero()) fail_at(at, "division by zero");
        acc = scale(acc, d.constant.inverse());
      } else {
        return acc;
      }
    }
  }

  Value signed_power() {
    if (accept('-')) return negate(signed_power());
    return power();
  }

  Value power() {
    Value base = primary();
    const std::size_t at = (skip_ws(), pos_);
    if (!accept('^')) return base;
    if (base.vec) fail_at(at, "power of a basis element");
    bool negative = accept('-');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 4) fail_at(start, "exponent too large");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Scalar r = 1;
    for (int i = 0; i < e; ++i) r *= base.constant;
    if (negative) {
      if (r.is_zero()) fail_at(at, "division by zero");
      r = r.inverse();
    }
    return Value{r, std::nullopt};
  }

  Value primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Value{Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start))))), std::nullopt};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view id = text_.substr(start, pos_ - start);
      const auto it = std::find(names_.begin(), names_.end(), id);
      if (it != names_.end()) {
        return Value{Scalar(), unit_vector(names_.size(), static_cast<std::size_t>(it - names_.begin()))};
      }
      if (id == "alpha") {
        if (field_ != Field::QAlpha) fail_at(start, "'alpha' is only available over Q(alpha)");
        return Value{Scalar::alpha(), std::nullopt};
      }
      fail_at(start, "unknown name '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static Value negate(Value v) { return scale(std::move(v), Scalar(-1)); }

  static Value scale(Value v, const Scalar& s) {
    v.constant *= s;
    if (v.vec)
      for (auto& x : *v.vec) x *= s;
    return v;
  }

  Value add(Value a, const Value& b, std::size_t at, bool subtract) const {
    const Scalar sign = subtract ? Scalar(-1) : Scalar(1);
    a.constant += sign * b.constant;
    if (b.vec) {
      if (!a.vec) a.vec = zero_vector(names_.size());
      for (std::size_t i = 0; i < b.vec->size(); ++i) (*a.vec)[i] += sign * (*b.vec)[i];
    }
    if (a.vec && !a.constant.is_zero()) fail_at(at, "sum mixes a scalar with basis elements");
    return a;
  }

  Value multiply(const Value& a, const Value& b, std::size_t at) const {
    if (a.vec && b.vec) fail_at(at, "product of two basis elements is not linear");
    if (a.vec) return scale(a, b.constant);
    if (b.vec) return scale(b, a.constant);
    return Value{a.constant * b.constant, std::nullopt};
  }

  std::string_view text_;
  Field field_;
  std::span<const std::string> names_;
  SourcePos at_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, Field field, SourcePos at) {
  Parser p(text, field, {}, at);
  Value v = p.parse_all();
  return v.constant.in(field);
}

Vector parse_linear_combination(std::string_view text, Field field, std::span<const std::string> names,
                                SourcePos at) {
  Parser p(text, field, names, at);
  Value v = p.parse_all();
  if (!v.vec) {
    if (!v.constant.is_zero()) p.fail_at(0, "expected a linear combination of basis elements");
    v.vec = zero_vector(names.size());
  } else if (!v.constant.is_zero()) {
    p.fail_at(0, "sum mixes a scalar with basis elements");
  }
  for (auto& x : *v.vec) x = x.in(field);
  return *v.vec;
}

std::string format_linear_combination(const Vector& v, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Scalar& c = v[i];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    std::string coef;
    bool negative = false;
    if (c.is_constant()) {
      Rational q = c.constant_value();
      negative = q < 0;
      q = abs(q);
      if (q != 1) coef = q.get_str() + "*";
    } else {
      std::string s = c.to_string();
      if (s.starts_with('-')) {
        negative = true;
        s = (-c).to_string();
      }
      coef = "(" + s + ")*";
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += coef + names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace omega
