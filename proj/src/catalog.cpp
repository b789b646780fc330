#include "omega/catalog.hpp"

#include <algorithm>
#include <set>

#include "omega/expression.hpp"

namespace omega {

std::string_view kind_name(AlgebraKind k) { return k == AlgebraKind::Lie ? "lie" : "lsa"; }

namespace {

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = [] {
    const ParameterSlot alpha_any{"alpha", "", ""};
    const ParameterSlot alpha_generic{"alpha", "", "alpha != 0, -1"};
    const std::vector<ParameterSlot> lsa_slots{{"a1", "0", ""}, {"a2", "0", ""}, {"a3", "0", ""}};
    return std::vector<CatalogEntry>{
        {"A_alpha", AlgebraKind::Lie, 3, false, {alpha_any}, "[x,y]=x, [x,z]=x+y, [y,z]=z+alpha*x, w(y,z)=-1"},
        {"B", AlgebraKind::Lie, 3, false, {}, "[x,y]=y, [x,z]=y+z, [y,z]=x, w(y,z)=2"},
        {"C_alpha", AlgebraKind::Lie, 3, false, {alpha_generic}, "[x,y]=y, [x,z]=alpha*z, [y,z]=x, w(y,z)=1+alpha"},
        {"G_1_alpha", AlgebraKind::Lie, 4, false, {alpha_any},
         "[e,x]=e+alpha*y, [e,y]=-e+x, [y,z]=z, [x,y]=y, w(e,x)=alpha, w(x,y)=1"},
        {"H_1_alpha", AlgebraKind::Lie, 4, false, {alpha_any},
         "[e,x]=e+alpha*y, [e,y]=-e+x+z, [y,z]=z, [x,y]=y, w(e,x)=alpha, w(x,y)=1"},
        {"A_tilde_alpha", AlgebraKind::Lie, 4, false, {alpha_any},
         "[x,y]=x, [x,z]=x+y, [y,z]=z+alpha*x, [e,z]=e, w(y,z)=-1"},
        {"B_tilde", AlgebraKind::Lie, 4, false, {}, "[x,y]=y, [x,z]=y+z, [y,z]=x, [e,x]=-2e, w(y,z)=2"},
        {"C_tilde_alpha", AlgebraKind::Lie, 4, false, {alpha_generic},
         "[x,y]=y, [x,z]=alpha*z, [y,z]=x, [e,x]=-(1+alpha)e, w(y,z)=1+alpha"},
        {"P1", AlgebraKind::Lie, 5, true,
         {{"dimH", "2", "dimH >= 2"}, {"a", "1", "a != 0"}, {"h1", "h0", "h1 in span(h0) + H1"}, {"h2", "f1", "h2 in H1"}},
         "basis h0, f1..fm (H1), x, v: [x,h0]=-a*h0, [v,h]=h/a, [v,h0]=h2+h0/a+x, [x,v]=h1+a*v, w(x,v)=1"},
        {"P2", AlgebraKind::Lie, 5, true,
         {{"dimH", "2", "dimH >= 2"},
          {"h1", "f1", "h1 in H"},
          {"h2", "f2", "h2 in H"},
          {"h3", "0", "h3 in H"},
          {"b1", "1", "b1 != 0"},
          {"b2", "0", ""},
          {"c1", "-2", "c1 != 0, b1 + c1 + 1 = 0"}},
         "basis f1..fm (H), x, y, a: [a,h]=h, [x,y]=h3+a, [x,a]=h1+b1*x+b2*y, [y,a]=h2+c1*y, w(x,y)=1"},
        {"LSA3-1", AlgebraKind::Lsa, 3, false, lsa_slots,
         "e1e_j = e2e_j, e3e_j = 2e_j - e1e_j, w(e2,e3)=2, w(e3,e1)=-2"},
        {"LSA3-2", AlgebraKind::Lsa, 3, false, lsa_slots,
         "e1e_j = 2e_j, e2e1=e3e1=e2+e3, e2e2=e3e2=a1e1+a2e2+a3e3, e2e3=e3e3=(a1+1)e1+a2e2+a3e3, w(e2,e3)=2"},
    };
  }();
  return all;
}

// Reads parameters against an entry's slot list, rejecting unknown keys.
class Params {
 public:
  Params(const CatalogEntry& entry, const CatalogParams& given, Field field)
      : entry_(entry), given_(given), field_(field) {
    for (const auto& [key, value] : given) {
      const bool known = std::any_of(entry.slots.begin(), entry.slots.end(), [&](const auto& s) { return s.name == key; });
      if (!known) throw CatalogError(entry.name + ": unknown parameter '" + key + "'");
    }
  }

  std::string raw(const std::string& name) const {
    if (auto it = given_.find(name); it != given_.end()) return it->second;
    return slot(name).default_value;
  }

  Scalar scalar(const std::string& name) const {
    const std::string text = raw(name);
    if (text.empty()) {
      if (name == "alpha" && field_ == Field::QAlpha) return Scalar::alpha();
      throw CatalogError(entry_.name + ": parameter '" + name + "' is required over Q");
    }
    try {
      return parse_scalar(text, field_);
    } catch (const ParseError& e) {
      throw CatalogError(entry_.name + ": parameter " + name + "=" + text + ": " + e.detail());
    }
  }

  Vector vector(const std::string& name, std::span<const std::string> names) const {
    const std::string text = raw(name);
    try {
      return parse_linear_combination(text, field_, names);
    } catch (const ParseError& e) {
      throw CatalogError(entry_.name + ": parameter " + name + "=" + text + ": " + e.detail());
    }
  }

  std::size_t count(const std::string& name) const {
    const std::string text = raw(name);
    if (text.empty() || text.size() > 3 || !std::all_of(text.begin(), text.end(), ::isdigit))
      throw CatalogError(entry_.name + ": parameter '" + name + "' must be a small non-negative integer");
    return static_cast<std::size_t>(std::stoul(text));
  }

 private:
  const ParameterSlot& slot(const std::string& name) const {
    for (const auto& s : entry_.slots)
      if (s.name == name) return s;
    throw std::logic_error("undeclared slot " + name);
  }

  const CatalogEntry& entry_;
  const CatalogParams& given_;
  Field field_;
};

// Sparse construction by basis name; unlisted brackets stay zero.
class Builder {
 public:
  Builder(Field field, std::vector<std::string> names)
      : field_(field), names_(std::move(names)), table_(names_.size()), omega_(names_.size()) {}

  std::size_t index(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::logic_error("unknown basis name " + std::string(name));
    return static_cast<std::size_t>(it - names_.begin());
  }

  Vector vec(std::initializer_list<std::pair<std::string_view, Scalar>> terms) const {
    Vector v(names_.size());
    for (const auto& [name, c] : terms) v[index(name)] += c;
    return v;
  }

  const std::vector<std::string>& names() const { return names_; }

  void bracket(std::string_view a, std::string_view b, const Vector& v) {
    const Vector neg = scaled(v, Scalar(-1));
    table_.set(index(a), index(b), v);
    table_.set(index(b), index(a), neg);
  }

  void product(std::string_view a, std::string_view b, const Vector& v) { table_.set(index(a), index(b), v); }

  void omega(std::string_view a, std::string_view b, const Scalar& s) { omega_.set(index(a), index(b), s); }

  OmegaLieAlgebra lie() const { return with_field(OmegaLieAlgebra{field_, names_, table_, omega_}, field_); }
  OmegaLsaAlgebra lsa() const { return with_field(OmegaLsaAlgebra{field_, names_, table_, omega_}, field_); }

  static Vector scaled(Vector v, const Scalar& s) {
    for (auto& x : v) x *= s;
    return v;
  }
  static Vector sum(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  StructureTensor table_;
  OmegaForm omega_;
};

void require_nonzero(const CatalogEntry& e, const std::string& what, const Scalar& s) {
  if (s.is_zero()) throw CatalogError(e.name + ": side condition violated: " + what + " != 0");
}

void require_supported(const CatalogEntry& e, const std::string& what, const Vector& v, const std::vector<std::string>& names,
                       const std::set<std::string>& allowed) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero() && !allowed.contains(names[i]))
      throw CatalogError(e.name + ": side condition violated: " + what + " has a component along " + names[i]);
}

OmegaLieAlgebra build_lie(const CatalogEntry& e, const Params& p, Field field) {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const std::vector<std::string> xyze{"x", "y", "z", "e"};
  const std::string& n = e.name;

  if (n == "A_alpha" || n == "A_tilde_alpha") {
    const Scalar al = p.scalar("alpha");
    Builder b(field, n == "A_alpha" ? xyz : xyze);
    b.bracket("x", "y", b.vec({{"x", 1}}));
    b.bracket("x", "z", b.vec({{"x", 1}, {"y", 1}}));
    b.bracket("y", "z", b.vec({{"z", 1}, {"x", al}}));
    if (n == "A_tilde_alpha") b.bracket("e", "z", b.vec({{"e", 1}}));
    b.omega("y", "z", -1);
    return b.lie();
  }
  if (n == "B" || n == "B_tilde") {
    Builder b(field, n == "B" ? xyz : xyze);
    b.bracket("x", "y", b.vec({{"y", 1}}));
    b.bracket("x", "z", b.vec({{"y", 1}, {"z", 1}}));
    b.bracket("y", "z", b.vec({{"x", 1}}));
    // [e,y] = 0: omega-Jacobi on (x,y,e) forces it once [e,x] = -2e.
    if (n == "B_tilde") b.bracket("e", "x", b.vec({{"e", -2}}));
    b.omega("y", "z", 2);
    return b.lie();
  }
  if (n == "C_alpha" || n == "C_tilde_alpha") {
    const Scalar al = p.scalar("alpha");
    require_nonzero(e, "alpha", al);
    require_nonzero(e, "1 + alpha", al + 1);
    Builder b(field, n == "C_alpha" ? xyz : xyze);
    b.bracket("x", "y", b.vec({{"y", 1}}));
    b.bracket("x", "z", b.vec({{"z", al}}));
    b.bracket("y", "z", b.vec({{"x", 1}}));
    if (n == "C_tilde_alpha") b.bracket("e", "x", b.vec({{"e", -(al + 1)}}));
    b.omega("y", "z", al + 1);
    return b.lie();
  }
  if (n == "G_1_alpha" || n == "H_1_alpha") {
    const Scalar al = p.scalar("alpha");
    Builder b(field, xyze);
    b.bracket("e", "x", b.vec({{"e", 1}, {"y", al}}));
    if (n == "G_1_alpha") b.bracket("e", "y", b.vec({{"e", -1}, {"x", 1}}));
    else b.bracket("e", "y", b.vec({{"e", -1}, {"x", 1}, {"z", 1}}));
    b.bracket("y", "z", b.vec({{"z", 1}}));
    b.bracket("x", "y", b.vec({{"y", 1}}));
    b.omega("e", "x", al);
    b.omega("x", "y", 1);
    return b.lie();
  }
  if (n == "P1") {
    const std::size_t m = p.count("dimH");
    if (m < 2) throw CatalogError("P1: side condition violated: dimH >= 2");
    std::vector<std::string> names{"h0"};
    std::vector<std::string> hs;
    for (std::size_t i = 1; i <= m; ++i) hs.push_back("f" + std::to_string(i));
    names.insert(names.end(), hs.begin(), hs.end());
    names.insert(names.end(), {"x", "v"});
    const Scalar a = p.scalar("a");
    require_nonzero(e, "a", a);
    const Vector h1 = p.vector("h1", names);
    const Vector h2 = p.vector("h2", names);
    std::set<std::string> h1_allowed(hs.begin(), hs.end());
    const std::set<std::string> h2_allowed = h1_allowed;
    h1_allowed.insert("h0");
    require_supported(e, "h1", h1, names, h1_allowed);
    require_supported(e, "h2", h2, names, h2_allowed);
    const Scalar inv_a = a.inverse();
    Builder b(field, names);
    b.bracket("x", "h0", b.vec({{"h0", -a}}));
    for (const auto& h : hs) b.bracket("v", h, b.vec({{h, inv_a}}));
    b.bracket("v", "h0", Builder::sum(h2, b.vec({{"h0", inv_a}, {"x", 1}})));
    b.bracket("x", "v", Builder::sum(h1, b.vec({{"v", a}})));
    b.omega("x", "v", 1);
    return b.lie();
  }
  if (n == "P2") {
    const std::size_t m = p.count("dimH");
    if (m < 2) throw CatalogError("P2: side condition violated: dimH >= 2");
    std::vector<std::string> hs;
    for (std::size_t i = 1; i <= m; ++i) hs.push_back("f" + std::to_string(i));
    std::vector<std::string> names = hs;
    names.insert(names.end(), {"x", "y", "a"});
    const std::set<std::string> in_h(hs.begin(), hs.end());
    const Vector h1 = p.vector("h1", names);
    const Vector h2 = p.vector("h2", names);
    const Vector h3 = p.vector("h3", names);
    require_supported(e, "h1", h1, names, in_h);
    require_supported(e, "h2", h2, names, in_h);
    require_supported(e, "h3", h3, names, in_h);
    const Scalar b1 = p.scalar("b1");
    const Scalar b2 = p.scalar("b2");
    const Scalar c1 = p.scalar("c1");
    require_nonzero(e, "b1", b1);
    require_nonzero(e, "c1", c1);
    if (!(b1 + c1 + 1).is_zero()) throw CatalogError("P2: side condition violated: b1 + c1 + 1 = 0");
    Builder b(field, names);
    for (const auto& h : hs) b.bracket("a", h, b.vec({{h, 1}}));
    b.bracket("x", "y", Builder::sum(h3, b.vec({{"a", 1}})));
    b.bracket("x", "a", Builder::sum(h1, b.vec({{"x", b1}, {"y", b2}})));
    b.bracket("y", "a", Builder::sum(h2, b.vec({{"y", c1}})));
    b.omega("x", "y", 1);
    return b.lie();
  }
  throw std::logic_error("no Lie constructor for " + n);
}

OmegaLsaAlgebra build_lsa(const CatalogEntry& e, const Params& p, Field field) {
  const Scalar a1 = p.scalar("a1");
  const Scalar a2 = p.scalar("a2");
  const Scalar a3 = p.scalar("a3");
  Builder b(field, {"e1", "e2", "e3"});
  if (e.name == "LSA3-1") {
    // l_e1 = l_e2 and l_e1 + l_e3 = 2 id.
    const Vector col1 = b.vec({{"e1", a1}, {"e2", a2}, {"e3", a3}});
    const Vector col2 = b.vec({{"e1", a1 - 1}, {"e2", a2 + 1}, {"e3", a3}});
    const Vector col3 = b.vec({{"e1", 2 - a1}, {"e2", 1 - a2}, {"e3", 1 - a3}});
    const Vector cols[] = {col1, col2, col3};
    const char* names[] = {"e1", "e2", "e3"};
    for (int j = 0; j < 3; ++j) {
      b.product("e1", names[j], cols[j]);
      b.product("e2", names[j], cols[j]);
      b.product("e3", names[j], Builder::sum(b.vec({{names[j], 2}}), Builder::scaled(cols[j], -1)));
    }
    b.omega("e2", "e3", 2);
    b.omega("e3", "e1", -2);
    return b.lsa();
  }
  b.product("e1", "e1", b.vec({{"e1", 2}}));
  b.product("e1", "e2", b.vec({{"e2", 2}}));
  b.product("e1", "e3", b.vec({{"e3", 2}}));
  for (const char* r : {"e2", "e3"}) {
    b.product(r, "e1", b.vec({{"e2", 1}, {"e3", 1}}));
    b.product(r, "e2", b.vec({{"e1", a1}, {"e2", a2}, {"e3", a3}}));
    b.product(r, "e3", b.vec({{"e1", a1 + 1}, {"e2", a2}, {"e3", a3}}));
  }
  b.omega("e2", "e3", 2);
  return b.lsa();
}

}  // namespace

const std::vector<CatalogEntry>& list_entries() { return entries(); }

std::vector<CatalogEntry> list_entries(std::optional<AlgebraKind> kind, std::optional<std::size_t> dim) {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries()) {
    if (kind && e.kind != *kind) continue;
    if (dim && (e.extensible ? *dim < e.dim : *dim != e.dim)) continue;
    out.push_back(e);
  }
  return out;
}

const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw CatalogError("unknown catalog family '" + std::string(name) + "'");
}

bool has_alpha(std::string_view name) {
  const auto& slots = find_entry(name).slots;
  return std::any_of(slots.begin(), slots.end(), [](const auto& s) { return s.name == "alpha"; });
}

OmegaLieAlgebra instantiate_lie(std::string_view name, const CatalogParams& params, Field field) {
  const CatalogEntry& e = find_entry(name);
  if (e.kind != AlgebraKind::Lie) throw CatalogError(e.name + " is not an omega-Lie family");
  OmegaLieAlgebra L = build_lie(e, Params(e, params, field), field);
  AxiomReport report = check_omega_lie(L);
  if (!report.passed()) throw AxiomError(e.name + ": instance fails the omega-Lie axioms", std::move(report));
  return L;
}

OmegaLsaAlgebra instantiate_lsa(std::string_view name, const CatalogParams& params, Field field) {
  const CatalogEntry& e = find_entry(name);
  if (e.kind != AlgebraKind::Lsa) throw CatalogError(e.name + " is not an omega-left-symmetric family");
  OmegaLsaAlgebra A = build_lsa(e, Params(e, params, field), field);
  AxiomReport report = check_omega_lsa(A);
  if (!report.passed()) throw AxiomError(e.name + ": instance fails the omega-left-symmetric identity", std::move(report));
  return A;
}

AnyAlgebra instantiate(std::string_view name, const CatalogParams& params, Field field) {
  if (find_entry(name).kind == AlgebraKind::Lie) return instantiate_lie(name, params, field);
  return instantiate_lsa(name, params, field);
}

}  // namespace omega
