#include "omega/algebra_file.hpp"

#include <map>
#include <set>
#include <sstream>

namespace omega {

namespace {

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (offset) *offset = b;
  return s.substr(b, e - b);
}

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped, not trimmed
};

struct PairEntry {
  std::size_t a;
  std::size_t b;
  std::string_view expr;
  SourcePos pos;
};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t start = 0;
    for (std::size_t number = 1; start <= text.size(); ++number) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(start, end - start);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      lines_.push_back(Line{number, raw});
      start = end + 1;
    }
  }

  AnyAlgebra run() {
    std::map<std::string, std::pair<std::string_view, SourcePos>> header;
    std::string section;
    SourcePos section_pos;
    std::vector<PairEntry> table;
    std::vector<PairEntry> omega;
    std::set<std::string> seen_sections;

    for (const auto& line : lines_) {
      std::size_t off = 0;
      const std::string_view t = trim(line.text, &off);
      if (t.empty()) continue;
      const SourcePos pos{line.number, off + 1};
      if (t.front() == '[') {
        if (t.back() != ']') throw ParseError("unterminated section header", pos.line, pos.column);
        section = std::string(trim(t.substr(1, t.size() - 2)));
        if (section != "brackets" && section != "products" && section != "omega")
          throw ParseError("unknown section [" + section + "]", pos.line, pos.column);
        if (!seen_sections.insert(section).second)
          throw ParseError("section [" + section + "] appears twice", pos.line, pos.column);
        if (section != "omega") section_pos = pos;
        if (!basis_ready()) finish_header(header);
        continue;
      }
      const auto eq = t.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected '='", pos.line, pos.column);
      std::size_t lhs_off = 0;
      std::size_t rhs_off = 0;
      const std::string_view lhs = trim(t.substr(0, eq), &lhs_off);
      const std::string_view rhs = trim(t.substr(eq + 1), &rhs_off);
      const SourcePos rhs_pos{line.number, off + eq + 1 + rhs_off + 1};
      if (rhs.empty()) throw ParseError("missing value after '='", rhs_pos.line, rhs_pos.column);
      if (section.empty()) {
        const std::string key(lhs);
        if (key != "kind" && key != "field" && key != "dim" && key != "basis")
          throw ParseError("unknown header key '" + key + "'", pos.line, pos.column);
        if (!header.emplace(key, std::make_pair(rhs, rhs_pos)).second)
          throw ParseError("header key '" + key + "' given twice", pos.line, pos.column);
        continue;
      }
      PairEntry e = parse_pair(lhs, SourcePos{line.number, off + lhs_off + 1});
      e.expr = rhs;
      e.pos = rhs_pos;
      (section == "omega" ? omega : table).push_back(e);
    }
    if (!basis_ready()) finish_header(header);

    if (seen_sections.contains(kind_ == "lie" ? "products" : "brackets"))
      throw ParseError(std::string("section [") + (kind_ == "lie" ? "products" : "brackets") + "] does not belong to kind " +
                           kind_,
                       section_pos.line, section_pos.column);

    const std::size_t n = names_.size();
    StructureTensor tensor(n);
    std::set<std::pair<std::size_t, std::size_t>> listed;
    for (const auto& e : table) {
      if (kind_ == "lie") {
        if (e.a == e.b)
          throw ParseError("[" + names_[e.a] + "," + names_[e.a] + "] is zero by antisymmetry and must not be listed",
                           e.pos.line, e.pos.column);
        if (listed.contains({e.b, e.a}))
          throw ParseError("both " + names_[e.a] + "," + names_[e.b] + " and " + names_[e.b] + "," + names_[e.a] +
                               " listed; antisymmetry is implicit",
                           e.pos.line, e.pos.column);
      }
      if (!listed.insert({e.a, e.b}).second)
        throw ParseError("pair " + names_[e.a] + "," + names_[e.b] + " listed twice", e.pos.line, e.pos.column);
      const Vector v = parse_linear_combination(e.expr, field_, names_, e.pos);
      tensor.set(e.a, e.b, v);
      if (kind_ == "lie") {
        Vector neg(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
        tensor.set(e.b, e.a, neg);
      }
    }

    OmegaForm form(n);
    std::set<std::pair<std::size_t, std::size_t>> omega_listed;
    for (const auto& e : omega) {
      if (e.a == e.b) throw ParseError("omega is skew; diagonal entries must not be listed", e.pos.line, e.pos.column);
      const auto key = std::minmax(e.a, e.b);
      if (!omega_listed.insert(key).second)
        throw ParseError("omega pair " + names_[e.a] + "," + names_[e.b] + " listed twice", e.pos.line, e.pos.column);
      const Scalar v = parse_scalar(e.expr, field_, e.pos);
      form.set(e.a, e.b, v);
    }

    if (kind_ == "lie") return OmegaLieAlgebra{field_, names_, std::move(tensor), std::move(form)};
    return OmegaLsaAlgebra{field_, names_, std::move(tensor), std::move(form)};
  }

 private:
  bool basis_ready() const { return !kind_.empty(); }

  void finish_header(const std::map<std::string, std::pair<std::string_view, SourcePos>>& header) {
    auto require = [&](const std::string& key) -> const std::pair<std::string_view, SourcePos>& {
      auto it = header.find(key);
      if (it == header.end()) throw ParseError("missing header key '" + key + "'", 1, 1);
      return it->second;
    };
    const auto& [kind, kind_pos] = require("kind");
    if (kind != "lie" && kind != "lsa")
      throw ParseError("kind must be lie or lsa, got '" + std::string(kind) + "'", kind_pos.line, kind_pos.column);
    if (auto it = header.find("field"); it != header.end()) {
      try {
        field_ = parse_field_name(it->second.first);
      } catch (const std::invalid_argument&) {
        throw ParseError("field must be Q or Q(alpha), got '" + std::string(it->second.first) + "'",
                         it->second.second.line, it->second.second.column);
      }
    }
    const auto& [basis, basis_pos] = require("basis");
    std::size_t start = 0;
    while (start <= basis.size()) {
      std::size_t end = basis.find(',', start);
      if (end == std::string_view::npos) end = basis.size();
      std::size_t off = 0;
      const std::string_view name = trim(basis.substr(start, end - start), &off);
      const std::size_t col = basis_pos.column + start + off;
      if (!is_identifier(name)) throw ParseError("invalid basis name '" + std::string(name) + "'", basis_pos.line, col);
      if (name == "alpha") throw ParseError("'alpha' is reserved for the field parameter", basis_pos.line, col);
      for (const auto& existing : names_)
        if (existing == name) throw ParseError("basis name '" + std::string(name) + "' repeated", basis_pos.line, col);
      names_.emplace_back(name);
      start = end + 1;
    }
    const auto& [dim, dim_pos] = require("dim");
    std::size_t d = 0;
    try {
      std::size_t used = 0;
      d = std::stoul(std::string(dim), &used);
      if (used != dim.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("dim must be a positive integer", dim_pos.line, dim_pos.column);
    }
    if (d != names_.size())
      throw ParseError("dim = " + std::to_string(d) + " but the basis lists " + std::to_string(names_.size()) + " names",
                       dim_pos.line, dim_pos.column);
    kind_ = std::string(kind);
  }

  PairEntry parse_pair(std::string_view lhs, SourcePos pos) {
    if (!basis_ready()) throw ParseError("entry before the header is complete", pos.line, pos.column);
    const auto comma = lhs.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected 'name,name'", pos.line, pos.column);
    auto lookup = [&](std::string_view part, std::size_t base) {
      std::size_t off = 0;
      const std::string_view name = trim(part, &off);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
      throw ParseError("unknown basis name '" + std::string(name) + "'", pos.line, pos.column + base + off);
    };
    PairEntry e{};
    e.a = lookup(lhs.substr(0, comma), 0);
    e.b = lookup(lhs.substr(comma + 1), comma + 1);
    return e;
  }

  std::vector<Line> lines_;
  std::string kind_;
  Field field_ = Field::Q;
  std::vector<std::string> names_;
};

void emit_header(std::ostringstream& out, std::string_view kind, Field field, const std::vector<std::string>& names,
                 std::string_view comment) {
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string l; std::getline(lines, l);) out << "# " << l << "\n";
  }
  out << "kind = " << kind << "\n";
  out << "field = " << field_name(field) << "\n";
  out << "dim = " << names.size() << "\n";
  out << "basis = ";
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
  out << "\n";
}

void emit_omega(std::ostringstream& out, const OmegaForm& w, const std::vector<std::string>& names) {
  out << "\n[omega]\n";
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (!w(i, j).is_zero()) out << names[i] << "," << names[j] << " = " << w(i, j).to_string() << "\n";
}

}  // namespace

AnyAlgebra parse_algebra_text(std::string_view text) { return Parser(text).run(); }

LoadResult load_algebra(std::string_view text) {
  LoadResult res;
  AnyAlgebra parsed;
  try {
    parsed = parse_algebra_text(text);
  } catch (const ParseError& e) {
    res.error = LoadError{LoadError::Kind::Syntax, e.detail(), e.line(), e.column(), std::nullopt};
    return res;
  }
  AxiomReport report = std::visit(
      [](const auto& a) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, OmegaLieAlgebra>) return check_omega_lie(a);
        else return check_omega_lsa(a);
      },
      parsed);
  if (!report.passed()) {
    std::string what = std::holds_alternative<OmegaLieAlgebra>(parsed) ? "omega-Jacobi identity fails"
                                                                      : "omega-left-symmetric identity fails";
    if (!report.omega_skew) what = "omega is not skew-symmetric";
    else if (!report.antisymmetry_violations.empty()) what = "bracket is not antisymmetric";
    else if (auto f = report.first_failure()) {
      const auto& names = std::visit([](const auto& a) -> const std::vector<std::string>& { return a.basis_names; }, parsed);
      what += " on (" + names[f->triple[0]] + ", " + names[f->triple[1]] + ", " + names[f->triple[2]] + ")";
    }
    res.error = LoadError{LoadError::Kind::Axiom, what, 0, 0, std::move(report)};
    return res;
  }
  res.algebra = std::move(parsed);
  return res;
}

std::string emit_algebra(const OmegaLieAlgebra& L, std::string_view comment) {
  std::ostringstream out;
  emit_header(out, "lie", L.field, L.basis_names, comment);
  out << "\n[brackets]\n";
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector v = L.bracket.apply(i, j);
      if (!is_zero(v)) out << L.basis_names[i] << "," << L.basis_names[j] << " = "
                           << format_linear_combination(v, L.basis_names) << "\n";
    }
  emit_omega(out, L.omega, L.basis_names);
  return out.str();
}

std::string emit_algebra(const OmegaLsaAlgebra& A, std::string_view comment) {
  std::ostringstream out;
  emit_header(out, "lsa", A.field, A.basis_names, comment);
  out << "\n[products]\n";
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = A.product.apply(i, j);
      if (!is_zero(v)) out << A.basis_names[i] << "," << A.basis_names[j] << " = "
                           << format_linear_combination(v, A.basis_names) << "\n";
    }
  emit_omega(out, A.omega, A.basis_names);
  return out.str();
}

std::string emit_algebra(const AnyAlgebra& a, std::string_view comment) {
  return std::visit([&](const auto& x) { return emit_algebra(x, comment); }, a);
}

}  // namespace omega
