#include "omega/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "omega/admissibility.hpp"
#include "omega/algebra_file.hpp"

namespace omega {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

CatalogParams parse_params(const std::vector<std::string>& items) {
  CatalogParams p;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("expected key=value, got '" + item + "'");
    p[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return p;
}

Json params_json(const CatalogParams& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

struct Loaded {
  AnyAlgebra algebra;
  InputInfo info;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, bool text) : out_(out), err_(err), text_(text) {}

  int finish(ReportDocument doc, int code) {
    doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    const Json j = doc.to_json();
    out_ << (text_ ? render_text(j) : j.dump(2) + "\n");
    return code;
  }

  int input_error(ReportDocument doc, const std::string& message, std::size_t line = 0, std::size_t column = 0,
                  const Json& extra = nullptr) {
    std::string where = doc.input ? doc.input->path + ":" : "";
    if (line) where += std::to_string(line) + ":" + std::to_string(column) + ":";
    err_ << "omegalsa: " << where << (where.empty() ? "" : " ") << message << "\n";
    doc.verdict = "INPUT_ERROR";
    Json e = {{"message", message}};
    if (line) {
      e["line"] = line;
      e["column"] = column;
    }
    if (!extra.is_null()) e["axioms"] = extra;
    doc.result = {{"error", e}};
    return finish(std::move(doc), kExitInputError);
  }

  /// Reads and validates an algebra file; on failure writes the error report
  /// and returns nullopt with `code` set.
  std::optional<Loaded> load(ReportDocument& doc, const std::string& path, int& code) {
    std::string text;
    try {
      text = read_file(path);
    } catch (const InputError& e) {
      doc.input = InputInfo{path, ""};
      code = input_error(doc, e.what());
      return std::nullopt;
    }
    doc.input = InputInfo{path, sha256_hex(text)};
    LoadResult r = load_algebra(text);
    if (!r.ok()) {
      const auto& e = *r.error;
      Json axioms = nullptr;
      if (e.report) {
        const AnyAlgebra parsed = parse_algebra_text(text);
        const auto& names = std::visit([](const auto& a) { return a.basis_names; }, parsed);
        axioms = axiom_report_json(*e.report, names);
      }
      code = input_error(doc, e.message, e.line, e.column, axioms);
      return std::nullopt;
    }
    return Loaded{std::move(*r.algebra), *doc.input};
  }

  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool text_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const std::vector<std::string>& names_of(const AnyAlgebra& a) {
  return std::visit([](const auto& x) -> const std::vector<std::string>& { return x.basis_names; }, a);
}

int cmd_check(Session& s, const std::string& path) {
  ReportDocument doc;
  doc.command = "check";
  int code = 0;
  // A file that parses but fails its axioms is a verdict here, not an input error.
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    doc.input = InputInfo{path, ""};
    return s.input_error(doc, e.what());
  }
  doc.input = InputInfo{path, sha256_hex(text)};
  AnyAlgebra a;
  try {
    a = parse_algebra_text(text);
  } catch (const ParseError& e) {
    return s.input_error(doc, e.detail(), e.line(), e.column());
  }
  const AxiomReport r = std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, OmegaLieAlgebra>) return check_omega_lie(x);
        else return check_omega_lsa(x);
      },
      a);
  doc.verdict = r.passed() ? "PASS" : "FAIL";
  doc.result["kind"] = std::holds_alternative<OmegaLieAlgebra>(a) ? "lie" : "lsa";
  doc.result["axioms"] = axiom_report_json(r, names_of(a));
  if (const auto* lsa = std::get_if<OmegaLsaAlgebra>(&a); lsa && r.passed()) {
    const auto mi = check_module_identity(*lsa);
    doc.result["module_identity"] = mi.passed();
  }
  code = r.passed() ? kExitOk : kExitViolation;
  return s.finish(std::move(doc), code);
}

int cmd_perfect(Session& s, const std::string& path) {
  ReportDocument doc;
  doc.command = "perfect";
  int code = 0;
  auto loaded = s.load(doc, path, code);
  if (!loaded) return code;
  const auto* L = std::get_if<OmegaLieAlgebra>(&loaded->algebra);
  if (!L) return s.input_error(doc, "perfect expects a lie file");
  const DerivedSubalgebra d = derived_subalgebra(*L);
  doc.verdict = d.dimension == L->dim() ? "PERFECT" : "NOT_PERFECT";
  doc.result["dim"] = L->dim();
  doc.result["derived_dim"] = d.dimension;
  Json basis = Json::array();
  for (const auto& v : d.basis) basis.push_back(format_linear_combination(v, L->basis_names));
  doc.result["derived_basis"] = std::move(basis);
  return s.finish(std::move(doc), kExitOk);
}

int cmd_commutator(Session& s, std::ostream& out, const std::string& path, const std::string& output) {
  ReportDocument doc;
  doc.command = "commutator";
  int code = 0;
  auto loaded = s.load(doc, path, code);
  if (!loaded) return code;
  const auto* A = std::get_if<OmegaLsaAlgebra>(&loaded->algebra);
  if (!A) return s.input_error(doc, "commutator expects an lsa file");
  const std::string text = emit_algebra(commutator_algebra(*A), "commutator algebra of " + path);
  if (output.empty()) {
    out << text;
    return kExitOk;
  }
  try {
    write_file(output, text);
  } catch (const InputError& e) {
    return s.input_error(doc, e.what());
  }
  doc.verdict = "OK";
  doc.result["output"] = output;
  doc.result["sha256"] = sha256_hex(text);
  return s.finish(std::move(doc), kExitOk);
}

Json sample_json(const SampleCheck& sc) {
  Json j;
  j["alpha"] = sc.alpha.get_str();
  j["skipped"] = sc.skipped;
  j["verdict"] = sc.verdict ? Json(std::string(verdict_name(*sc.verdict))) : Json(nullptr);
  j["coherent"] = sc.coherent;
  return j;
}

int cmd_admissible(Session& s, const std::string& path, const std::string& mode, unsigned cap,
                   const std::vector<std::string>& samples) {
  ReportDocument doc;
  doc.command = "admissible";
  int code = 0;
  auto loaded = s.load(doc, path, code);
  if (!loaded) return code;
  const auto* L = std::get_if<OmegaLieAlgebra>(&loaded->algebra);
  if (!L) return s.input_error(doc, "admissible expects a lie file");
  DeciderSettings settings;
  std::vector<Rational> alphas;
  try {
    settings.mode = parse_mode_name(mode);
    settings.degree_cap = cap;
    for (const auto& item : samples) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || item.substr(0, eq) != "alpha")
        throw InputError("--sample expects alpha=value, got '" + item + "'");
      alphas.push_back(parse_scalar(item.substr(eq + 1), Field::Q).constant_value());
    }
  } catch (const std::exception& e) {
    return s.input_error(doc, e.what());
  }
  if (!alphas.empty() && L->field != Field::QAlpha) return s.input_error(doc, "--sample requires field Q(alpha)");

  const AdmissibilityReport rep = decide_admissible(*L, settings);
  doc.verdict = std::string(verdict_name(rep.verdict));
  doc.result["decision"] = admissibility_json(rep, L->basis_names);
  Json sj = Json::array();
  bool coherent = true;
  for (const auto& a : alphas) {
    const SampleCheck sc = check_sample(*L, rep, a);
    coherent = coherent && sc.coherent;
    sj.push_back(sample_json(sc));
  }
  doc.result["samples"] = std::move(sj);
  if (!coherent) {
    s.err() << "omegalsa: verdict at a sampled alpha differs from the generic verdict\n";
    return s.finish(std::move(doc), kExitViolation);
  }
  return s.finish(std::move(doc), rep.verdict == Verdict::Unknown ? kExitUnknown : kExitOk);
}

int cmd_catalog_list(Session& s) {
  ReportDocument doc;
  doc.command = "catalog list";
  doc.verdict = "OK";
  Json entries = Json::array();
  for (const auto& e : list_entries()) {
    Json j;
    j["name"] = e.name;
    j["kind"] = std::string(kind_name(e.kind));
    j["dim"] = e.dim;
    j["extensible"] = e.extensible;
    Json slots = Json::array();
    for (const auto& sl : e.slots)
      slots.push_back({{"name", sl.name}, {"default", sl.default_value}, {"condition", sl.condition}});
    j["parameters"] = std::move(slots);
    j["description"] = e.description;
    entries.push_back(std::move(j));
  }
  doc.result["entries"] = std::move(entries);
  return s.finish(std::move(doc), kExitOk);
}

int cmd_catalog_emit(Session& s, std::ostream& out, const std::string& family, const std::vector<std::string>& params,
                     const std::string& field, const std::string& output) {
  ReportDocument doc;
  doc.command = "catalog emit";
  std::string text;
  try {
    const Field f = parse_field_name(field);
    const CatalogParams p = parse_params(params);
    std::string comment = family;
    for (const auto& [k, v] : p) comment += " " + k + "=" + v;
    text = emit_algebra(instantiate(family, p, f), comment);
    doc.result["family"] = family;
    doc.result["params"] = params_json(p);
  } catch (const AxiomError& e) {
    return s.input_error(doc, std::string("instance fails its axioms: ") + e.what());
  } catch (const std::exception& e) {
    return s.input_error(doc, e.what());
  }
  if (output.empty()) {
    out << text;
    return kExitOk;
  }
  try {
    write_file(output, text);
  } catch (const InputError& e) {
    return s.input_error(doc, e.what());
  }
  doc.verdict = "OK";
  doc.result["output"] = output;
  doc.result["sha256"] = sha256_hex(text);
  return s.finish(std::move(doc), kExitOk);
}

int cmd_verify_theorem1(Session& s, unsigned cap, bool serial) {
  ReportDocument doc;
  doc.command = "verify-theorem1";
  const auto instances = theorem1_instances();
  DeciderSettings settings;
  settings.degree_cap = cap;
  std::vector<TheoremOutcome> outcomes(instances.size());
  const auto count = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel for schedule(dynamic) if (!serial)
  for (std::ptrdiff_t k = 0; k < count; ++k) outcomes[k] = run_theorem_instance(instances[k], settings);

  Json list = Json::array();
  bool ok = true;
  bool unknown = false;
  for (auto& o : outcomes) {
    ok = ok && o.ok;
    unknown = unknown || o.unknown;
    list.push_back(std::move(o.fragment));
  }
  doc.verdict = ok ? "PASS" : "FAIL";
  doc.result["degree_cap"] = cap;
  doc.result["instances"] = std::move(list);
  int code = kExitOk;
  if (!ok) code = unknown ? kExitUnknown : kExitViolation;
  if (!ok) s.err() << "omegalsa: not every perfect catalog instance was decided INADMISSIBLE\n";
  return s.finish(std::move(doc), code);
}

}  // namespace

const std::vector<Rational>& alpha_samples() {
  static const std::vector<Rational> samples = {Rational(2), Rational(-2), Rational(1, 2)};
  return samples;
}

std::vector<TheoremInstance> theorem1_instances() {
  std::vector<TheoremInstance> out;
  for (const auto& e : list_entries(AlgebraKind::Lie)) {
    out.push_back(TheoremInstance{e.name, {}, has_alpha(e.name) ? Field::QAlpha : Field::Q});
    if (e.name == "P1")
      out.push_back(TheoremInstance{
          "P1", {{"dimH", "3"}, {"a", "2"}, {"h1", "h0 + f2 - f3"}, {"h2", "f1 + 2*f3"}}, Field::Q});
    if (e.name == "P2")
      out.push_back(TheoremInstance{"P2",
                                    {{"dimH", "3"},
                                     {"b1", "2"},
                                     {"b2", "1"},
                                     {"c1", "-3"},
                                     {"h1", "f1 + f3"},
                                     {"h2", "f2"},
                                     {"h3", "f3"}},
                                    Field::Q});
  }
  return out;
}

TheoremOutcome run_theorem_instance(const TheoremInstance& inst, const DeciderSettings& settings) {
  TheoremOutcome o;
  Json& j = o.fragment;
  j["family"] = inst.family;
  j["params"] = params_json(inst.params);
  j["field"] = std::string(field_name(inst.field));
  try {
    const OmegaLieAlgebra L = instantiate_lie(inst.family, inst.params, inst.field);
    j["perfect"] = is_perfect(L);
    const AdmissibilityReport rep = decide_admissible(L, settings);
    j["decision"] = admissibility_json(rep, L.basis_names);
    o.ok = rep.verdict == Verdict::Inadmissible;
    o.unknown = rep.verdict == Verdict::Unknown;
    Json samples = Json::array();
    if (inst.field == Field::QAlpha)
      for (const auto& a : alpha_samples()) {
        const SampleCheck sc = check_sample(L, rep, a);
        o.ok = o.ok && sc.coherent;
        samples.push_back(sample_json(sc));
      }
    j["samples"] = std::move(samples);
  } catch (const std::exception& e) {
    j["error"] = e.what();
    j["decision"] = {{"verdict", "ERROR"}, {"termination", e.what()}};
    j["samples"] = Json::array();
    o.ok = false;
  }
  return o;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and admissibility decisions for omega-Lie and omega-left-symmetric algebras", "omegalsa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));
  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string path;
  std::string output;
  std::string mode = "full";
  unsigned cap = 6;
  std::vector<std::string> samples;
  std::string family;
  std::vector<std::string> params;
  std::string field = "Q";
  bool serial = false;

  auto* check = app.add_subcommand("check", "Axiom report for an algebra file");
  check->add_option("file", path)->required();
  auto* perfect = app.add_subcommand("perfect", "Is [L,L] = L?");
  perfect->add_option("file", path)->required();
  auto* commutator = app.add_subcommand("commutator", "Emit the commutator omega-Lie algebra of an lsa file");
  commutator->add_option("file", path)->required();
  commutator->add_option("-o,--output", output, "Write the algebra file here instead of standard output");
  auto* admissible = app.add_subcommand("admissible", "Decide whether a compatible omega-LSA product exists");
  admissible->add_option("file", path)->required();
  admissible->add_option("--mode", mode, "full or module-only")->check(CLI::IsMember({"full", "module-only"}));
  admissible->add_option("--degree-cap", cap, "Buchberger degree cap")->check(CLI::PositiveNumber);
  admissible->add_option("--sample", samples, "Cross-check at alpha=value (repeatable)");
  auto* catalog = app.add_subcommand("catalog", "Built-in families");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List the families");
  auto* emit = catalog->add_subcommand("emit", "Write one family instance as an algebra file");
  emit->add_option("--family", family)->required();
  emit->add_option("--param", params, "key=value (repeatable)");
  emit->add_option("--field", field, "Q or Q(alpha)")->check(CLI::IsMember({"Q", "Q(alpha)"}));
  emit->add_option("-o,--output", output, "Write the algebra file here instead of standard output");
  auto* theorem = app.add_subcommand("verify-theorem1", "Decide every perfect catalog family; all must be INADMISSIBLE");
  theorem->add_option("--degree-cap", cap, "Buchberger degree cap")->check(CLI::PositiveNumber);
  theorem->add_flag("--serial", serial, "Decide the families one at a time");
  for (auto* sub : {check, perfect, commutator, admissible, list, emit, theorem})
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "omegalsa: " << e.what() << "\n";
    return kExitInputError;
  }

  Session s(out, err, format == "text");
  try {
    if (*check) return cmd_check(s, path);
    if (*perfect) return cmd_perfect(s, path);
    if (*commutator) return cmd_commutator(s, out, path, output);
    if (*admissible) return cmd_admissible(s, path, mode, cap, samples);
    if (*list) return cmd_catalog_list(s);
    if (*emit) return cmd_catalog_emit(s, out, family, params, field, output);
    if (*theorem) return cmd_verify_theorem1(s, cap, serial);
  } catch (const std::exception& e) {
    err << "omegalsa: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace omega
