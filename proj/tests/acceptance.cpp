// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "omega/admissibility.hpp"
#include "omega/algebra_file.hpp"
#include "omega/catalog.hpp"
#include "omega/cli.hpp"
#include "omega/groebner.hpp"

using namespace omega;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::string> kPerfect = {"A_alpha",       "B",       "C_alpha",       "G_1_alpha", "H_1_alpha",
                                           "A_tilde_alpha", "B_tilde", "C_tilde_alpha", "P1",        "P2"};

Field field_for(const std::string& name) { return has_alpha(name) ? Field::QAlpha : Field::Q; }

// Bases produced by Groebner runs, collected for A6.
std::vector<std::vector<MultivariatePolynomial>> g_a2_bases;
std::vector<std::vector<MultivariatePolynomial>> g_a4_bases;
// Decisions collected for A5.
struct Decided {
  std::string label;
  OmegaLieAlgebra algebra;
  AdmissibilityReport report;
};
std::vector<Decided> g_decided;

// ---------------------------------------------------------------------------

Outcome a1_catalog_soundness() {
  Outcome o;
  const auto t0 = Clock::now();
  int checked = 0;
  for (const auto& name : kPerfect) {
    try {
      const OmegaLieAlgebra l = instantiate_lie(name, {}, field_for(name));
      o.require(check_omega_lie(l).passed(), name + " fails omega-Jacobi");
      o.require(is_perfect(l), name + " is not perfect");
      ++checked;
      if (!has_alpha(name)) continue;
      for (const Rational& a : alpha_samples()) {
        const OmegaLieAlgebra s = instantiate_lie(name, {{"alpha", a.get_str()}});
        o.require(check_omega_lie(s).passed(), name + " at alpha=" + a.get_str() + " fails omega-Jacobi");
        o.require(is_perfect(s), name + " at alpha=" + a.get_str() + " is not perfect");
        ++checked;
      }
    } catch (const std::exception& e) {
      o.require(false, name + ": " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime over 1 s");
  std::ostringstream d;
  d << checked << " instances, " << secs << " s";
  o.detail = d.str();
  return o;
}

Outcome a2_theorem1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto instances = theorem1_instances();
  DeciderSettings settings;
  settings.degree_cap = 6;
  int inadmissible = 0;
  int unknown = 0;
  std::vector<std::string> families;
  for (const auto& inst : instances) {
    const TheoremOutcome t = run_theorem_instance(inst, settings);
    const std::string verdict = t.fragment["decision"]["verdict"].get<std::string>();
    const std::string label = inst.family + (inst.params.empty() ? "" : "*");
    o.require(t.ok, label + ": " + verdict);
    if (verdict == "INADMISSIBLE") ++inadmissible;
    if (t.unknown) ++unknown;
    if (families.empty() || families.back() != inst.family) families.push_back(inst.family);
    try {
      const OmegaLieAlgebra l = instantiate_lie(inst.family, inst.params, inst.field);
      const AdmissibilityReport r = decide_admissible(l, settings);
      o.require(r.verdict == Verdict::Inadmissible, label + ": direct decision disagrees");
      if (r.groebner && !r.groebner->cap_exceeded) g_a2_bases.push_back(r.groebner->basis);
      g_decided.push_back({label, l, r});
    } catch (const std::exception& e) {
      o.require(false, label + ": " + e.what());
    }
  }
  o.require(families == kPerfect, "instance list does not cover the ten perfect families");
  o.require(instances.size() == kPerfect.size() + 2, "missing the non-default P1/P2 instances");
  o.require(unknown == 0, "UNKNOWN verdicts present");
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime over 60 s");
  std::ostringstream d;
  d << inadmissible << "/" << instances.size() << " INADMISSIBLE, " << unknown << " UNKNOWN, " << secs << " s";
  o.detail = d.str();
  return o;
}

Outcome a3_pinned_values() {
  Outcome o;
  struct Expect {
    std::string family;
    Field field;
    std::vector<Matrix> ops;
  };
  const Scalar one_plus_alpha = Scalar(1) + Scalar::alpha();
  auto zeros = [](std::size_t n, std::size_t count) { return std::vector<Matrix>(count, Matrix(n, n)); };
  std::vector<Expect> cases;
  {
    auto ops = zeros(3, 3);
    ops[2] = Matrix::scalar(3, -1);
    cases.push_back({"A_alpha", Field::QAlpha, ops});
  }
  {
    auto ops = zeros(3, 3);
    ops[0] = Matrix::scalar(3, one_plus_alpha);
    cases.push_back({"C_alpha", Field::QAlpha, ops});
  }
  {
    auto ops = zeros(4, 4);
    ops[0] = Matrix::scalar(4, 2);
    cases.push_back({"B_tilde", Field::Q, ops});
  }
  {
    auto ops = zeros(5, 5);
    ops[4] = Matrix::identity(5);
    cases.push_back({"P2", Field::Q, ops});
  }
  int matched = 0;
  for (const auto& c : cases) {
    const OmegaLieAlgebra l = instantiate_lie(c.family, {}, c.field);
    const PropagationResult p = propagate(l, DeciderMode::ModuleOnly);
    if (p.space.dimension() != 0 || !p.residuals.empty()) {
      o.require(false, c.family + ": module-only fixed point is not a single point");
      continue;
    }
    const auto ops = operators_at(l.dim(), p.space.origin());
    bool same = ops == c.ops;
    o.require(same, c.family + ": pinned operators differ");
    o.require(p.trace.back().pinned && *p.trace.back().pinned == c.ops, c.family + ": certificate lacks the pinned values");
    if (same) ++matched;
  }
  o.detail = std::to_string(matched) + "/" + std::to_string(cases.size()) + " fixed points exact";
  return o;
}

Outcome a4_positive_controls() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::size_t with_witness = 0;
  std::size_t total = 0;
  for (const char* fam : {"LSA3-1", "LSA3-2"}) {
    std::vector<OmegaLieAlgebra> commutators;
    std::vector<std::string> labels;
    for (int trial = 0; trial < 50; ++trial) {
      const CatalogParams p{{"a1", make_rational(num(rng), den(rng)).get_str()},
                            {"a2", make_rational(num(rng), den(rng)).get_str()},
                            {"a3", make_rational(num(rng), den(rng)).get_str()}};
      const std::string label = std::string(fam) + "(" + p.at("a1") + "," + p.at("a2") + "," + p.at("a3") + ")";
      try {
        const OmegaLsaAlgebra a = instantiate_lsa(fam, p);
        o.require(check_omega_lsa(a).passed(), label + " fails the LSA identity");
        o.require(check_module_identity(a).passed(), label + " fails the module identity");
        const OmegaLieAlgebra l = commutator_algebra(a);
        o.require(check_omega_lie(l).passed(), label + " commutator fails omega-Jacobi");
        o.require(!is_perfect(l), label + " commutator is perfect");
        commutators.push_back(l);
        labels.push_back(label);
      } catch (const std::exception& e) {
        o.require(false, label + ": " + e.what());
      }
    }
    const auto results = decide_batch(commutators, DeciderSettings{});
    for (std::size_t k = 0; k < results.size(); ++k) {
      ++total;
      const auto& r = results[k];
      if (!r.report) {
        o.require(false, labels[k] + ": " + r.error);
        continue;
      }
      o.require(r.report->verdict == Verdict::Admissible,
                labels[k] + ": " + std::string(verdict_name(r.report->verdict)) + " (" + r.report->termination + ")");
      const bool ok = r.report->witness && verify_witness(commutators[k], *r.report->witness);
      o.require(ok, labels[k] + ": no verified witness");
      if (ok) {
        ++with_witness;
        OmegaLsaAlgebra w{commutators[k].field, commutators[k].basis_names, *r.report->witness, commutators[k].omega};
        o.require(check_module_identity(w).passed(), labels[k] + ": witness fails the module identity");
      }
      if (r.report->groebner && !r.report->groebner->cap_exceeded) g_a4_bases.push_back(r.report->groebner->basis);
      if (k < 5) g_decided.push_back({labels[k], commutators[k], *r.report});
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 30.0, "runtime over 30 s");
  std::ostringstream d;
  d << with_witness << "/" << total << " ADMISSIBLE with verified witness, " << secs << " s";
  o.detail = d.str();
  return o;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_command(args, out, err);
  return out.str();
}

Outcome a5_self_consistency() {
  Outcome o;
  int monotone = 0, contained = 0, samples = 0, reports = 0;

  for (const auto& d : g_decided) {
    for (std::size_t s = 1; s < d.report.certificate.size(); ++s) {
      const int prev = d.report.certificate[s - 1].dimension;
      const int cur = d.report.certificate[s].dimension;
      o.require(cur <= prev, d.label + ": stage " + d.report.certificate[s].name + " grows the space");
    }
    ++monotone;

    const PropagationResult mod = propagate(d.algebra, DeciderMode::ModuleOnly);
    for (std::size_t s = 1; s < mod.trace.size(); ++s)
      o.require(mod.trace[s].dimension <= mod.trace[s - 1].dimension, d.label + ": module-only trace grows");
    const AffineSpace& full = d.report.space;
    if (!full.is_empty()) {
      o.require(mod.space.contains(full.origin()), d.label + ": full origin outside module-only space");
      for (const auto& dir : full.basis()) {
        Vector p = full.origin();
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += dir[i];
        o.require(mod.space.contains(p), d.label + ": full point outside module-only space");
      }
    }
    ++contained;

    if (d.algebra.field == Field::QAlpha) {
      for (const DeciderMode mode : {DeciderMode::Full, DeciderMode::ModuleOnly}) {
        const AdmissibilityReport gen = mode == DeciderMode::Full ? d.report : decide_admissible(d.algebra, {mode, 6});
        for (const Rational& a : alpha_samples()) {
          const SampleCheck sc = check_sample(d.algebra, gen, a);
          o.require(sc.coherent, d.label + ": verdict at alpha=" + a.get_str() + " differs (" +
                                     std::string(mode_name(mode)) + ")");
          ++samples;
        }
      }
    }
  }

  // Byte-identical reports on reruns, timing excluded.
  std::string a_alpha = emit_algebra(instantiate("A_alpha", {}, Field::QAlpha));
  std::string lsa_comm = emit_algebra(commutator_algebra(instantiate_lsa("LSA3-1")));
  const std::string dir = "acceptance_tmp";
  std::filesystem::create_directories(dir);
  const std::string fa = dir + "/A_alpha.alg";
  const std::string fl = dir + "/lsa_comm.alg";
  std::ofstream(fa) << a_alpha;
  std::ofstream(fl) << lsa_comm;
  const std::vector<std::vector<std::string>> commands = {
      {"verify-theorem1"},
      {"verify-theorem1", "--serial"},
      {"admissible", fa, "--sample", "alpha=2", "--sample", "alpha=-2", "--sample", "alpha=1/2"},
      {"admissible", fa, "--mode", "module-only"},
      {"admissible", fl},
      {"check", fa},
      {"perfect", fa},
      {"catalog", "list"},
  };
  std::vector<std::string> canon;
  for (const auto& cmd : commands) {
    int c1 = 0, c2 = 0;
    const std::string r1 = canonical_report(Json::parse(run_cli(cmd, c1)));
    const std::string r2 = canonical_report(Json::parse(run_cli(cmd, c2)));
    std::string joined;
    for (const auto& a : cmd) joined += a + " ";
    o.require(c1 == c2 && r1 == r2, "report differs on rerun: " + joined);
    canon.push_back(r1);
    ++reports;
  }
  // Parallel and serial verify-theorem1 differ only in the command line, not in content.
  o.require(Json::parse(canon[0])["result"] == Json::parse(canon[1])["result"], "serial and parallel theorem runs differ");
  std::filesystem::remove_all(dir);

  std::ostringstream d;
  d << monotone << " traces monotone, " << contained << " containment checks, " << samples << " alpha samples coherent, "
    << reports << " reports reproducible";
  o.detail = d.str();
  return o;
}

Outcome a6_groebner() {
  Outcome o;
  using Poly = MultivariatePolynomial;
  const Poly p0 = Poly::variable(2, 0), p1 = Poly::variable(2, 1);
  const Poly one = Poly::constant(2, Scalar(1));

  const std::vector<Poly> inconsistent{p0 - one, p0 - Poly::constant(2, Scalar(2))};
  const GroebnerResult r1 = buchberger(inconsistent);
  o.require(!r1.cap_exceeded && r1.basis == std::vector<Poly>{one}, "{p1-1, p1-2} does not give {1}");
  o.require(contains_one(r1) == true, "contains_one false on {1}");

  const std::vector<Poly> irreducible{p0 * p0 + one};
  const GroebnerResult r2 = buchberger(irreducible);
  o.require(!r2.cap_exceeded && r2.basis == irreducible, "{p1^2+1} is not its own basis");
  o.require(contains_one(r2) == false, "1 found in <p1^2+1>");

  const std::vector<Poly> swap{p0 * p0 - p1, p1 * p1 - p0};
  const GroebnerResult r3 = buchberger(swap);
  o.require(!r3.cap_exceeded && contains_one(r3) == false, "1 found in <p1^2-p2, p2^2-p1>");
  o.require(r3.basis == std::vector<Poly>{p1 * p1 - p0, p0 * p0 - p1}, "swap-squares basis differs from the oracle");
  // Four solutions over the closure: the lex basis is {p2^4 - p2, p1 - p2^2}.
  std::vector<Poly> lex;
  for (const auto& g : swap) lex.push_back(g.with_order(MonomialOrder::Lex));
  const GroebnerResult r4 = buchberger(lex, MonomialOrder::Lex);
  const Poly l0 = Poly::variable(2, 0, MonomialOrder::Lex), l1 = Poly::variable(2, 1, MonomialOrder::Lex);
  o.require(r4.basis == std::vector<Poly>{l1 * l1 * l1 * l1 - l1, l0 - l1 * l1}, "swap-squares lex basis is not triangular");

  // Every A2 basis; every tenth A4 basis (a full check costs seconds each).
  std::size_t checked = 0;
  for (const auto& b : g_a2_bases) {
    o.require(satisfies_buchberger_criterion(b), "an A2 basis fails the Buchberger criterion");
    ++checked;
  }
  for (std::size_t k = 0; k < g_a4_bases.size(); k += 10) {
    o.require(satisfies_buchberger_criterion(g_a4_bases[k]), "an A4 basis fails the Buchberger criterion");
    ++checked;
  }
  for (const auto& r : {r1, r2, r3, r4}) o.require(satisfies_buchberger_criterion(r.basis), "example basis fails the criterion");

  std::ostringstream d;
  d << "3 examples; criterion on all " << g_a2_bases.size() << " bases from A2 and " << checked - g_a2_bases.size()
    << " of " << g_a4_bases.size() << " from A4";
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"A1 catalog soundness", a1_catalog_soundness},
      {"A2 perfect families are inadmissible", a2_theorem1},
      {"A3 pinned operator values", a3_pinned_values},
      {"A4 positive controls", a4_positive_controls},
      {"A5 decider self-consistency", a5_self_consistency},
      {"A6 groebner suite", a6_groebner},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
