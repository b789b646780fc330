#include "omega/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <sstream>
#include <stdexcept>

#include "omega/expression.hpp"

#ifndef OMEGALSA_VERSION
#define OMEGALSA_VERSION "0.0.0"
#endif

namespace omega {

std::string_view tool_version() { return OMEGALSA_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

Json ReportDocument::to_json() const {
  Json doc;
  doc["tool"] = "omegalsa";
  doc["version"] = std::string(tool_version());
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = command;
  if (input) doc["input"] = {{"path", input->path}, {"sha256", input->sha256}};
  else doc["input"] = nullptr;
  doc["verdict"] = verdict;
  doc["result"] = result;
  doc["timing"] = {{"elapsed_ms", elapsed_ms}};
  return doc;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json axiom_report_json(const AxiomReport& r, const std::vector<std::string>& names) {
  Json j;
  j["passed"] = r.passed();
  j["omega_skew"] = r.omega_skew;
  Json anti = Json::array();
  for (const auto& [a, b] : r.antisymmetry_violations) anti.push_back({names[a], names[b]});
  j["antisymmetry_violations"] = anti;
  Json failures = Json::array();
  for (const auto& t : r.residuals) {
    if (t.is_zero()) continue;
    failures.push_back({{"triple", {names[t.triple[0]], names[t.triple[1]], names[t.triple[2]]}},
                        {"residual", format_linear_combination(t.residual, names)}});
  }
  j["triples_checked"] = r.residuals.size();
  j["failing_triples"] = failures;
  return j;
}

Json tensor_json(const StructureTensor& t, const std::vector<std::string>& names) {
  Json j = Json::object();
  for (std::size_t a = 0; a < t.dim(); ++a)
    for (std::size_t b = 0; b < t.dim(); ++b) {
      const Vector v = t.apply(a, b);
      if (!is_zero(v)) j[names[a] + "," + names[b]] = format_linear_combination(v, names);
    }
  return j;
}

Json admissibility_json(const AdmissibilityReport& r, const std::vector<std::string>& names) {
  Json j;
  j["verdict"] = std::string(verdict_name(r.verdict));
  j["termination"] = r.termination;
  j["settings"] = {{"mode", std::string(mode_name(r.settings.mode))}, {"degree_cap", r.settings.degree_cap}};
  Json stages = Json::array();
  for (const auto& s : r.certificate) {
    Json st;
    st["stage"] = s.name;
    st["dimension"] = s.dimension;
    if (s.pinned) {
      Json ops = Json::object();
      for (std::size_t m = 0; m < s.pinned->size(); ++m) ops["l_" + names[m]] = matrix_json((*s.pinned)[m]);
      st["pinned"] = std::move(ops);
    }
    stages.push_back(std::move(st));
  }
  j["certificate"] = std::move(stages);
  Json residuals = Json::array();
  for (const auto& p : r.residuals) residuals.push_back(p.to_string());
  j["residuals"] = std::move(residuals);
  if (r.groebner) {
    Json g;
    g["cap_exceeded"] = r.groebner->cap_exceeded;
    Json basis = Json::array();
    for (const auto& p : r.groebner->basis) basis.push_back(p.to_string());
    g["basis"] = std::move(basis);
    g["pairs_processed"] = r.groebner->stats.pairs_processed;
    g["pairs_skipped"] = r.groebner->stats.pairs_skipped;
    g["max_degree"] = r.groebner->stats.max_degree;
    j["groebner"] = std::move(g);
  } else {
    j["groebner"] = nullptr;
  }
  if (r.witness) j["witness"] = tensor_json(*r.witness, names);
  else j["witness"] = nullptr;
  Json den = Json::array();
  for (const auto& p : r.denominators) den.push_back(p.to_string());
  j["nonvanishing"] = std::move(den);
  return j;
}

std::string canonical_report(const Json& doc) {
  Json copy = doc;
  copy.erase("timing");
  return copy.dump(2);
}

namespace {

void render_admissibility(std::ostringstream& out, const Json& a, const std::string& indent) {
  out << indent << "verdict: " << a["verdict"].get<std::string>() << " (" << a["termination"].get<std::string>()
      << ")\n";
  out << indent << "stages:";
  for (const auto& s : a["certificate"]) out << " " << s["stage"].get<std::string>() << "=" << s["dimension"].get<int>();
  out << "\n";
  if (!a["residuals"].empty()) out << indent << "quadratic residuals: " << a["residuals"].size() << "\n";
  if (!a["witness"].is_null()) {
    out << indent << "witness:\n";
    for (const auto& [k, v] : a["witness"].items()) out << indent << "  " << k << " = " << v.get<std::string>() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  const std::string command = doc["command"].get<std::string>();
  out << "omegalsa " << command << ": " << doc["verdict"].get<std::string>() << "\n";
  if (!doc["input"].is_null()) out << "input: " << doc["input"]["path"].get<std::string>() << "\n";
  const Json& r = doc["result"];
  if (r.contains("error")) {
    out << "error: " << r["error"]["message"].get<std::string>() << "\n";
    return out.str();
  }
  if (command == "check") {
    out << "triples checked: " << r["axioms"]["triples_checked"].get<std::size_t>() << ", failing: "
        << r["axioms"]["failing_triples"].size() << "\n";
  } else if (command == "perfect") {
    out << "dim " << r["dim"].get<std::size_t>() << ", derived dim " << r["derived_dim"].get<std::size_t>() << "\n";
  } else if (command == "admissible") {
    render_admissibility(out, r["decision"], "");
    for (const auto& s : r["samples"]) {
      out << "sample alpha=" << s["alpha"].get<std::string>() << ": ";
      if (s["skipped"].get<bool>()) out << "skipped (denominator vanishes)\n";
      else out << s["verdict"].get<std::string>() << (s["coherent"].get<bool>() ? "" : "  MISMATCH") << "\n";
    }
  } else if (command == "verify-theorem1") {
    for (const auto& f : r["instances"]) {
      out << "  " << f["family"].get<std::string>();
      if (!f["params"].empty()) {
        out << " [";
        bool first = true;
        for (const auto& [k, v] : f["params"].items()) {
          out << (first ? "" : ", ") << k << "=" << v.get<std::string>();
          first = false;
        }
        out << "]";
      }
      out << " over " << f["field"].get<std::string>() << ": " << f["decision"]["verdict"].get<std::string>() << " ("
          << f["decision"]["termination"].get<std::string>() << ")";
      for (const auto& s : f["samples"])
        out << "  alpha=" << s["alpha"].get<std::string>() << ":"
            << (s["skipped"].get<bool>() ? std::string("skipped") : s["verdict"].get<std::string>());
      out << "\n";
    }
  } else if (command == "catalog list") {
    for (const auto& e : r["entries"])
      out << "  " << e["name"].get<std::string>() << " (" << e["kind"].get<std::string>() << ", dim "
          << e["dim"].get<std::size_t>() << (e["extensible"].get<bool>() ? "+" : "") << ")\n";
  } else if (r.contains("output")) {
    out << "wrote " << r["output"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace omega
