#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "omega/admissibility.hpp"
#include "omega/algebra.hpp"

namespace omega {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

std::string_view tool_version();

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

struct InputInfo {
  std::string path;
  std::string sha256;
};

/// Envelope written by every command. Key order is fixed so two runs with
/// the same inputs differ only in "timing".
struct ReportDocument {
  std::string command;
  std::optional<InputInfo> input;
  std::string verdict;
  Json result = Json::object();
  double elapsed_ms = 0;

  Json to_json() const;
};

Json matrix_json(const Matrix& m);
Json axiom_report_json(const AxiomReport& r, const std::vector<std::string>& names);
Json tensor_json(const StructureTensor& t, const std::vector<std::string>& names);
Json admissibility_json(const AdmissibilityReport& r, const std::vector<std::string>& names);

/// Serialized report without the timing block, for determinism checks.
std::string canonical_report(const Json& doc);

/// Human summary for --format text.
std::string render_text(const Json& doc);

}  // namespace omega
