#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "omega/catalog.hpp"
#include "omega/report.hpp"

namespace omega {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInputError = 2, kExitUnknown = 3 };

/// Entry point of the omegalsa tool; args excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TheoremInstance {
  std::string family;
  CatalogParams params;
  Field field = Field::Q;
};

/// The instances checked by verify-theorem1, in catalog order: every perfect
/// family (generic alpha where it applies), plus one non-default instance of
/// each extensible family.
std::vector<TheoremInstance> theorem1_instances();

/// Rational alpha samples used for generic-to-special coherence.
const std::vector<Rational>& alpha_samples();

/// Decides one instance and its alpha samples; the fragment embedded in the
/// verify-theorem1 report. `ok` is false on any verdict other than
/// INADMISSIBLE or on a sample mismatch.
struct TheoremOutcome {
  Json fragment;
  bool ok = false;
  bool unknown = false;
};
TheoremOutcome run_theorem_instance(const TheoremInstance& inst, const DeciderSettings& settings);

}  // namespace omega
