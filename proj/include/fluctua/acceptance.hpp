#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace fluctua {

// Knobs for the verification suite.  epsilon and paths_scale exist so a
// caller can deliberately weaken the runs (sabotage checks, quick passes);
// defaults reproduce the published thresholds.
struct AcceptanceOptions {
  std::uint64_t seed = 0x5eedba5e;
  double epsilon = 1e-9;
  double paths_scale = 1.0;
  unsigned workers = 1;
  std::vector<std::string> only;  // empty runs everything
};

struct CriterionResult {
  std::string name;
  bool pass = true;
  double seconds = 0.0;
  std::vector<std::string> details;  // "ok:"/"FAIL:" per sub-check, "note:" for non-gating diagnostics
};

const std::vector<std::string>& criterion_names();

// Runs the selected criteria in registry order, streaming one verdict line
// per criterion (plus detail lines) to `out`.  Throws std::invalid_argument
// for an unknown name in opt.only.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace fluctua
