#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "abid/root_system.hpp"

namespace abid {

struct VerifyConfig {
  uint64_t seed = 0;
  int sample_count = 10000;       // upper-ideal samples per type above the bound
  int exhaustive_upper_rank = 4;  // exhaustive upper-ideal testing up to this rank
};

// One named check bound to one simple type.  A failed check always carries
// at least one witness; a skipped one carries the precondition that failed.
struct CheckResult {
  enum class Verdict { pass, fail, skipped };

  std::string check_id;
  SimpleType type_id;
  Verdict verdict = Verdict::pass;
  std::string skip_reason;
  nlohmann::json witnesses = nlohmann::json::array();
  double elapsed_ms = 0;  // shown in the markdown summary; kept out of the JSON report

  bool failed() const { return verdict == Verdict::fail; }
};

const std::vector<std::string>& check_ids();

CheckResult run_check(const std::string& check_id, const RootSystem& rs, const VerifyConfig& cfg);

// All registered checks on all types, merged in registry order; checks run
// concurrently across types.
std::vector<CheckResult> run_all(const std::vector<SimpleType>& types, const VerifyConfig& cfg,
                                 unsigned threads = 0);

bool any_theorem_failure(const std::vector<CheckResult>& results);

// Deterministic: identical config yields byte-identical output.
nlohmann::json report_json(const std::vector<CheckResult>& results, const VerifyConfig& cfg,
                           const std::vector<SimpleType>& types);
std::string report_markdown(const std::vector<CheckResult>& results);

}  // namespace abid
