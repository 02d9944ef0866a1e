#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace extform {

// One verification check: a stable id, what it asserts, and the outcome.
struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string details;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by id
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the eight mathematical verification suites (classification fixtures,
// stable-form identities, Hodge duality, profile laws, the Cartan-form
// suite, exceptional isotropy dimensions, left-invariant counterexamples,
// and the duality/closedness family). Independent checks run in parallel
// when `parallel` is set; results are deterministic for a fixed seed.
VerificationReport run_verification(std::uint64_t seed, bool parallel = true);

std::string report_to_json(const VerificationReport& rep);
std::string report_summary(const VerificationReport& rep);

}  // namespace extform
