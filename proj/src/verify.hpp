#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace submax {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

// Individual check drivers. Defaults match the scales the acceptance
// suite runs at; callers may scale them down for quick smoke runs.
CheckResult check_objective_properties(int samples = 1000, std::uint64_t seed = 11);
CheckResult check_modular_agreement(std::uint64_t seed = 12);
CheckResult check_elementary_growth_claim();
CheckResult check_small_instance_ratios(int instances = 200, int permutations = 5,
                                        std::uint64_t seed = 13);
CheckResult check_boost_guarantee(int instances = 200, std::uint64_t seed = 14);
CheckResult check_baseline_sanity(int identical_instances = 50, std::uint64_t seed = 15);
CheckResult check_adversarial_rates(int n = 10000, int c = 2, int k = 5, int trials = 1000,
                                    std::uint64_t seed = 16);
CheckResult check_degree_identity(std::uint64_t seed = 17);
CheckResult check_run_determinism(std::uint64_t seed = 18);

// Runs every check and streams one line per check through `log`
// (stdout when empty). Returns the full report.
VerifyReport verify_suite(const std::function<void(const std::string&)>& log = {});

}  // namespace submax
