#pragma once

#include <optional>
#include <span>
#include <vector>

#include "metrics.hpp"
#include "oracle.hpp"
#include "quickstream.hpp"

namespace submax {

// Inputs to the threshold booster. gamma is a lower bound on the optimum
// with gamma/alpha an upper bound; the caller is responsible for that
// contract (it cannot be checked without knowing the optimum, and a
// violation silently voids the guarantee). gamma = 0 short-circuits to
// the empty solution.
struct BoostParams {
  double gamma = 0.0;
  double alpha = 0.0;  // in (0, 1]
  double eps = 0.1;    // in (0, 1)
  int k = 1;
};

struct BoostOptions {
  // Skip an element without a query when its last measured gain is
  // already below the current threshold. Marginals only shrink as the
  // solution grows, so selections are identical; only the query count
  // drops. Costs one cached gain per ground element.
  bool lazy_gain_cache = false;
  // Tick the ledger pass counter per threshold round; off when the
  // ground is a retained buffer rather than the raw stream.
  bool count_ground_passes = true;
  // When set, receives (value before add, gain) for every addition.
  std::vector<std::pair<double, double>>* addition_log = nullptr;
};

struct BoostOutcome {
  ElementSet solution;
  double value = 0.0;
  int rounds = 0;
};

// Threshold-descent core: passes over `ground` with a threshold starting
// at gamma/(alpha*k), multiplied by (1-eps) before each pass, stopping
// below (1-eps)*gamma/(4k) or as soon as the solution reaches k.
BoostOutcome boost_ratio_core(CountedOracle& oracle, const BoostParams& params,
                              std::span<const int> ground, const BoostOptions& options = {});

// Standalone booster run over a re-traversable ground order.
RunResult run_boost_ratio(const ValueOracle& oracle, const BoostParams& params,
                          std::span<const int> ground, const BoostOptions& options = {});

// Single-pass feed (dispatched by k) followed by the booster over the
// full ground set, sharing one ledger; returns the better solution.
RunResult run_qs_br(const ValueOracle& oracle, int k, double eps, std::span<const int> stream,
                    RefreshPolicy refresh = RefreshPolicy::kStaleCache,
                    QueryObserver* observer = nullptr);

// Buffered single-pass run with a relaxed acceptance threshold
// delta (default c/10), then the booster over the retained buffer as a
// filtered ground set; still one pass over the raw stream. Falls back to
// the plain dispatch for k = 1.
RunResult run_qs_plus_plus(const ValueOracle& oracle, int k, int c, double eps,
                           std::optional<double> delta, std::span<const int> stream,
                           RefreshPolicy refresh = RefreshPolicy::kStaleCache,
                           QueryObserver* observer = nullptr);

// Ratio certificate of the relaxed-threshold variant, [c(1+d)(1+1/d)]^-1.
double relaxed_threshold_ratio(int c, double delta);

// Threshold rounds the booster may use: ceil(ln(4/alpha)/eps) + 1.
int boost_round_bound(double alpha, double eps);

}  // namespace submax
