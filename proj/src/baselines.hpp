#pragma once

#include <cstdint>

#include "metrics.hpp"
#include "oracle.hpp"

namespace submax {

// Standard greedy: k rounds of best-marginal selection, ties broken by
// the smallest element index, stopping early once the best available
// marginal is zero. The lazy mode reuses stale marginals as upper bounds
// through a priority queue and returns the identical solution with no
// more queries than the eager scan.
RunResult run_greedy(const ValueOracle& oracle, int k, bool lazy, QueryObserver* observer = nullptr);

// Stochastic greedy: each round samples ceil((n/k)*ln(1/eps)) unselected
// elements without replacement and adds the sample's best-marginal
// element. Deterministic in the seed.
RunResult run_stochastic_greedy(const ValueOracle& oracle, int k, double eps, std::uint64_t seed,
                                QueryObserver* observer = nullptr);

int stochastic_sample_size(int n, int k, double eps);

}  // namespace submax
