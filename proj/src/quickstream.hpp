#pragma once

#include <span>
#include <utility>

#include "metrics.hpp"
#include "oracle.hpp"

namespace submax {

// What the buffer's cached value means after a deletion. The stream
// budget of one query per block has no room to re-evaluate the trimmed
// buffer, so either the next block is charged one extra query (reported
// on the refresh counter) or the threshold keeps comparing against the
// stale cached value until the next accepted block replaces it. Both
// keep the cached value non-decreasing at the points the algorithm reads
// it; kStaleCache is the default because it is the only reading that
// stays within the strict query budget when deletions occur.
enum class RefreshPolicy { kStaleCache, kCountedRefresh };

struct QuickStreamParams {
  int k = 2;
  int c = 1;
  double eps = 0.1;
  double delta = 1.0;  // threshold multiplier; the acceptance test is gain >= delta*f(A)/k
  RefreshPolicy refresh = RefreshPolicy::kStaleCache;
};

// Derived buffer-control quantities. log2(k) is kept as an exact real;
// only the retained count is floored to a whole number of elements.
struct QuickStreamLimits {
  double ell = 0.0;        // ceil(log2(1/(4 eps))) + 3
  double deletion_cap = 0.0;
  std::size_t keep_count = 0;
};

QuickStreamLimits quick_stream_limits(int k, int c, double eps);

// Block-at-a-time core of the buffered single-pass algorithm: one query
// per block, accept when the gain clears delta*f(A)/k, trim the buffer
// to the most recent elements when it overflows.
class QuickStreamSession {
 public:
  QuickStreamSession(CountedOracle& oracle, const QuickStreamParams& params);

  void process_block(std::span<const int> block);

  // Partitions the newest min(c*k, |A|) buffered elements into at most c
  // recency-contiguous chunks of size at most k and returns the best
  // chunk; one query per chunk.
  std::pair<ElementSet, double> finalize();

  const ElementSet& buffer() const { return buffer_; }
  double buffer_value() const { return buffer_value_; }
  const QuickStreamLimits& limits() const { return limits_; }
  std::uint64_t monotone_violations() const { return monotone_violations_; }

 private:
  CountedOracle& oracle_;
  QuickStreamParams params_;
  QuickStreamLimits limits_;
  ElementSet buffer_;
  double buffer_value_ = 0.0;
  bool value_stale_ = false;
  std::uint64_t monotone_violations_ = 0;
};

// Single-pass run over a stream order (a permutation of 0..n-1).
RunResult run_quick_stream(const ValueOracle& oracle, const QuickStreamParams& params,
                           std::span<const int> stream, QueryObserver* observer = nullptr);

// k = 1 variant: keeps the best block seen, then returns its best
// singleton; ratio 1/c in ceil(n/c) + c queries.
RunResult run_quick_singleton(const ValueOracle& oracle, int c, std::span<const int> stream,
                              QueryObserver* observer = nullptr);

// Large-k variant: stricter acceptance (gain >= c*f(A)/k), whole-block
// deletion, and no finalization queries; requires k >= 8c/e.
RunResult run_quick_stream_large_k(const ValueOracle& oracle, int k, int c, std::span<const int> stream,
                                   RefreshPolicy refresh = RefreshPolicy::kStaleCache,
                                   QueryObserver* observer = nullptr);

bool large_k_applicable(int k, int c);

// Worst-case ratio of the large-k variant.
double large_k_ratio(int k, int c);

// Ratio certificate of whichever variant the dispatcher picks.
double dispatch_ratio(int k, int c, double eps);

// Picks the variant by k: the singleton algorithm at k = 1, the large-k
// algorithm once k >= 8c/e, the buffered algorithm in between.
RunResult run_dispatch(const ValueOracle& oracle, int k, int c, double eps, std::span<const int> stream,
                       RefreshPolicy refresh = RefreshPolicy::kStaleCache,
                       QueryObserver* observer = nullptr);

// Same dispatch against an existing counted oracle, for compositions
// that share one ledger. Returns solution, its value (the large-k
// variant learns it through one extra counted query), and the ratio
// certificate.
struct FeedOutcome {
  ElementSet solution;
  double value = 0.0;
  double ratio = 0.0;
  std::uint64_t monotone_violations = 0;
};
FeedOutcome dispatch_core(CountedOracle& oracle, int k, int c, double eps, std::span<const int> stream,
                          RefreshPolicy refresh);

}  // namespace submax
