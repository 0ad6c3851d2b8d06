#include "baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace submax {

namespace {

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct GreedyOutcome {
  ElementSet solution;
  double value = 0.0;
  int rounds = 0;
};

GreedyOutcome greedy_eager(CountedOracle& oracle, int k) {
  GreedyOutcome out;
  out.solution = ElementSet(oracle.n());
  const int n = oracle.n();
  for (int round = 0; round < k; ++round) {
    ++out.rounds;
    int best = -1;
    double best_gain = 0.0;  // a best of zero means stop
    double best_with = 0.0;
    for (int e = 0; e < n; ++e) {
      if (out.solution.contains(e)) continue;
      const int delta[1] = {e};
      const double with_e = oracle.peek(delta);
      const double gain = with_e - out.value;
      if (gain > best_gain) {
        best_gain = gain;
        best_with = with_e;
        best = e;
      }
    }
    if (best < 0) break;
    const int delta[1] = {best};
    oracle.commit(delta);
    out.solution.append(best);
    out.value = best_with;
    oracle.ledger().note_stored(out.solution.size());
  }
  return out;
}

struct QueueEntry {
  double gain;
  double with;  // oracle value of solution + element at measurement time
  int element;
  int stamp;  // solution size the gain was measured against
};

struct QueueOrder {
  // Max-heap on gain; equal gains surface the smaller index first, which
  // is what makes the lazy selection coincide with the eager tie rule.
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.element > b.element;
  }
};

GreedyOutcome greedy_lazy(CountedOracle& oracle, int k) {
  GreedyOutcome out;
  out.solution = ElementSet(oracle.n());
  const int n = oracle.n();

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue;
  for (int e = 0; e < n; ++e) {
    const int delta[1] = {e};
    const double with_e = oracle.peek(delta);
    queue.push(QueueEntry{with_e, with_e, e, 0});
  }
  oracle.ledger().note_stored(static_cast<std::size_t>(n));

  while (static_cast<int>(out.solution.size()) < k && !queue.empty()) {
    QueueEntry top = queue.top();
    queue.pop();
    if (top.stamp == static_cast<int>(out.solution.size())) {
      // Fresh relative to the current solution: marginals only shrink,
      // so nothing below it in the queue can beat it.
      if (top.gain <= 0.0) break;
      ++out.rounds;
      const int delta[1] = {top.element};
      oracle.commit(delta);
      out.solution.append(top.element);
      out.value = top.with;
      continue;
    }
    const int delta[1] = {top.element};
    top.with = oracle.peek(delta);
    top.gain = top.with - out.value;
    top.stamp = static_cast<int>(out.solution.size());
    queue.push(top);
  }
  return out;
}

void fill_metrics(RunResult& out, const char* name, const QueryLedger& ledger, int n, int k, double eps,
                  double wall_ms) {
  out.metrics.algorithm = name;
  out.metrics.n = n;
  out.metrics.k = k;
  out.metrics.c = 1;
  out.metrics.eps = eps;
  out.metrics.objective_value = out.value;
  out.metrics.queries = ledger.queries;
  out.metrics.refresh_queries = ledger.refresh_queries;
  out.metrics.peak_stored = ledger.peak_stored;
  out.metrics.passes = ledger.passes;
  out.metrics.wall_ms = wall_ms;
}

}  // namespace

RunResult run_greedy(const ValueOracle& oracle, int k, bool lazy, QueryObserver* observer) {
  if (k < 0 || k > oracle.ground_size()) {
    throw UsageError("greedy requires 0 <= k <= n; got k = " + std::to_string(k));
  }
  WallTimer timer;
  RunResult out;
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  counted.set_observer(observer);

  GreedyOutcome core = lazy ? greedy_lazy(counted, k) : greedy_eager(counted, k);
  ledger.passes = core.rounds;
  out.solution = std::move(core.solution);
  out.value = core.value;
  fill_metrics(out, lazy ? "greedy-lazy" : "greedy", ledger, oracle.ground_size(), k, 0.0,
               timer.elapsed_ms());
  return out;
}

int stochastic_sample_size(int n, int k, double eps) {
  const double s = std::ceil(static_cast<double>(n) / k * std::log(1.0 / eps));
  return std::max(1, static_cast<int>(s));
}

RunResult run_stochastic_greedy(const ValueOracle& oracle, int k, double eps, std::uint64_t seed,
                                QueryObserver* observer) {
  const int n = oracle.ground_size();
  if (k < 0 || k > n) throw UsageError("stochastic greedy requires 0 <= k <= n");
  if (!(eps > 0.0) || !(eps < 1.0)) throw UsageError("eps must lie in (0,1)");

  WallTimer timer;
  RunResult out;
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  counted.set_observer(observer);
  out.solution = ElementSet(n);

  SplitMix rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) pool[static_cast<std::size_t>(e)] = e;
  const int sample = stochastic_sample_size(n, k, eps);

  for (int round = 0; round < k && !pool.empty(); ++round) {
    ledger.passes += 1;
    const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(sample), pool.size());
    // Partial Fisher-Yates: the leading m entries become the sample.
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    ledger.note_stored(out.solution.size() + m);

    int best = -1;
    std::size_t best_pos = 0;
    double best_gain = 0.0;
    double best_with = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const int e = pool[i];
      const int delta[1] = {e};
      const double with_e = counted.peek(delta);
      const double gain = with_e - out.value;
      if (best < 0 || gain > best_gain || (gain == best_gain && e < best)) {
        best = e;
        best_pos = i;
        best_gain = gain;
        best_with = with_e;
      }
    }
    if (best < 0) break;
    const int delta[1] = {best};
    counted.commit(delta);
    out.solution.append(best);
    out.value = best_with;
    pool[best_pos] = pool.back();
    pool.pop_back();
  }

  fill_metrics(out, "ltl", ledger, n, k, eps, timer.elapsed_ms());
  return out;
}

}  // namespace submax
