#include "boostratio.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

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

void validate(const BoostParams& p) {
  if (p.k < 1) throw UsageError("cardinality constraint must be at least 1");
  if (!(p.eps > 0.0) || !(p.eps < 1.0)) throw UsageError("eps must lie in (0,1)");
  if (p.gamma < 0.0) throw UsageError("gamma must be nonnegative");
  if (p.gamma > 0.0 && (!(p.alpha > 0.0) || p.alpha > 1.0)) {
    throw UsageError("alpha must lie in (0,1]; got " + std::to_string(p.alpha));
  }
}

}  // namespace

int boost_round_bound(double alpha, double eps) {
  return static_cast<int>(std::ceil(std::log(4.0 / alpha) / eps)) + 1;
}

double relaxed_threshold_ratio(int c, double delta) {
  return 1.0 / (static_cast<double>(c) * (1.0 + delta) * (1.0 + 1.0 / delta));
}

BoostOutcome boost_ratio_core(CountedOracle& oracle, const BoostParams& params,
                              std::span<const int> ground, const BoostOptions& options) {
  validate(params);
  BoostOutcome out;
  out.solution = ElementSet(oracle.n());
  if (params.gamma == 0.0) return out;

  oracle.reset_base();
  std::vector<double> gain_bound;
  if (options.lazy_gain_cache) {
    gain_bound.assign(ground.size(), std::numeric_limits<double>::infinity());
  }

  const std::size_t k = static_cast<std::size_t>(params.k);
  double tau = params.gamma / (params.alpha * params.k);
  const double tau_floor = (1.0 - params.eps) * params.gamma / (4.0 * params.k);

  while (tau >= tau_floor) {
    tau *= (1.0 - params.eps);
    ++out.rounds;
    if (options.count_ground_passes) oracle.ledger().passes += 1;

    for (std::size_t i = 0; i < ground.size(); ++i) {
      const int e = ground[i];
      if (out.solution.contains(e)) continue;
      if (options.lazy_gain_cache && gain_bound[i] < tau) continue;

      const int delta[1] = {e};
      const double with_e = oracle.peek(delta);
      const double gain = with_e - out.value;
      if (options.lazy_gain_cache) gain_bound[i] = gain;
      if (gain >= tau) {
        if (options.addition_log != nullptr) options.addition_log->emplace_back(out.value, gain);
        oracle.commit(delta);
        out.solution.append(e);
        out.value = with_e;
        oracle.ledger().note_stored(out.solution.size());
        if (out.solution.size() == k) return out;
      }
    }
  }
  return out;
}

RunResult run_boost_ratio(const ValueOracle& oracle, const BoostParams& params,
                          std::span<const int> ground, const BoostOptions& options) {
  WallTimer timer;
  RunResult out;
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);

  BoostOutcome core = boost_ratio_core(counted, params, ground, options);
  out.solution = std::move(core.solution);
  out.value = core.value;
  out.diag.boost_rounds = core.rounds;
  out.diag.boost_alpha = params.alpha;

  out.metrics.algorithm = "boostratio";
  out.metrics.n = oracle.ground_size();
  out.metrics.k = params.k;
  out.metrics.c = 1;
  out.metrics.eps = params.eps;
  out.metrics.objective_value = out.value;
  out.metrics.queries = ledger.queries;
  out.metrics.refresh_queries = ledger.refresh_queries;
  out.metrics.peak_stored = ledger.peak_stored;
  out.metrics.passes = ledger.passes;
  out.metrics.wall_ms = timer.elapsed_ms();
  return out;
}

RunResult run_qs_br(const ValueOracle& oracle, int k, double eps, std::span<const int> stream,
                    RefreshPolicy refresh, QueryObserver* observer) {
  if (k < 1) throw UsageError("cardinality constraint must be at least 1");
  if (!(eps > 0.0) || !(eps < 1.0)) throw UsageError("eps must lie in (0,1)");
  WallTimer timer;
  RunResult out;
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  counted.set_observer(observer);

  FeedOutcome feed = dispatch_core(counted, k, /*c=*/1, eps, stream, refresh);
  out.diag.monotone_violations = feed.monotone_violations;
  out.diag.feed_value = feed.value;
  out.diag.boost_alpha = feed.ratio;

  out.solution = feed.solution;
  out.value = feed.value;

  if (feed.value > 0.0 && feed.ratio > 0.0) {
    BoostParams bp;
    bp.gamma = feed.value;
    bp.alpha = feed.ratio;
    bp.eps = eps;
    bp.k = k;
    BoostOutcome boosted = boost_ratio_core(counted, bp, stream);
    out.diag.boost_rounds = boosted.rounds;
    if (boosted.value > out.value) {
      out.solution = std::move(boosted.solution);
      out.value = boosted.value;
    }
  }

  out.metrics.algorithm = "qs-br";
  out.metrics.n = oracle.ground_size();
  out.metrics.k = k;
  out.metrics.c = 1;
  out.metrics.eps = eps;
  out.metrics.objective_value = out.value;
  out.metrics.queries = ledger.queries;
  out.metrics.refresh_queries = ledger.refresh_queries;
  out.metrics.peak_stored = ledger.peak_stored;
  out.metrics.passes = ledger.passes;
  out.metrics.wall_ms = timer.elapsed_ms();
  return out;
}

RunResult run_qs_plus_plus(const ValueOracle& oracle, int k, int c, double eps,
                           std::optional<double> delta, std::span<const int> stream,
                           RefreshPolicy refresh, QueryObserver* observer) {
  if (k < 1) throw UsageError("cardinality constraint must be at least 1");
  if (c < 1) throw UsageError("block size must be at least 1");
  if (k == 1) {
    RunResult out = run_dispatch(oracle, k, c, eps, stream, refresh, observer);
    out.metrics.algorithm = "qs++";
    return out;
  }

  WallTimer timer;
  RunResult out;
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  counted.set_observer(observer);
  ledger.passes = 1;

  QuickStreamParams params;
  params.k = k;
  params.c = c;
  params.eps = eps;
  params.delta = delta.value_or(static_cast<double>(c) / 10.0);
  params.refresh = refresh;

  QuickStreamSession session(counted, params);
  {
    std::vector<int> block;
    block.reserve(static_cast<std::size_t>(c));
    for (int e : stream) {
      block.push_back(e);
      if (static_cast<int>(block.size()) == c) {
        session.process_block(block);
        block.clear();
      }
    }
    if (!block.empty()) session.process_block(block);
  }
  auto [feed_solution, feed_value] = session.finalize();
  out.diag.monotone_violations = session.monotone_violations();
  out.diag.feed_value = feed_value;

  out.solution = std::move(feed_solution);
  out.value = feed_value;

  if (feed_value > 0.0) {
    BoostParams bp;
    bp.gamma = feed_value;
    bp.alpha = relaxed_threshold_ratio(c, params.delta);
    bp.eps = eps;
    bp.k = k;
    out.diag.boost_alpha = bp.alpha;

    BoostOptions options;
    options.lazy_gain_cache = true;      // the buffer is re-traversed many times
    options.count_ground_passes = false; // buffer rounds are not stream passes
    BoostOutcome boosted = boost_ratio_core(counted, bp, session.buffer().view(), options);
    out.diag.boost_rounds = boosted.rounds;
    if (boosted.value > out.value) {
      out.solution = std::move(boosted.solution);
      out.value = boosted.value;
    }
  }

  out.metrics.algorithm = "qs++";
  out.metrics.n = oracle.ground_size();
  out.metrics.k = k;
  out.metrics.c = c;
  out.metrics.eps = eps;
  out.metrics.objective_value = out.value;
  out.metrics.queries = ledger.queries;
  out.metrics.refresh_queries = ledger.refresh_queries;
  out.metrics.peak_stored = ledger.peak_stored;
  out.metrics.passes = ledger.passes;
  out.metrics.wall_ms = timer.elapsed_ms();
  return out;
}

}  // namespace submax
