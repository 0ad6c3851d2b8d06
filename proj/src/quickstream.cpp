#include "quickstream.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <numbers>
#include <string>
#include <vector>

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

void fill_metrics(RunResult& out, const char* name, const QueryLedger& ledger, int n, int k, int c,
                  double eps, double wall_ms) {
  out.metrics.algorithm = name;
  out.metrics.n = n;
  out.metrics.k = k;
  out.metrics.c = c;
  out.metrics.eps = eps;
  out.metrics.objective_value = out.value;
  out.metrics.queries = ledger.queries;
  out.metrics.refresh_queries = ledger.refresh_queries;
  out.metrics.peak_stored = ledger.peak_stored;
  out.metrics.passes = ledger.passes;
  out.metrics.wall_ms = wall_ms;
}

// Feeds a stream through a per-block consumer in blocks of c, including
// the final partial block.
template <typename Consumer>
void drive_blocks(std::span<const int> stream, int c, Consumer&& consume) {
  std::vector<int> block;
  block.reserve(static_cast<std::size_t>(c));
  for (int e : stream) {
    block.push_back(e);
    if (static_cast<int>(block.size()) == c) {
      consume(std::span<const int>(block));
      block.clear();
    }
  }
  if (!block.empty()) consume(std::span<const int>(block));
}

struct CoreOutcome {
  ElementSet solution;
  double value = 0.0;
  std::uint64_t monotone_violations = 0;
};

CoreOutcome singleton_core(CountedOracle& oracle, int c, std::span<const int> stream) {
  if (c < 1) throw UsageError("block size must be at least 1");
  ElementSet kept(oracle.n());
  double kept_value = 0.0;

  drive_blocks(stream, c, [&](std::span<const int> block) {
    oracle.ledger().note_stored(kept.size() + block.size());
    const double value = oracle.eval(block);
    if (value > kept_value) {  // strict: ties keep the earlier block
      kept = ElementSet(oracle.n());
      kept.append(block);
      kept_value = value;
    }
  });

  CoreOutcome out;
  out.solution = ElementSet(oracle.n());
  bool have = false;
  for (int e : kept.view()) {
    const int single[1] = {e};
    const double value = oracle.eval(single);
    if (!have || value > out.value) {
      have = true;
      out.value = value;
      out.solution = ElementSet(oracle.n());
      out.solution.append(e);
    }
  }
  return out;
}

CoreOutcome quick_stream_core(CountedOracle& oracle, const QuickStreamParams& params,
                              std::span<const int> stream) {
  QuickStreamSession session(oracle, params);
  drive_blocks(stream, params.c, [&](std::span<const int> block) { session.process_block(block); });
  auto [solution, value] = session.finalize();
  CoreOutcome out;
  out.solution = std::move(solution);
  out.value = value;
  out.monotone_violations = session.monotone_violations();
  return out;
}

// Large-k core: acceptance threshold c*f(A)/k, deletion at whole-block
// granularity, no end-of-stream queries. The returned value is unknown
// to the algorithm itself.
CoreOutcome large_k_core(CountedOracle& oracle, int k, int c, std::span<const int> stream,
                         RefreshPolicy refresh) {
  const double log2k = std::log2(static_cast<double>(k));
  const double block_cap = 6.0 * (k + 1) * log2k;
  const std::size_t keep_blocks = static_cast<std::size_t>(3.0 * (k + 1) * log2k);

  ElementSet buffer(oracle.n());
  std::deque<std::size_t> block_sizes;
  double buffer_value = 0.0;
  bool value_stale = false;
  std::uint64_t violations = 0;

  drive_blocks(stream, c, [&](std::span<const int> block) {
    if (value_stale && refresh == RefreshPolicy::kCountedRefresh) {
      buffer_value = oracle.refresh_value();
      value_stale = false;
    }
    const double step_start_value = buffer_value;
    const double union_value = oracle.peek(block);
    if (union_value - buffer_value >= c * buffer_value / static_cast<double>(k)) {
      oracle.commit(block);
      buffer.append(block);
      block_sizes.push_back(block.size());
      buffer_value = union_value;
      if (static_cast<double>(block_sizes.size()) > block_cap) {
        while (block_sizes.size() > keep_blocks) block_sizes.pop_front();
        std::size_t keep_elems = 0;
        for (std::size_t s : block_sizes) keep_elems += s;
        buffer.keep_last(keep_elems);
        oracle.rebase(buffer.view());
        value_stale = true;
      }
    }
    if (buffer_value < step_start_value) ++violations;
    oracle.ledger().note_stored(buffer.size());
  });

  CoreOutcome out;
  out.monotone_violations = violations;
  out.solution = ElementSet(oracle.n());
  out.solution.append(buffer.last(static_cast<std::size_t>(k)));
  return out;
}

}  // namespace

QuickStreamLimits quick_stream_limits(int k, int c, double eps) {
  QuickStreamLimits lim;
  lim.ell = std::ceil(std::log2(1.0 / (4.0 * eps))) + 3.0;
  const double log2k = std::log2(static_cast<double>(k));
  lim.deletion_cap = 2.0 * c * lim.ell * (k + 1) * log2k;
  lim.keep_count = static_cast<std::size_t>(c * lim.ell * (k + 1) * log2k);
  return lim;
}

QuickStreamSession::QuickStreamSession(CountedOracle& oracle, const QuickStreamParams& params)
    : oracle_(oracle),
      params_(params),
      limits_(quick_stream_limits(params.k, params.c, params.eps)),
      buffer_(oracle.n()) {
  if (params.k < 2) throw UsageError("buffered stream requires k >= 2; k = 1 has its own variant");
  if (params.c < 1) throw UsageError("block size must be at least 1");
  if (!(params.eps > 0.0)) throw UsageError("eps must be positive");
  if (!(params.delta > 0.0)) throw UsageError("delta must be positive");
}

void QuickStreamSession::process_block(std::span<const int> block) {
  if (block.empty()) return;
  if (value_stale_ && params_.refresh == RefreshPolicy::kCountedRefresh) {
    buffer_value_ = oracle_.refresh_value();
    value_stale_ = false;
  }
  const double step_start_value = buffer_value_;

  const double union_value = oracle_.peek(block);
  // At f(A) = 0 this accepts zero-gain blocks; the comparison is >= as a
  // matter of contract, not an accident.
  if (union_value - buffer_value_ >= params_.delta * buffer_value_ / params_.k) {
    oracle_.commit(block);
    buffer_.append(block);
    buffer_value_ = union_value;
    if (static_cast<double>(buffer_.size()) > limits_.deletion_cap) {
      buffer_.keep_last(limits_.keep_count);
      oracle_.rebase(buffer_.view());
      value_stale_ = true;
    }
  }

  if (buffer_value_ < step_start_value) ++monotone_violations_;
  oracle_.ledger().note_stored(buffer_.size());
}

std::pair<ElementSet, double> QuickStreamSession::finalize() {
  const std::size_t take =
      std::min(buffer_.size(), static_cast<std::size_t>(params_.c) * static_cast<std::size_t>(params_.k));
  ElementSet best(oracle_.n());
  if (take == 0) return {std::move(best), 0.0};

  std::span<const int> tail = buffer_.last(take);
  const std::size_t k = static_cast<std::size_t>(params_.k);
  // The leading chunk absorbs the remainder so the newest k elements
  // stay together.
  std::size_t first_chunk = take % k;
  if (first_chunk == 0) first_chunk = std::min(k, take);

  double best_value = 0.0;
  bool have_best = false;
  std::size_t offset = 0;
  while (offset < take) {
    const std::size_t len = (offset == 0) ? first_chunk : k;
    std::span<const int> chunk = tail.subspan(offset, len);
    const double value = oracle_.eval(chunk);
    if (!have_best || value > best_value) {
      have_best = true;
      best_value = value;
      best = ElementSet(oracle_.n());
      best.append(chunk);
    }
    offset += len;
  }
  return {std::move(best), best_value};
}

RunResult run_quick_stream(const ValueOracle& oracle, const QuickStreamParams& params,
                           std::span<const int> stream, QueryObserver* observer) {
  WallTimer timer;
  RunResult out;
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  counted.set_observer(observer);
  ledger.passes = 1;

  CoreOutcome core = quick_stream_core(counted, params, stream);
  out.solution = std::move(core.solution);
  out.value = core.value;
  out.diag.monotone_violations = core.monotone_violations;
  fill_metrics(out, "qs", ledger, oracle.ground_size(), params.k, params.c, params.eps,
               timer.elapsed_ms());
  return out;
}

RunResult run_quick_singleton(const ValueOracle& oracle, int c, std::span<const int> stream,
                              QueryObserver* observer) {
  WallTimer timer;
  RunResult out;
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  counted.set_observer(observer);
  ledger.passes = 1;

  CoreOutcome core = singleton_core(counted, c, stream);
  out.solution = std::move(core.solution);
  out.value = core.value;
  fill_metrics(out, "qsingleton", ledger, oracle.ground_size(), 1, c, 0.0, timer.elapsed_ms());
  return out;
}

bool large_k_applicable(int k, int c) {
  return static_cast<double>(k) >= 8.0 * static_cast<double>(c) / std::numbers::e;
}

double large_k_ratio(int k, int c) {
  const double kd = static_cast<double>(k);
  const double cd = static_cast<double>(c);
  const double e = std::numbers::e;
  const double front = 1.0 / (1.0 + cd + 1.0 / (kd * kd * kd - 1.0));
  const double back = 1.0 - 1.0 / e - (2.0 * cd) / (kd * e) - (cd * cd) / (kd * kd * e);
  return front * back;
}

RunResult run_quick_stream_large_k(const ValueOracle& oracle, int k, int c, std::span<const int> stream,
                                   RefreshPolicy refresh, QueryObserver* observer) {
  if (c < 1) throw UsageError("block size must be at least 1");
  if (!large_k_applicable(k, c)) {
    throw UsageError("large-k variant requires k >= 8c/e; got k = " + std::to_string(k) +
                     ", c = " + std::to_string(c));
  }
  WallTimer timer;
  RunResult out;
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  counted.set_observer(observer);
  ledger.passes = 1;

  CoreOutcome core = large_k_core(counted, k, c, stream, refresh);
  out.solution = std::move(core.solution);
  // Reporting-only evaluation of the returned set; not charged.
  out.value = oracle.evaluate(out.solution.view());
  out.diag.monotone_violations = core.monotone_violations;
  fill_metrics(out, "qslargek", ledger, oracle.ground_size(), k, c, 0.0, timer.elapsed_ms());
  return out;
}

double dispatch_ratio(int k, int c, double eps) {
  if (k == 1) return 1.0 / static_cast<double>(c);
  if (large_k_applicable(k, c)) return large_k_ratio(k, c);
  return 1.0 / (4.0 * static_cast<double>(c)) - eps;
}

RunResult run_dispatch(const ValueOracle& oracle, int k, int c, double eps, std::span<const int> stream,
                       RefreshPolicy refresh, QueryObserver* observer) {
  if (k < 1) throw UsageError("cardinality constraint must be at least 1");
  if (k == 1) return run_quick_singleton(oracle, c, stream, observer);
  if (large_k_applicable(k, c)) return run_quick_stream_large_k(oracle, k, c, stream, refresh, observer);
  QuickStreamParams params;
  params.k = k;
  params.c = c;
  params.eps = eps;
  params.refresh = refresh;
  return run_quick_stream(oracle, params, stream, observer);
}

FeedOutcome dispatch_core(CountedOracle& oracle, int k, int c, double eps, std::span<const int> stream,
                          RefreshPolicy refresh) {
  if (k < 1) throw UsageError("cardinality constraint must be at least 1");
  FeedOutcome out;
  out.ratio = dispatch_ratio(k, c, eps);
  oracle.ledger().passes += 1;

  CoreOutcome core;
  if (k == 1) {
    core = singleton_core(oracle, c, stream);
  } else if (large_k_applicable(k, c)) {
    core = large_k_core(oracle, k, c, stream, refresh);
    // The composition needs the feed value as its lower bound; the
    // large-k variant does not know it, so learn it with one counted
    // query.
    core.value = core.solution.empty() ? 0.0 : oracle.eval(core.solution.view());
  } else {
    QuickStreamParams params;
    params.k = k;
    params.c = c;
    params.eps = eps;
    params.refresh = refresh;
    core = quick_stream_core(oracle, params, stream);
  }

  out.solution = std::move(core.solution);
  out.value = core.value;
  out.monotone_violations = core.monotone_violations;
  return out;
}

}  // namespace submax
