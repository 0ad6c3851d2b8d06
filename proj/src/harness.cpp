#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>

#include "baselines.hpp"
#include "boostratio.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "objectives.hpp"
#include "quickstream.hpp"
#include "rng.hpp"

namespace submax {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "qs") return Algorithm::kQs;
  if (name == "qs++") return Algorithm::kQsPlusPlus;
  if (name == "qs-br") return Algorithm::kQsBr;
  if (name == "qsingleton") return Algorithm::kQSingleton;
  if (name == "qslargek") return Algorithm::kQsLargeK;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "greedy-lazy") return Algorithm::kGreedyLazy;
  if (name == "ltl") return Algorithm::kLtl;
  throw UsageError("unknown algorithm '" + name +
                   "'; expected qs, qs++, qs-br, qsingleton, qslargek, greedy, greedy-lazy, or ltl");
}

Objective parse_objective(const std::string& name) {
  if (name == "maxcover") return Objective::kMaxCover;
  if (name == "revmax") return Objective::kRevMax;
  if (name == "adversarial") return Objective::kAdversarial;
  throw UsageError("unknown objective '" + name + "'; expected maxcover, revmax, or adversarial");
}

const char* algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::kQs: return "qs";
    case Algorithm::kQsPlusPlus: return "qs++";
    case Algorithm::kQsBr: return "qs-br";
    case Algorithm::kQSingleton: return "qsingleton";
    case Algorithm::kQsLargeK: return "qslargek";
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kGreedyLazy: return "greedy-lazy";
    case Algorithm::kLtl: return "ltl";
  }
  return "?";
}

bool algorithm_is_randomized(Algorithm alg) { return alg == Algorithm::kLtl; }

void validate_config(const ExperimentConfig& config) {
  if (config.k < 1) throw UsageError("k must be at least 1");
  if (config.c < 1) throw UsageError("c must be at least 1");
  if (!(config.eps > 0.0)) throw UsageError("eps must be positive");
  if (config.trials < 0) throw UsageError("trials must be nonnegative");
  if (config.delta && !(*config.delta > 0.0)) throw UsageError("delta must be positive");

  switch (config.algorithm) {
    case Algorithm::kQs:
      if (config.k < 2) throw UsageError("qs requires k >= 2; use qsingleton for k = 1");
      break;
    case Algorithm::kQSingleton:
      if (config.k != 1) throw UsageError("qsingleton requires k = 1");
      break;
    case Algorithm::kQsLargeK:
      if (!large_k_applicable(config.k, config.c)) {
        throw UsageError("qslargek requires k >= 8c/e (" +
                         std::to_string(8.0 * config.c / std::numbers::e) + " for c = " +
                         std::to_string(config.c) + ")");
      }
      break;
    case Algorithm::kQsBr:
    case Algorithm::kQsPlusPlus:
      if (!(config.eps < 1.0)) throw UsageError("eps must lie in (0,1) for boosted runs");
      break;
    case Algorithm::kLtl:
      if (!(config.eps < 1.0)) throw UsageError("eps must lie in (0,1) for ltl");
      break;
    case Algorithm::kGreedy:
    case Algorithm::kGreedyLazy:
      break;
  }

  if (config.objective == Objective::kAdversarial) {
    if (config.n < 1) throw UsageError("adversarial objective requires a ground size n");
    if (config.c < 2) throw UsageError("adversarial objective requires c >= 2");
  } else if (config.graph_path.empty()) {
    throw UsageError("objective requires a graph file");
  }
}

namespace {

std::vector<int> stream_order(int n, const std::optional<std::uint64_t>& shuffle_seed) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  if (shuffle_seed) {
    SplitMix rng(*shuffle_seed);
    shuffle_in_place(order, rng);
  }
  return order;
}

RunResult run_one(Algorithm alg, const ValueOracle& oracle, const ExperimentConfig& config,
                  std::span<const int> stream, std::uint64_t trial_seed, QueryObserver* observer) {
  switch (alg) {
    case Algorithm::kQs: {
      QuickStreamParams params;
      params.k = config.k;
      params.c = config.c;
      params.eps = config.eps;
      params.delta = config.delta.value_or(1.0);
      return run_quick_stream(oracle, params, stream, observer);
    }
    case Algorithm::kQsPlusPlus:
      return run_qs_plus_plus(oracle, config.k, config.c, config.eps, config.delta, stream,
                              RefreshPolicy::kStaleCache, observer);
    case Algorithm::kQsBr:
      return run_qs_br(oracle, config.k, config.eps, stream, RefreshPolicy::kStaleCache, observer);
    case Algorithm::kQSingleton:
      return run_quick_singleton(oracle, config.c, stream, observer);
    case Algorithm::kQsLargeK:
      return run_quick_stream_large_k(oracle, config.k, config.c, stream, RefreshPolicy::kStaleCache,
                                      observer);
    case Algorithm::kGreedy:
      return run_greedy(oracle, config.k, /*lazy=*/false, observer);
    case Algorithm::kGreedyLazy:
      return run_greedy(oracle, config.k, /*lazy=*/true, observer);
    case Algorithm::kLtl:
      return run_stochastic_greedy(oracle, config.k, config.eps, trial_seed, observer);
  }
  throw UsageError("unhandled algorithm");
}

std::shared_ptr<const ValueOracle> build_graph_oracle(const ExperimentConfig& config,
                                                      std::shared_ptr<const GraphInstance> graph) {
  if (config.objective == Objective::kMaxCover) {
    return std::make_shared<MaxCoverOracle>(std::move(graph));
  }
  auto instance =
      std::make_shared<RevenueInstance>(make_revenue_instance(std::move(graph), config.seed));
  return std::make_shared<RevenueOracle>(std::move(instance));
}

}  // namespace

std::vector<RunMetrics> run_experiment(const ExperimentConfig& config) {
  validate_config(config);

  const int trials =
      config.trials > 0 ? config.trials : (algorithm_is_randomized(config.algorithm) ? 10 : 1);

  if (config.objective == Objective::kAdversarial) {
    std::vector<RunMetrics> rows;
    adversarial_trials(config.algorithm, config.n, config.c, config.k, trials, config.seed, &rows);
    return rows;
  }

  auto graph = std::make_shared<const GraphInstance>(load_edge_list(config.graph_path));
  if (config.k > graph->n) throw UsageError("k exceeds the number of nodes");
  std::shared_ptr<const ValueOracle> oracle = build_graph_oracle(config, graph);
  const std::vector<int> order = stream_order(graph->n, config.shuffle_seed);

  std::vector<RunMetrics> rows;
  rows.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = keyed_bits(config.seed, static_cast<std::uint64_t>(t));
    rows.push_back(run_one(config.algorithm, *oracle, config, order, trial_seed, nullptr).metrics);
  }
  return rows;
}

namespace {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

}  // namespace

std::string csv_header() {
  return "algorithm,n,k,c,eps,objective_value,queries,refresh_queries,peak_stored,passes,wall_ms";
}

std::string csv_row(const RunMetrics& row) {
  std::string out;
  out += row.algorithm;
  out += ',';
  out += std::to_string(row.n);
  out += ',';
  out += std::to_string(row.k);
  out += ',';
  out += std::to_string(row.c);
  out += ',';
  out += format_real(row.eps);
  out += ',';
  out += format_real(row.objective_value);
  out += ',';
  out += std::to_string(row.queries);
  out += ',';
  out += std::to_string(row.refresh_queries);
  out += ',';
  out += std::to_string(row.peak_stored);
  out += ',';
  out += std::to_string(row.passes);
  out += ',';
  out += format_real(row.wall_ms);
  return out;
}

void emit_csv(const std::vector<RunMetrics>& rows, const std::string& path) {
  bool needs_header = true;
  {
    std::ifstream existing(path);
    if (existing) {
      std::string first;
      if (std::getline(existing, first) && !first.empty()) {
        if (first != csv_header()) {
          throw IoError(path + ": existing file has a different header");
        }
        needs_header = false;
      }
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open for writing: " + path);
  if (needs_header) out << csv_header() << '\n';
  for (const RunMetrics& row : rows) out << csv_row(row) << '\n';
  if (!out) throw IoError("write failure on " + path);
}

namespace {

// Flags any query that could tell the two adversarial variants apart: a
// set of size below the value ceiling that contains the hidden element.
class DistinguishObserver : public QueryObserver {
 public:
  DistinguishObserver(int hidden, std::size_t small_limit) : hidden_(hidden), limit_(small_limit) {}

  int watched_element() const override { return hidden_; }

  void on_query(std::size_t set_size, bool contains_watched) override {
    if (contains_watched && set_size <= limit_) tripped_ = true;
  }

  bool tripped() const { return tripped_; }

 private:
  int hidden_;
  std::size_t limit_;
  bool tripped_ = false;
};

}  // namespace

AdversarialReport adversarial_trials_with(const TrialRunner& runner, int n, int c, int k, int trials,
                                          std::uint64_t seed, std::vector<RunMetrics>* rows) {
  if (n < 1) throw UsageError("adversarial experiment requires n >= 1");
  if (c < 2) throw UsageError("adversarial experiment requires c >= 2");
  if (k < 1) throw UsageError("adversarial experiment requires k >= 1");
  if (trials < 0) throw UsageError("trials must be nonnegative");

  AdversarialReport report;
  report.trials = trials;
  const std::size_t small_limit = static_cast<std::size_t>(c) * static_cast<std::size_t>(k) - 1;

  for (int t = 0; t < trials; ++t) {
    const int hidden = static_cast<int>(keyed_bits(seed, static_cast<std::uint64_t>(t)) %
                                        static_cast<std::uint64_t>(n));
    AdversarialOracle oracle(n, c, k, hidden);
    DistinguishObserver observer(hidden, small_limit);
    RunMetrics metrics = runner(oracle, &observer);
    if (observer.tripped()) ++report.distinguished;
    const std::uint64_t total = metrics.queries + metrics.refresh_queries;
    report.max_queries = std::max(report.max_queries, total);
    if (rows != nullptr) rows->push_back(std::move(metrics));
  }

  if (trials > 0) {
    report.rate = static_cast<double>(report.distinguished) / trials;
    const double m = static_cast<double>(report.max_queries);
    report.bound = std::min(1.0, m * static_cast<double>(small_limit) / n);
    report.sigma = std::sqrt(report.bound * (1.0 - report.bound) / trials);
  }
  return report;
}

AdversarialReport adversarial_trials(Algorithm alg, int n, int c, int k, int trials, std::uint64_t seed,
                                     std::vector<RunMetrics>* rows) {
  ExperimentConfig config;
  config.algorithm = alg;
  config.objective = Objective::kAdversarial;
  config.n = n;
  config.k = k;
  // Hardness instances need c >= 2, but the variants run with their own
  // block size; use the widest valid one so every algorithm can
  // participate at the same (n, c, k).
  config.c = alg == Algorithm::kQsLargeK
                 ? std::max(1, static_cast<int>(k * std::numbers::e / 8.0))
                 : c;
  if (alg == Algorithm::kQSingleton) config.k = 1;
  config.eps = 0.1;
  config.seed = seed;

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;

  std::uint64_t trial = 0;
  TrialRunner runner = [&](const ValueOracle& oracle, QueryObserver* observer) {
    const std::uint64_t trial_seed = keyed_bits(mix64(seed) ^ 0x74726961ULL, trial++);
    return run_one(alg, oracle, config, order, trial_seed, observer).metrics;
  };
  return adversarial_trials_with(runner, n, c, k, trials, seed, rows);
}

}  // namespace submax
