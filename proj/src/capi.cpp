#include "submax/submax.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "baselines.hpp"
#include "boostratio.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "metrics.hpp"
#include "objectives.hpp"
#include "quickstream.hpp"
#include "rng.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
submax_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const submax::UsageError& e) {
    set_error(e.what());
    return SUBMAX_ERR_USAGE;
  } catch (const submax::IoError& e) {
    set_error(e.what());
    return SUBMAX_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SUBMAX_ERR_INTERNAL;
  }
}

}  // namespace

struct submax_graph {
  std::shared_ptr<const submax::GraphInstance> graph;
};

struct submax_oracle {
  std::shared_ptr<const submax::ValueOracle> oracle;
};

struct submax_rows {
  std::vector<submax::RunMetrics> rows;
};

extern "C" {

const char* submax_last_error(void) { return g_last_error.c_str(); }

submax_status submax_graph_load(const char* path, submax_graph** out) {
  if (path == nullptr || out == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&] {
    auto handle = std::make_unique<submax_graph>();
    handle->graph = std::make_shared<const submax::GraphInstance>(submax::load_edge_list(path));
    *out = handle.release();
    return SUBMAX_OK;
  });
}

void submax_graph_free(submax_graph* graph) { delete graph; }

int submax_graph_nodes(const submax_graph* graph) { return graph == nullptr ? 0 : graph->graph->n; }

long long submax_graph_edges(const submax_graph* graph) {
  return graph == nullptr ? 0 : graph->graph->edge_count;
}

submax_status submax_oracle_max_cover(const submax_graph* graph, submax_oracle** out) {
  if (graph == nullptr || out == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&] {
    auto handle = std::make_unique<submax_oracle>();
    handle->oracle = std::make_shared<submax::MaxCoverOracle>(graph->graph);
    *out = handle.release();
    return SUBMAX_OK;
  });
}

submax_status submax_oracle_revenue(const submax_graph* graph, uint64_t seed, submax_oracle** out) {
  if (graph == nullptr || out == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&] {
    auto instance = std::make_shared<const submax::RevenueInstance>(
        submax::make_revenue_instance(graph->graph, seed));
    auto handle = std::make_unique<submax_oracle>();
    handle->oracle = std::make_shared<submax::RevenueOracle>(std::move(instance));
    *out = handle.release();
    return SUBMAX_OK;
  });
}

submax_status submax_oracle_adversarial(int n, int c, int k, int hidden, submax_oracle** out) {
  if (out == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&] {
    auto handle = std::make_unique<submax_oracle>();
    handle->oracle = std::make_shared<submax::AdversarialOracle>(n, c, k, hidden);
    *out = handle.release();
    return SUBMAX_OK;
  });
}

void submax_oracle_free(submax_oracle* oracle) { delete oracle; }

int submax_oracle_ground_size(const submax_oracle* oracle) {
  return oracle == nullptr ? 0 : oracle->oracle->ground_size();
}

submax_status submax_run(const submax_oracle* oracle, const submax_run_spec* spec,
                         submax_run_stats* stats, int* solution, int solution_capacity) {
  if (oracle == nullptr || spec == nullptr || spec->algorithm == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&]() -> submax_status {
    const submax::Algorithm alg = submax::parse_algorithm(spec->algorithm);
    const submax::ValueOracle& f = *oracle->oracle;
    const int n = f.ground_size();

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    if (spec->shuffle != 0) {
      submax::SplitMix rng(spec->shuffle_seed);
      submax::shuffle_in_place(order, rng);
    }

    std::optional<double> delta;
    if (spec->delta > 0.0) delta = spec->delta;

    submax::RunResult result;
    switch (alg) {
      case submax::Algorithm::kQs: {
        submax::QuickStreamParams params;
        params.k = spec->k;
        params.c = spec->c;
        params.eps = spec->eps;
        params.delta = delta.value_or(1.0);
        result = submax::run_quick_stream(f, params, order);
        break;
      }
      case submax::Algorithm::kQsPlusPlus:
        result = submax::run_qs_plus_plus(f, spec->k, spec->c, spec->eps, delta, order);
        break;
      case submax::Algorithm::kQsBr:
        result = submax::run_qs_br(f, spec->k, spec->eps, order);
        break;
      case submax::Algorithm::kQSingleton:
        result = submax::run_quick_singleton(f, spec->c, order);
        break;
      case submax::Algorithm::kQsLargeK:
        result = submax::run_quick_stream_large_k(f, spec->k, spec->c, order);
        break;
      case submax::Algorithm::kGreedy:
        result = submax::run_greedy(f, spec->k, false);
        break;
      case submax::Algorithm::kGreedyLazy:
        result = submax::run_greedy(f, spec->k, true);
        break;
      case submax::Algorithm::kLtl:
        result = submax::run_stochastic_greedy(f, spec->k, spec->eps, spec->seed);
        break;
    }

    if (stats != nullptr) {
      stats->objective_value = result.metrics.objective_value;
      stats->queries = result.metrics.queries;
      stats->refresh_queries = result.metrics.refresh_queries;
      stats->peak_stored = result.metrics.peak_stored;
      stats->passes = result.metrics.passes;
      stats->wall_ms = result.metrics.wall_ms;
      stats->solution_size = static_cast<int>(result.solution.size());
    }
    if (solution != nullptr) {
      const int count = std::min(solution_capacity, static_cast<int>(result.solution.size()));
      for (int i = 0; i < count; ++i) solution[i] = result.solution[static_cast<std::size_t>(i)];
    }
    return SUBMAX_OK;
  });
}

submax_status submax_experiment_run(const submax_experiment_spec* spec, submax_rows** out) {
  if (spec == nullptr || out == nullptr || spec->algorithm == nullptr || spec->objective == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&] {
    submax::ExperimentConfig config;
    config.algorithm = submax::parse_algorithm(spec->algorithm);
    config.objective = submax::parse_objective(spec->objective);
    if (spec->graph_path != nullptr) config.graph_path = spec->graph_path;
    config.n = spec->n;
    config.k = spec->k;
    config.c = spec->c;
    config.eps = spec->eps;
    if (spec->delta > 0.0) config.delta = spec->delta;
    config.seed = spec->seed;
    config.trials = spec->trials;
    if (spec->shuffle != 0) config.shuffle_seed = spec->shuffle_seed;

    auto handle = std::make_unique<submax_rows>();
    handle->rows = submax::run_experiment(config);
    *out = handle.release();
    return SUBMAX_OK;
  });
}

int submax_rows_count(const submax_rows* rows) {
  return rows == nullptr ? 0 : static_cast<int>(rows->rows.size());
}

submax_status submax_rows_value_stats(const submax_rows* rows, double* mean, double* stddev) {
  if (rows == nullptr || mean == nullptr || stddev == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  const std::size_t count = rows->rows.size();
  if (count == 0) {
    *mean = 0.0;
    *stddev = 0.0;
    return SUBMAX_OK;
  }
  double sum = 0.0;
  for (const auto& row : rows->rows) sum += row.objective_value;
  const double m = sum / static_cast<double>(count);
  double sq = 0.0;
  for (const auto& row : rows->rows) sq += (row.objective_value - m) * (row.objective_value - m);
  *mean = m;
  *stddev = count > 1 ? std::sqrt(sq / static_cast<double>(count - 1)) : 0.0;
  return SUBMAX_OK;
}

submax_status submax_rows_line(const submax_rows* rows, int line, char* buffer, size_t capacity) {
  if (rows == nullptr || buffer == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&]() -> submax_status {
    std::string text;
    if (line < 0) {
      text = submax::csv_header();
    } else if (line < static_cast<int>(rows->rows.size())) {
      text = submax::csv_row(rows->rows[static_cast<std::size_t>(line)]);
    } else {
      set_error("row index out of range");
      return SUBMAX_ERR_USAGE;
    }
    if (text.size() + 1 > capacity) {
      set_error("buffer too small");
      return SUBMAX_ERR_USAGE;
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return SUBMAX_OK;
  });
}

submax_status submax_rows_write_csv(const submax_rows* rows, const char* path) {
  if (rows == nullptr || path == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&] {
    submax::emit_csv(rows->rows, path);
    return SUBMAX_OK;
  });
}

void submax_rows_free(submax_rows* rows) { delete rows; }

submax_status submax_adversarial_trials(const char* algorithm, int n, int c, int k, int trials,
                                        uint64_t seed, submax_adversarial_report* report,
                                        submax_rows** rows_out) {
  if (algorithm == nullptr || report == nullptr) {
    set_error("null argument");
    return SUBMAX_ERR_USAGE;
  }
  return guarded([&] {
    const submax::Algorithm alg = submax::parse_algorithm(algorithm);
    std::unique_ptr<submax_rows> handle;
    std::vector<submax::RunMetrics>* rows = nullptr;
    if (rows_out != nullptr) {
      handle = std::make_unique<submax_rows>();
      rows = &handle->rows;
    }
    const submax::AdversarialReport r = submax::adversarial_trials(alg, n, c, k, trials, seed, rows);
    report->trials = r.trials;
    report->distinguished = r.distinguished;
    report->rate = r.rate;
    report->bound = r.bound;
    report->sigma = r.sigma;
    report->max_queries = r.max_queries;
    if (rows_out != nullptr) *rows_out = handle.release();
    return SUBMAX_OK;
  });
}

submax_status submax_verify(submax_log_fn log, void* user) {
  return guarded([&]() -> submax_status {
    std::function<void(const std::string&)> sink;
    if (log != nullptr) {
      sink = [log, user](const std::string& line) { log(line.c_str(), user); };
    }
    const submax::VerifyReport report = submax::verify_suite(sink);
    if (!report.all_passed()) {
      set_error("verification suite reported violations");
      return SUBMAX_ERR_VERIFY;
    }
    return SUBMAX_OK;
  });
}

}  // extern "C"
