// Benchmark driver for the streaming submodular maximization library.
// Talks to the core exclusively through the shared-library C interface.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "submax/submax.h"

namespace {

int fail(submax_status status) {
  std::fprintf(stderr, "error: %s\n", submax_last_error());
  return static_cast<int>(status);
}

void print_rows(const submax_rows* rows) {
  char line[512];
  if (submax_rows_line(rows, -1, line, sizeof(line)) == SUBMAX_OK) std::printf("%s\n", line);
  const int count = submax_rows_count(rows);
  for (int i = 0; i < count; ++i) {
    if (submax_rows_line(rows, i, line, sizeof(line)) == SUBMAX_OK) std::printf("%s\n", line);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"submax: streaming submodular maximization benchmark runner"};

  std::string alg = "qs";
  std::string objective = "maxcover";
  std::string graph;
  std::string out_path;
  int k = 10;
  int c = 1;
  int n = 0;
  int trials = 0;
  double eps = 0.1;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t shuffle_seed = 0;
  bool shuffle = false;
  bool verify = false;

  app.add_option("--alg", alg,
                 "algorithm: qs, qs++, qs-br, qsingleton, qslargek, greedy, greedy-lazy, ltl");
  app.add_option("--objective", objective, "objective: maxcover, revmax, adversarial");
  app.add_option("--graph", graph, "edge-list file (whitespace pairs, '#' comments)");
  app.add_option("--k", k, "cardinality constraint");
  app.add_option("--c", c, "block size (and the hardness instance parameter)");
  app.add_option("--n", n, "ground size for the adversarial objective");
  app.add_option("--eps", eps, "accuracy parameter")->capture_default_str();
  app.add_option("--delta", delta, "acceptance threshold multiplier (default: 1 for qs, c/10 for qs++)");
  app.add_option("--seed", seed, "base seed for seeded objectives and algorithms");
  app.add_option("--trials", trials, "trial count (default: 10 for randomized algorithms, else 1)");
  auto* shuffle_opt = app.add_option("--shuffle", shuffle_seed, "shuffle the stream order with this seed");
  app.add_option("--out", out_path, "append CSV rows to this file");
  app.add_flag("--verify", verify, "run the verification suite and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : static_cast<int>(SUBMAX_ERR_USAGE);
  }
  shuffle = shuffle_opt->count() > 0;

  if (verify) {
    const submax_status status = submax_verify(nullptr, nullptr);
    if (status != SUBMAX_OK) return fail(status);
    return 0;
  }

  if (objective == "adversarial") {
    submax_adversarial_report report;
    submax_rows* rows = nullptr;
    const submax_status status = submax_adversarial_trials(
        alg.c_str(), n, c, k, trials > 0 ? trials : 1000, seed, &report,
        out_path.empty() ? nullptr : &rows);
    if (status != SUBMAX_OK) return fail(status);
    std::printf("algorithm=%s trials=%d distinguished=%d rate=%.6g bound=%.6g sigma=%.6g max_queries=%llu\n",
                alg.c_str(), report.trials, report.distinguished, report.rate, report.bound,
                report.sigma, static_cast<unsigned long long>(report.max_queries));
    if (rows != nullptr) {
      const submax_status wr = submax_rows_write_csv(rows, out_path.c_str());
      submax_rows_free(rows);
      if (wr != SUBMAX_OK) return fail(wr);
    }
    return 0;
  }

  submax_experiment_spec spec{};
  spec.algorithm = alg.c_str();
  spec.objective = objective.c_str();
  spec.graph_path = graph.empty() ? nullptr : graph.c_str();
  spec.n = n;
  spec.k = k;
  spec.c = c;
  spec.eps = eps;
  spec.delta = delta;
  spec.seed = seed;
  spec.trials = trials;
  spec.shuffle = shuffle ? 1 : 0;
  spec.shuffle_seed = shuffle_seed;

  submax_rows* rows = nullptr;
  const submax_status status = submax_experiment_run(&spec, &rows);
  if (status != SUBMAX_OK) return fail(status);
  print_rows(rows);
  if (submax_rows_count(rows) > 1) {
    double mean = 0.0;
    double stddev = 0.0;
    if (submax_rows_value_stats(rows, &mean, &stddev) == SUBMAX_OK) {
      std::printf("# objective_value over %d trials: mean=%.6g stddev=%.6g\n",
                  submax_rows_count(rows), mean, stddev);
    }
  }
  if (!out_path.empty()) {
    const submax_status wr = submax_rows_write_csv(rows, out_path.c_str());
    if (wr != SUBMAX_OK) {
      submax_rows_free(rows);
      return fail(wr);
    }
  }
  submax_rows_free(rows);
  return 0;
}
