#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metrics.hpp"
#include "oracle.hpp"

namespace submax {

enum class Algorithm { kQs, kQsPlusPlus, kQsBr, kQSingleton, kQsLargeK, kGreedy, kGreedyLazy, kLtl };
enum class Objective { kMaxCover, kRevMax, kAdversarial };

Algorithm parse_algorithm(const std::string& name);
Objective parse_objective(const std::string& name);
const char* algorithm_name(Algorithm alg);
bool algorithm_is_randomized(Algorithm alg);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kQs;
  Objective objective = Objective::kMaxCover;
  std::string graph_path;
  int n = 0;  // ground size for the synthetic adversarial objective
  int k = 2;
  int c = 1;
  double eps = 0.1;
  std::optional<double> delta;
  std::uint64_t seed = 0;
  int trials = 0;  // 0 picks the default: 10 for randomized algorithms, 1 otherwise
  std::optional<std::uint64_t> shuffle_seed;
};

// Validates parameter combinations without touching any oracle; throws
// UsageError on bad ones.
void validate_config(const ExperimentConfig& config);

// Runs the configured algorithm for the configured number of trials and
// returns one metrics row per trial. Deterministic in (config, seed)
// except for wall-clock fields.
std::vector<RunMetrics> run_experiment(const ExperimentConfig& config);

std::string csv_header();
std::string csv_row(const RunMetrics& row);

// Appends rows to a CSV file, writing the header only when the file is
// new or empty; an existing file must start with the same header.
void emit_csv(const std::vector<RunMetrics>& rows, const std::string& path);

struct AdversarialReport {
  int trials = 0;
  int distinguished = 0;  // trials with a query of a small set containing the hidden element
  double rate = 0.0;
  double bound = 0.0;  // m*(c*k - 1)/n from the worst observed query count m
  double sigma = 0.0;  // binomial standard error of the bound
  std::uint64_t max_queries = 0;
};

// Runs the named algorithm against the hidden-element objective with a
// fresh uniformly drawn hidden element per trial, and reports how often
// any query could have distinguished the two objective variants.
// Optionally collects the per-trial metrics rows.
AdversarialReport adversarial_trials(Algorithm alg, int n, int c, int k, int trials, std::uint64_t seed,
                                     std::vector<RunMetrics>* rows = nullptr);

// Same experiment for an arbitrary runner; the runner receives the
// oracle for one trial and performs whatever counted queries it wants
// through a CountedOracle it creates itself.
using TrialRunner = std::function<RunMetrics(const ValueOracle& oracle, QueryObserver* observer)>;
AdversarialReport adversarial_trials_with(const TrialRunner& runner, int n, int c, int k, int trials,
                                          std::uint64_t seed, std::vector<RunMetrics>* rows = nullptr);

}  // namespace submax
