// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// criterion 1  query budget of the buffered single-pass algorithm
// criterion 2  memory budget of the buffered single-pass algorithm
// criterion 3  single-pass ratios against the exhaustive optimum
// criterion 4  buffer value never decreases across block steps
// criterion 5  booster ratio and round bound
// criterion 6  desk-scale normalized objective and query counts
// criterion 7  hidden-element distinguish rate vs the query bound
// criterion 8  objective correctness property suites
// criterion 9  baseline sanity
//
// Criterion 6 prefers data/ego-facebook.txt (SNAP facebook_combined) and
// falls back to a deterministic synthetic graph of the same size and
// density when the file is absent.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "baselines.hpp"
#include "boostratio.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "objectives.hpp"
#include "oracle.hpp"
#include "quickstream.hpp"
#include "verify.hpp"

using namespace submax;

namespace {

struct Criterion {
  int index;
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<int> iota_order(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

struct SweepOutcome {
  bool queries_ok = true;
  bool memory_ok = true;
  std::uint64_t monotone_violations = 0;
  std::string query_detail;
  std::string memory_detail;
  int runs = 0;
};

// Shared sweep for criteria 1, 2, and part of 4.
SweepOutcome run_bound_sweep() {
  SweepOutcome out;
  const double eps = 0.1;
  for (int n : {1000, 10000, 100000}) {
    auto graph = std::make_shared<const GraphInstance>(
        random_graph(n, static_cast<std::int64_t>(4) * n, 0x5eedULL + n));
    MaxCoverOracle oracle(graph);
    const std::vector<int> order = iota_order(n);
    for (int c : {1, 4, 16}) {
      for (int k : {2, 10, 100}) {
        QuickStreamParams params;
        params.k = k;
        params.c = c;
        params.eps = eps;
        const RunResult r = run_quick_stream(oracle, params, order);
        ++out.runs;
        out.monotone_violations += r.diag.monotone_violations;

        const std::uint64_t budget =
            static_cast<std::uint64_t>((n + c - 1) / c) + static_cast<std::uint64_t>(c);
        if (r.metrics.queries > budget ||
            r.metrics.queries + r.metrics.refresh_queries > budget) {
          out.queries_ok = false;
          out.query_detail = "n=" + std::to_string(n) + " c=" + std::to_string(c) +
                             " k=" + std::to_string(k) + ": " + std::to_string(r.metrics.queries) +
                             "+" + std::to_string(r.metrics.refresh_queries) + " > " +
                             std::to_string(budget);
        }
        const QuickStreamLimits lim = quick_stream_limits(k, c, eps);
        if (static_cast<double>(r.metrics.peak_stored) > lim.deletion_cap + c) {
          out.memory_ok = false;
          out.memory_detail = "n=" + std::to_string(n) + " c=" + std::to_string(c) +
                              " k=" + std::to_string(k) + ": stored " +
                              std::to_string(r.metrics.peak_stored);
        }
      }
    }
  }
  return out;
}

struct DeskOutcome {
  bool passed = true;
  std::string detail;
};

DeskOutcome run_desk_scale(const std::string& data_dir) {
  DeskOutcome out;
  std::shared_ptr<const GraphInstance> graph;
  std::string source;
  const std::string snap_path = data_dir + "/ego-facebook.txt";
  if (std::ifstream(snap_path).good()) {
    graph = std::make_shared<const GraphInstance>(load_edge_list(snap_path));
    source = "ego-facebook";
  } else {
    // Same node count and average degree as the SNAP ego network.
    graph = std::make_shared<const GraphInstance>(
        preferential_attachment_graph(4039, 22, 0x20200910ULL));
    source = "synthetic stand-in (place SNAP facebook_combined at " + snap_path + " to use the original)";
  }
  MaxCoverOracle oracle(graph);
  const int n = graph->n;
  const std::vector<int> order = iota_order(n);

  std::string numbers;
  for (int k : {10, 50, 100}) {
    const RunResult greedy = run_greedy(oracle, k, /*lazy=*/true);
    if (greedy.value <= 0.0) {
      out.passed = false;
      out.detail = "degenerate baseline";
      return out;
    }

    const RunResult plus = run_qs_plus_plus(oracle, k, 1, 0.1, std::nullopt, order);
    const double plus_norm = plus.value / greedy.value;
    const RunResult boosted = run_qs_br(oracle, k, 0.1, order);
    const double boosted_norm = boosted.value / greedy.value;
    numbers += "k=" + std::to_string(k) + ": qs++/greedy=" + std::to_string(plus_norm).substr(0, 5) +
               " qs-br/greedy=" + std::to_string(boosted_norm).substr(0, 5) + "; ";

    if (plus_norm < 0.90) {
      out.passed = false;
      out.detail += "qs++ normalized " + std::to_string(plus_norm) + " < 0.90 at k=" +
                    std::to_string(k) + " on " + source + "; ";
    }
    if (boosted_norm < 0.95) {
      out.passed = false;
      out.detail += "qs-br normalized " + std::to_string(boosted_norm) + " < 0.95 at k=" +
                    std::to_string(k) + " on " + source + "; ";
    }

    for (int c : {1, 4}) {
      const RunResult pp = run_qs_plus_plus(oracle, k, c, 0.1, std::nullopt, order);
      const std::uint64_t total = pp.metrics.queries + pp.metrics.refresh_queries;
      if (total >= static_cast<std::uint64_t>(2) * static_cast<std::uint64_t>(n)) {
        out.passed = false;
        out.detail += "qs++ c=" + std::to_string(c) + " k=" + std::to_string(k) + " used " +
                      std::to_string(total) + " queries (>= 2n); ";
      }
    }
  }

  // Single-pass budget spot check at the dataset's own size.
  QuickStreamParams params;
  params.k = 100;
  params.c = 1;
  params.eps = 0.1;
  const RunResult qs = run_quick_stream(oracle, params, order);
  if (qs.metrics.queries > static_cast<std::uint64_t>(n) + 1) {
    out.passed = false;
    out.detail += "plain single-pass run exceeded n+1 queries; ";
  }

  if (out.passed) out.detail = source + ": " + numbers;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : "data";
  std::vector<Criterion> results;

  const SweepOutcome sweep = run_bound_sweep();
  results.push_back({1, "query budget ceil(n/c)+c across the parameter grid", sweep.queries_ok,
                     sweep.queries_ok ? std::to_string(sweep.runs) + " runs, refresh included"
                                      : sweep.query_detail});
  results.push_back({2, "memory budget 2*c*l*(k+1)*log2(k)+c across the grid", sweep.memory_ok,
                     sweep.memory_ok ? std::to_string(sweep.runs) + " runs" : sweep.memory_detail});

  const CheckResult ratios = check_small_instance_ratios(200, 5);
  results.push_back({3, "single-pass ratios against the exhaustive optimum", ratios.passed, ratios.detail});

  const bool monotone_ok = sweep.monotone_violations == 0 && ratios.passed;
  results.push_back({4, "buffer value never decreases across block steps", monotone_ok,
                     "0 violations over " + std::to_string(sweep.runs) +
                         " sweep runs plus the ratio suite"});

  const CheckResult boost = check_boost_guarantee(200);
  results.push_back({5, "booster ratio and round bound", boost.passed, boost.detail});

  const DeskOutcome desk = run_desk_scale(data_dir);
  results.push_back({6, "desk-scale normalized objective and query counts", desk.passed, desk.detail});

  const CheckResult adversarial = check_adversarial_rates(10000, 2, 5, 1000);
  results.push_back({7, "hidden-element distinguish rates", adversarial.passed, adversarial.detail});

  const CheckResult properties = check_objective_properties(1000);
  const CheckResult degrees = check_degree_identity();
  results.push_back({8, "objective correctness property suites",
                     properties.passed && degrees.passed,
                     properties.passed && degrees.passed
                         ? "1000 samples per objective; degree identity on three graphs"
                         : properties.detail + " / " + degrees.detail});

  const CheckResult baselines = check_baseline_sanity(50);
  results.push_back({9, "baseline sanity", baselines.passed, baselines.detail});

  bool all = true;
  for (const Criterion& c : results) {
    all = all && c.passed;
    std::printf("criterion %d (%s): %s  %s\n", c.index, c.name.c_str(),
                c.passed ? "PASS" : "FAIL", c.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 2;
}
