#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <sstream>

#include "baselines.hpp"
#include "boostratio.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "objectives.hpp"
#include "oracle.hpp"
#include "quickstream.hpp"
#include "rng.hpp"

namespace submax {

namespace {

// Accumulates failures with a capped list of descriptions.
class Failures {
 public:
  void add(const std::string& what) {
    ++count_;
    if (count_ <= 5) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what;
    }
  }

  bool empty() const { return count_ == 0; }

  std::string summary(const std::string& ok_detail) const {
    if (count_ == 0) return ok_detail;
    std::string out = std::to_string(count_) + " violation(s): " + detail_;
    return out;
  }

  int count() const { return count_; }

 private:
  int count_ = 0;
  std::string detail_;
};

std::vector<int> random_subset(int n, SplitMix& rng, double keep_probability) {
  std::vector<int> out;
  for (int e = 0; e < n; ++e) {
    if (rng.uniform01() < keep_probability) out.push_back(e);
  }
  return out;
}

// Random pair A ⊆ B plus an element outside B, for the diminishing
// returns checks.
struct NestedPair {
  std::vector<int> small;
  std::vector<int> big;
  int outside = -1;
};

NestedPair random_nested_pair(int n, SplitMix& rng) {
  NestedPair p;
  const double keep_big = 0.2 + 0.6 * rng.uniform01();
  const double keep_small = rng.uniform01();
  for (int e = 0; e < n; ++e) {
    if (rng.uniform01() < keep_big) {
      p.big.push_back(e);
      if (rng.uniform01() < keep_small) p.small.push_back(e);
    } else if (p.outside < 0 || rng.uniform01() < 0.1) {
      p.outside = e;
    }
  }
  return p;
}

void check_properties_of(const ValueOracle& oracle, const std::string& label, int samples,
                         double tolerance, SplitMix& rng, Failures& failures) {
  const int n = oracle.ground_size();
  for (int s = 0; s < samples; ++s) {
    NestedPair p = random_nested_pair(n, rng);
    const double f_small = oracle.evaluate(p.small);
    const double f_big = oracle.evaluate(p.big);
    if (f_small > f_big + tolerance) {
      failures.add(label + ": monotonicity broken, f(A)=" + std::to_string(f_small) +
                   " > f(B)=" + std::to_string(f_big));
    }
    if (p.outside >= 0) {
      std::vector<int> small_u = p.small;
      small_u.push_back(p.outside);
      std::vector<int> big_u = p.big;
      big_u.push_back(p.outside);
      const double gain_small = oracle.evaluate(small_u) - f_small;
      const double gain_big = oracle.evaluate(big_u) - f_big;
      if (gain_big > gain_small + tolerance) {
        failures.add(label + ": diminishing returns broken, gain at superset " +
                     std::to_string(gain_big) + " > " + std::to_string(gain_small));
      }
    }
  }
}

// Small random coverage instance family shared by the ratio and booster
// checks: 4..10 nodes, varying density, occasionally with isolated
// vertices.
std::shared_ptr<const GraphInstance> random_small_graph(SplitMix& rng) {
  const int n = 4 + rng.index(7);
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t edges = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * n)));
  return std::make_shared<const GraphInstance>(
      random_graph(n, std::min(edges, max_edges), rng.next()));
}

std::vector<int> natural_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return order;
}

}  // namespace

CheckResult check_objective_properties(int samples, std::uint64_t seed) {
  Failures failures;
  SplitMix rng(seed);

  auto graph = std::make_shared<const GraphInstance>(random_graph(60, 150, rng.next()));
  MaxCoverOracle cover(graph);
  check_properties_of(cover, "maxcover", samples, 0.0, rng, failures);

  auto rev_instance =
      std::make_shared<const RevenueInstance>(make_revenue_instance(graph, rng.next()));
  RevenueOracle revenue(rev_instance);
  check_properties_of(revenue, "revmax", samples, 1e-9, rng, failures);
  for (double a : rev_instance->alpha) {
    if (!(a > 0.0 && a < 1.0)) failures.add("revmax exponent outside (0,1)");
  }

  AdversarialOracle plain(50, 2, 5, -1);
  AdversarialOracle hidden(50, 2, 5, 17);
  check_properties_of(plain, "adversarial-plain", samples, 0.0, rng, failures);
  check_properties_of(hidden, "adversarial-hidden", samples, 0.0, rng, failures);

  // The variants agree on every set that is large or avoids the hidden
  // element.
  for (int s = 0; s < samples; ++s) {
    std::vector<int> set = random_subset(50, rng, rng.uniform01());
    const bool has_hidden = std::find(set.begin(), set.end(), 17) != set.end();
    const double f = plain.evaluate(set);
    const double g = hidden.evaluate(set);
    if (static_cast<int>(set.size()) >= plain.ceiling() || !has_hidden) {
      if (f != g) failures.add("adversarial variants disagree on a non-distinguishing set");
    } else if (g != plain.ceiling()) {
      failures.add("hidden variant should hit the ceiling on sets containing the element");
    }
  }

  CheckResult out;
  out.name = "objective properties (monotone, diminishing returns, variant agreement)";
  out.passed = failures.empty();
  out.detail = failures.summary(std::to_string(samples) + " samples per objective");
  return out;
}

CheckResult check_modular_agreement(std::uint64_t seed) {
  Failures failures;
  SplitMix rng(seed);
  for (int round = 0; round < 20; ++round) {
    const int n = 6 + rng.index(7);
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (double& w : weights) w = rng.uniform01() * 10.0;
    ModularOracle oracle(weights);

    std::vector<double> sorted = weights;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (int k : {0, 1, 3, n}) {
      double expect = 0.0;
      for (int i = 0; i < k && i < n; ++i) expect += sorted[static_cast<std::size_t>(i)];
      const OptResult opt = brute_force_opt(oracle, k);
      if (std::abs(opt.value - expect) > 1e-9) {
        failures.add("brute force disagrees with top-k sum at k=" + std::to_string(k));
      }
    }
  }
  CheckResult out;
  out.name = "exhaustive optimum matches top-k sums on additive functions";
  out.passed = failures.empty();
  out.detail = failures.summary("20 random additive instances");
  return out;
}

CheckResult check_elementary_growth_claim() {
  Failures failures;
  for (int k = 2; k <= 64; ++k) {
    const double ys[] = {2.0, 10.0, static_cast<double>(k), static_cast<double>(k) * k};
    for (double y : ys) {
      const double base = std::ceil((k + 1) * std::log(y));
      for (double i : {base, base + 1, base + 5}) {
        const double grown = std::pow(1.0 + 1.0 / k, i);
        if (grown < y * (1.0 - 1e-12)) {
          failures.add("(1+1/k)^i < y at k=" + std::to_string(k) + ", y=" + std::to_string(y));
        }
      }
    }
  }
  CheckResult out;
  out.name = "compounded growth clears its target on the k/y grid";
  out.passed = failures.empty();
  out.detail = failures.summary("k in 2..64, y in {2, 10, k, k^2}");
  return out;
}

CheckResult check_small_instance_ratios(int instances, int permutations, std::uint64_t seed) {
  Failures failures;
  SplitMix rng(seed);
  const double eps = 0.1;

  for (int inst = 0; inst < instances; ++inst) {
    auto graph = random_small_graph(rng);
    MaxCoverOracle oracle(graph);
    const int n = graph->n;

    double opt[5] = {0, 0, 0, 0, 0};
    for (int k = 1; k <= 4; ++k) opt[k] = brute_force_opt(oracle, k).value;

    std::vector<int> order = natural_order(n);
    for (int perm = 0; perm < permutations; ++perm) {
      if (perm > 0) shuffle_in_place(order, rng);

      for (int k : {2, 3}) {
        for (int c : {1, 2, 4}) {
          QuickStreamParams params;
          params.k = k;
          params.c = c;
          params.eps = eps;
          RunResult r = run_quick_stream(oracle, params, order);
          const double floor_ratio = 1.0 / (4.0 * c) - eps;
          if (r.value < floor_ratio * opt[k]) {
            failures.add("buffered ratio miss: value " + std::to_string(r.value) + " < " +
                         std::to_string(floor_ratio) + " * " + std::to_string(opt[k]));
          }
          const std::uint64_t budget =
              static_cast<std::uint64_t>((n + c - 1) / c) + static_cast<std::uint64_t>(c);
          if (r.metrics.queries > budget) failures.add("buffered query budget exceeded");
          if (r.metrics.queries + r.metrics.refresh_queries > budget) {
            failures.add("buffered combined query budget exceeded");
          }
          const QuickStreamLimits lim = quick_stream_limits(k, c, eps);
          if (static_cast<double>(r.metrics.peak_stored) > lim.deletion_cap + c) {
            failures.add("buffered memory bound exceeded");
          }
          if (r.solution.size() > static_cast<std::size_t>(k)) failures.add("oversized solution");
          if (r.diag.monotone_violations != 0) failures.add("buffer value decreased across a step");
        }
      }

      for (int c : {1, 2, 3}) {
        RunResult r = run_quick_singleton(oracle, c, order);
        if (r.value * c < opt[1]) {
          failures.add("singleton ratio miss at c=" + std::to_string(c));
        }
        const std::uint64_t budget =
            static_cast<std::uint64_t>((n + c - 1) / c) + static_cast<std::uint64_t>(c);
        if (r.metrics.queries > budget) failures.add("singleton query budget exceeded");
        if (r.solution.size() > 1) failures.add("singleton returned more than one element");
      }

      for (int k : {3, 4}) {
        const int c = 1;
        RunResult r = run_quick_stream_large_k(oracle, k, c, order);
        if (r.value < large_k_ratio(k, c) * opt[k]) {
          failures.add("large-k ratio miss at k=" + std::to_string(k));
        }
        if (r.metrics.queries > static_cast<std::uint64_t>(n)) {
          failures.add("large-k query budget exceeded");
        }
        if (r.solution.size() > static_cast<std::size_t>(k)) failures.add("oversized solution");
        if (r.diag.monotone_violations != 0) failures.add("large-k buffer value decreased");
      }
    }
  }

  CheckResult out;
  out.name = "single-pass ratio, query, and memory bounds on exhaustive instances";
  out.passed = failures.empty();
  out.detail = failures.summary(std::to_string(instances) + " instances x " +
                                std::to_string(permutations) + " orders");
  return out;
}

CheckResult check_boost_guarantee(int instances, std::uint64_t seed) {
  Failures failures;
  SplitMix rng(seed);
  const double eps = 0.1;
  const double target = 1.0 - std::exp(-1.0 + eps);

  for (int inst = 0; inst < instances; ++inst) {
    auto graph = random_small_graph(rng);
    MaxCoverOracle oracle(graph);
    const int n = graph->n;
    std::vector<int> order = natural_order(n);
    if (inst % 2 == 1) shuffle_in_place(order, rng);

    for (int k = 1; k <= 4; ++k) {
      const double opt = brute_force_opt(oracle, k).value;
      RunResult r = run_qs_br(oracle, k, eps, order);
      if (r.value < target * opt) {
        failures.add("boosted ratio miss: " + std::to_string(r.value) + " < " +
                     std::to_string(target * opt));
      }
      if (r.value < r.diag.feed_value) failures.add("composition returned less than its feed");
      if (r.diag.boost_rounds > 0) {
        const int bound = boost_round_bound(r.diag.boost_alpha, eps);
        if (r.diag.boost_rounds > bound) failures.add("threshold rounds exceeded their bound");
        if (r.metrics.passes != 1 + r.diag.boost_rounds) {
          failures.add("pass accounting mismatch");
        }
      }

      // Per-addition progress on runs that fill the solution, measured
      // with an instrumented composition.
      QueryLedger ledger;
      CountedOracle counted(oracle, ledger);
      FeedOutcome feed = dispatch_core(counted, k, 1, eps, order, RefreshPolicy::kStaleCache);
      if (feed.value > 0.0 && feed.ratio > 0.0) {
        if (feed.value > opt * (1.0 + 1e-9)) failures.add("feed value exceeds the optimum");
        if (opt > feed.value / feed.ratio * (1.0 + 1e-9)) {
          failures.add("feed certificate does not cover the optimum");
        }
        BoostParams bp;
        bp.gamma = feed.value;
        bp.alpha = feed.ratio;
        bp.eps = eps;
        bp.k = k;
        std::vector<std::pair<double, double>> additions;
        BoostOptions options;
        options.addition_log = &additions;
        BoostOutcome boosted = boost_ratio_core(counted, bp, order, options);
        if (boosted.solution.size() == static_cast<std::size_t>(k)) {
          for (auto [before, gain] : additions) {
            if (gain < (1.0 - eps) / k * (opt - before) - 1e-9) {
              failures.add("addition gain below the per-step progress floor");
            }
          }
        }
      }
    }
  }

  CheckResult out;
  out.name = "booster ratio, round bound, and per-addition progress";
  out.passed = failures.empty();
  out.detail = failures.summary(std::to_string(instances) + " instances, k in 1..4");
  return out;
}

CheckResult check_baseline_sanity(int identical_instances, std::uint64_t seed) {
  Failures failures;
  SplitMix rng(seed);

  for (int inst = 0; inst < identical_instances; ++inst) {
    const int n = 6 + rng.index(7);
    auto graph = std::make_shared<const GraphInstance>(random_graph(n, 2 * n, rng.next()));
    MaxCoverOracle oracle(graph);
    for (int k : {2, 3}) {
      RunResult eager = run_greedy(oracle, k, false);
      RunResult lazy = run_greedy(oracle, k, true);
      if (eager.solution.sequence() != lazy.solution.sequence()) {
        failures.add("lazy and eager selections diverge");
      }
      if (lazy.metrics.queries > eager.metrics.queries) {
        failures.add("lazy evaluation used more queries than the plain scan");
      }
    }
  }

  {
    SplitMix family(seed ^ 0x5eedULL);
    for (int inst = 0; inst < 50; ++inst) {
      auto graph = random_small_graph(family);
      MaxCoverOracle oracle(graph);
      for (int k : {1, 2, 3}) {
        const double opt = brute_force_opt(oracle, k).value;
        RunResult g = run_greedy(oracle, k, true);
        if (g.value < (1.0 - 1.0 / std::numbers::e) * opt) {
          failures.add("greedy below its guarantee");
        }
      }
    }
  }

  {
    auto graph = std::make_shared<const GraphInstance>(random_graph(1000, 3000, seed ^ 0xabcULL));
    MaxCoverOracle oracle(graph);
    const int k = 10;
    const double eps = 0.1;
    const double expected = 1000.0 * std::log(1.0 / eps);
    double mean = 0.0;
    double mean_sq = 0.0;
    for (int t = 0; t < 10; ++t) {
      RunResult r = run_stochastic_greedy(oracle, k, eps, keyed_bits(seed, static_cast<std::uint64_t>(t)));
      const double q = static_cast<double>(r.metrics.queries);
      mean += r.value;
      mean_sq += r.value * r.value;
      if (q < expected / 2.0 || q > expected * 2.0) {
        failures.add("sampled-greedy query count off its n*ln(1/eps) track: " + std::to_string(q));
      }
    }
    mean /= 10.0;
    const double variance = std::max(0.0, mean_sq / 10.0 - mean * mean);
    if (!(mean > 0.0) || !(std::sqrt(variance) >= 0.0)) failures.add("degenerate trial statistics");

    RunResult a = run_stochastic_greedy(oracle, k, eps, 99);
    RunResult b = run_stochastic_greedy(oracle, k, eps, 99);
    if (a.solution.sequence() != b.solution.sequence()) failures.add("same seed gave different runs");
  }

  CheckResult out;
  out.name = "baseline sanity (lazy/eager identity, greedy guarantee, sampling track)";
  out.passed = failures.empty();
  out.detail = failures.summary(std::to_string(identical_instances) + " identity instances");
  return out;
}

CheckResult check_adversarial_rates(int n, int c, int k, int trials, std::uint64_t seed) {
  Failures failures;
  std::ostringstream detail;
  const Algorithm algorithms[] = {Algorithm::kQs,         Algorithm::kQsPlusPlus,
                                  Algorithm::kQsBr,       Algorithm::kQSingleton,
                                  Algorithm::kQsLargeK,   Algorithm::kGreedy,
                                  Algorithm::kGreedyLazy, Algorithm::kLtl};
  for (Algorithm alg : algorithms) {
    const AdversarialReport report = adversarial_trials(alg, n, c, k, trials, seed);
    if (report.rate > report.bound + 3.0 * report.sigma) {
      failures.add(std::string(algorithm_name(alg)) + " distinguish rate " +
                   std::to_string(report.rate) + " above " + std::to_string(report.bound) + " + 3*" +
                   std::to_string(report.sigma));
    }
    detail << algorithm_name(alg) << "=" << report.rate << " ";
  }
  CheckResult out;
  out.name = "hidden-element distinguish rates stay under the query-count bound";
  out.passed = failures.empty();
  out.detail = failures.summary(detail.str());
  return out;
}

CheckResult check_degree_identity(std::uint64_t seed) {
  Failures failures;
  const GraphInstance graphs[] = {random_graph(200, 500, seed), random_graph(1000, 4000, seed + 1),
                                  preferential_attachment_graph(500, 3, seed + 2)};
  for (const GraphInstance& g : graphs) {
    auto shared = std::make_shared<const GraphInstance>(g);
    MaxCoverOracle oracle(shared);
    for (int u = 0; u < g.n; ++u) {
      const int single[1] = {u};
      const double value = oracle.evaluate(single);
      const double expected = g.degree(u) == 0 ? 0.0 : 1.0 + g.degree(u);
      if (value != expected) {
        failures.add("singleton coverage != 1 + degree at node " + std::to_string(u));
      }
    }
    SplitMix rng(seed ^ 0x99ULL);
    for (int s = 0; s < 50; ++s) {
      std::vector<int> set = random_subset(g.n, rng, 0.3);
      if (oracle.evaluate(set) > g.n) failures.add("coverage exceeded the vertex count");
    }
  }
  CheckResult out;
  out.name = "singleton coverage equals 1 + degree on three graphs";
  out.passed = failures.empty();
  out.detail = failures.summary("3 graphs, all nodes");
  return out;
}

CheckResult check_run_determinism(std::uint64_t seed) {
  Failures failures;
  auto graph = std::make_shared<const GraphInstance>(random_graph(300, 900, seed));
  MaxCoverOracle oracle(graph);
  std::vector<int> order = natural_order(graph->n);

  QuickStreamParams params;
  params.k = 5;
  RunResult a = run_quick_stream(oracle, params, order);
  RunResult b = run_quick_stream(oracle, params, order);
  if (a.solution.sequence() != b.solution.sequence() || a.metrics.queries != b.metrics.queries ||
      a.metrics.peak_stored != b.metrics.peak_stored || a.value != b.value) {
    failures.add("repeated buffered runs differ");
  }

  RunResult c = run_stochastic_greedy(oracle, 5, 0.1, seed);
  RunResult d = run_stochastic_greedy(oracle, 5, 0.1, seed);
  if (c.solution.sequence() != d.solution.sequence() || c.metrics.queries != d.metrics.queries) {
    failures.add("repeated seeded sampling runs differ");
  }

  CheckResult out;
  out.name = "identical inputs reproduce identical runs";
  out.passed = failures.empty();
  out.detail = failures.summary("buffered + sampled runs, two repetitions each");
  return out;
}

VerifyReport verify_suite(const std::function<void(const std::string&)>& log) {
  auto emit = [&](const std::string& line) {
    if (log) {
      log(line);
    } else {
      std::printf("%s\n", line.c_str());
    }
  };

  VerifyReport report;
  report.checks.push_back(check_objective_properties());
  report.checks.push_back(check_modular_agreement());
  report.checks.push_back(check_elementary_growth_claim());
  report.checks.push_back(check_small_instance_ratios());
  report.checks.push_back(check_boost_guarantee());
  report.checks.push_back(check_baseline_sanity());
  report.checks.push_back(check_degree_identity());
  report.checks.push_back(check_run_determinism());
  report.checks.push_back(check_adversarial_rates());

  for (const CheckResult& c : report.checks) {
    emit(std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name  + ": " + c.detail);
  }
  emit(report.all_passed() ? "verification passed" : "verification FAILED");
  return report;
}

}  // namespace submax
