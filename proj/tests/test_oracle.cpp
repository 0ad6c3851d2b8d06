#include <doctest.h>

#include <memory>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "objectives.hpp"
#include "oracle.hpp"
#include "rng.hpp"

using namespace submax;

namespace {

std::shared_ptr<const GraphInstance> path3() {
  return std::make_shared<const GraphInstance>(graph_from_edges(3, {{0, 1}, {1, 2}}));
}

// Star with center 0 and leaves 1..3.
std::shared_ptr<const GraphInstance> star4() {
  return std::make_shared<const GraphInstance>(graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
}

}  // namespace

TEST_CASE("element set keeps insertion order and recency views") {
  ElementSet s(10);
  s.append(4);
  s.append(2);
  s.append(7);
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK(s.sequence() == std::vector<int>{4, 2, 7});

  auto tail = s.last(2);
  CHECK(std::vector<int>(tail.begin(), tail.end()) == std::vector<int>{2, 7});

  s.keep_last(1);
  CHECK(s.sequence() == std::vector<int>{7});
  CHECK_FALSE(s.contains(4));
  CHECK(s.contains(7));
}

TEST_CASE("counted evaluation returns the objective and ticks once") {
  MaxCoverOracle oracle(path3());
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);

  const int mid[1] = {1};
  CHECK(counted.eval(mid) == 3.0);
  CHECK(ledger.queries == 1);

  CHECK(counted.eval(std::span<const int>()) == 0.0);  // normalized, but still one query
  CHECK(ledger.queries == 2);
}

TEST_CASE("counted evaluation on the size-valued hardness function") {
  AdversarialOracle oracle(64, 2, 3, -1);
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  std::vector<int> ten;
  for (int i = 0; i < 10; ++i) ten.push_back(i);
  CHECK(counted.eval(ten) == 6.0);  // min(|S|, c*k)
  CHECK(ledger.queries == 1);
}

TEST_CASE("cached marginals cost exactly one query") {
  SUBCASE("generic arithmetic") {
    ModularOracle oracle({2.0, 1.0});
    QueryLedger ledger;
    CountedOracle counted(oracle, ledger);
    const int both[2] = {0, 1};
    CHECK(counted.marginal(2.0, both) == 1.0);
    CHECK(ledger.queries == 1);
  }
  SUBCASE("empty base") {
    ModularOracle oracle({4.0});
    QueryLedger ledger;
    CountedOracle counted(oracle, ledger);
    const int only[1] = {0};
    CHECK(counted.marginal(0.0, only) == 4.0);
    CHECK(ledger.queries == 1);
  }
  SUBCASE("coverage on the star") {
    MaxCoverOracle oracle(star4());
    QueryLedger ledger;
    CountedOracle counted(oracle, ledger);
    // base {leaf 1} covers {1, center}; adding leaf 2 covers one more
    const int ab[2] = {1, 2};
    CHECK(counted.marginal(2.0, ab) == 1.0);
    CHECK(ledger.queries == 1);
  }
}

TEST_CASE("query conservation: the ledger equals the number of counted calls") {
  MaxCoverOracle oracle(star4());
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  SplitMix rng(5);

  std::uint64_t calls = 0;
  std::uint64_t refreshes = 0;
  ElementSet base(4);
  for (int step = 0; step < 200; ++step) {
    const int choice = rng.index(4);
    const int elem = rng.index(4);
    if (choice == 0 && !base.contains(elem)) {
      const int delta[1] = {elem};
      counted.peek(delta);
      ++calls;
    } else if (choice == 1 && !base.contains(elem)) {
      const int delta[1] = {elem};
      counted.peek(delta);
      ++calls;
      counted.commit(delta);
      base.append(elem);
    } else if (choice == 2) {
      const int single[1] = {elem};
      counted.eval(single);
      ++calls;
    } else if (choice == 3 && !base.empty()) {
      base.keep_last(base.size() - 1);
      counted.rebase(base.view());
      counted.refresh_value();
      ++refreshes;
    }
  }
  CHECK(ledger.queries == calls);
  CHECK(ledger.refresh_queries == refreshes);
}

TEST_CASE("incremental peeks match stateless evaluation") {
  SplitMix rng(77);
  auto graph = std::make_shared<const GraphInstance>(random_graph(40, 120, 9));
  MaxCoverOracle cover(graph);
  auto rev = std::make_shared<const RevenueInstance>(make_revenue_instance(graph, 21));
  RevenueOracle revenue(rev);

  for (const ValueOracle* oracle : {static_cast<const ValueOracle*>(&cover),
                                    static_cast<const ValueOracle*>(&revenue)}) {
    QueryLedger ledger;
    CountedOracle counted(*oracle, ledger);
    ElementSet base(40);
    for (int step = 0; step < 60; ++step) {
      int e = rng.index(40);
      if (base.contains(e)) continue;
      const int delta[1] = {e};
      std::vector<int> joined(base.sequence());
      joined.push_back(e);
      const double incremental = counted.peek(delta);
      const double fresh = oracle->evaluate(joined);
      CHECK(incremental == doctest::Approx(fresh).epsilon(1e-12));
      if (step % 3 != 0) {
        counted.commit(delta);
        base.append(e);
      }
      if (step % 17 == 0 && !base.empty()) {
        base.keep_last(base.size() / 2);
        counted.rebase(base.view());
      }
    }
  }
}

TEST_CASE("out-of-range elements are rejected as input errors") {
  ModularOracle oracle({1.0, 2.0});
  QueryLedger ledger;
  CountedOracle counted(oracle, ledger);
  const int bad[1] = {2};
  CHECK_THROWS_AS(counted.eval(bad), UsageError);
  const int negative[1] = {-1};
  CHECK_THROWS_AS(counted.peek(negative), UsageError);
}

namespace {

class ShiftedOracle : public ValueOracle {
 public:
  int ground_size() const override { return 3; }
  double evaluate(std::span<const int> set) const override {
    return 1.0 + static_cast<double>(set.size());
  }
};

}  // namespace

TEST_CASE("non-normalized functions are rejected at run setup") {
  ShiftedOracle oracle;
  QueryLedger ledger;
  CHECK_THROWS_AS(CountedOracle(oracle, ledger), UsageError);
}

TEST_CASE("exhaustive optimum") {
  SUBCASE("star coverage at k = 2") {
    MaxCoverOracle oracle(star4());
    const OptResult opt = brute_force_opt(oracle, 2);
    CHECK(opt.value == 4.0);
    CHECK(opt.set.contains(0));  // any optimum includes the center
  }
  SUBCASE("size-valued function: every 3-set is optimal") {
    AdversarialOracle oracle(8, 2, 3, -1);
    const OptResult opt = brute_force_opt(oracle, 3);
    CHECK(opt.value == 3.0);  // k < c*k
    CHECK(opt.set.size() == 3);
  }
  SUBCASE("k = 0 yields the empty set") {
    MaxCoverOracle oracle(star4());
    const OptResult opt = brute_force_opt(oracle, 0);
    CHECK(opt.value == 0.0);
    CHECK(opt.set.empty());
  }
  SUBCASE("refuses ground sets beyond the enumeration cap") {
    std::vector<double> weights(21, 1.0);
    ModularOracle oracle(weights);
    CHECK_THROWS_AS(brute_force_opt(oracle, 2), UsageError);
    CHECK_NOTHROW(brute_force_opt(oracle, 2, 21));
  }
  SUBCASE("additive functions: optimum is the top-k sum") {
    ModularOracle oracle({3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0});
    const OptResult opt = brute_force_opt(oracle, 3);
    CHECK(opt.value == doctest::Approx(9.0 + 6.0 + 5.0));
  }
}
