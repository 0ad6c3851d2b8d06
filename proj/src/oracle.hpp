#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "element_set.hpp"

namespace submax {

// Accounting for one algorithm run. `queries` ticks once per oracle
// evaluation, with no bypass path; `refresh_queries` counts the optional
// re-evaluation of a retained buffer after a deletion and is reported
// separately from the main budget. `peak_stored` tracks element
// identities held by the algorithm (buffer, pending block, solution
// under construction), not oracle-internal state. A ledger belongs to
// exactly one run.
struct QueryLedger {
  std::uint64_t queries = 0;
  std::uint64_t refresh_queries = 0;
  std::size_t peak_stored = 0;
  int passes = 0;

  void note_stored(std::size_t count) {
    if (count > peak_stored) peak_stored = count;
  }
};

class EvalCache;

// A monotone, submodular, normalized (f(empty) = 0) set function over
// ground set {0, .., n-1}. Implementations are immutable after
// construction and safe to share across concurrent runs.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual int ground_size() const = 0;

  // Stateless evaluation of an arbitrary set.
  virtual double evaluate(std::span<const int> set) const = 0;

  // Per-run incremental evaluation state; never shared between runs.
  virtual std::unique_ptr<EvalCache> make_cache() const;
};

// Incremental evaluation against a committed base set. peek() answers
// f(base ∪ delta) without mutating the base; commit() folds a previously
// peeked delta in; rebase() rebuilds state for an arbitrary base after a
// deletion. None of these are oracle queries by themselves; counting
// happens in CountedOracle.
class EvalCache {
 public:
  virtual ~EvalCache() = default;
  virtual void reset() = 0;
  virtual double base_value() const = 0;
  virtual std::size_t base_size() const = 0;
  virtual double peek(std::span<const int> delta) = 0;
  virtual void commit(std::span<const int> delta) = 0;
  virtual void rebase(std::span<const int> base) = 0;
};

// Observer of every counted query; used by the hardness experiment to
// detect queries of small sets containing a watched element.
class QueryObserver {
 public:
  virtual ~QueryObserver() = default;
  virtual int watched_element() const = 0;
  virtual void on_query(std::size_t set_size, bool contains_watched) = 0;
};

// Binds an oracle to one run's ledger. Every evaluation an algorithm
// performs flows through here and ticks the ledger exactly once.
// Construction asserts the normalization f(empty) = 0 with an uncounted
// setup evaluation.
class CountedOracle {
 public:
  CountedOracle(const ValueOracle& oracle, QueryLedger& ledger);

  int n() const { return n_; }
  QueryLedger& ledger() { return ledger_; }
  const ValueOracle& oracle() const { return oracle_; }

  // Counted evaluation of an arbitrary set (no incremental state).
  double eval(std::span<const int> set);

  // Counted evaluation minus a caller-cached base value.
  double marginal(double base_value, std::span<const int> set_union);

  // Counted f(base ∪ delta) against the committed base. `delta` must be
  // disjoint from the base.
  double peek(std::span<const int> delta);

  // Base maintenance; not queries.
  void commit(std::span<const int> delta);
  void rebase(std::span<const int> base);
  void reset_base();
  std::size_t base_size() const { return base_size_; }

  // Value of the current base, charged to the refresh counter.
  double refresh_value();

  void set_observer(QueryObserver* observer);

 private:
  void check_indices(std::span<const int> set) const;

  const ValueOracle& oracle_;
  QueryLedger& ledger_;
  std::unique_ptr<EvalCache> cache_;
  std::size_t base_size_ = 0;
  QueryObserver* observer_ = nullptr;
  bool base_has_watched_ = false;
  int n_ = 0;
};

// Additive singleton weights; the simplest monotone submodular function.
class ModularOracle : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> weights);

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  double evaluate(std::span<const int> set) const override;
  std::unique_ptr<EvalCache> make_cache() const override;

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

struct OptResult {
  ElementSet set;
  double value = 0.0;
};

// Exhaustive optimum over all subsets of size at most k. Test oracle
// only; evaluations are uncounted and the ground size is capped to keep
// accidental exponential runs out of the suite.
OptResult brute_force_opt(const ValueOracle& oracle, int k, int enumeration_cap = 20);

}  // namespace submax
