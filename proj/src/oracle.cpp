#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace submax {

namespace {

// Fallback incremental state for oracles without a specialized cache:
// materializes base ∪ delta and evaluates from scratch.
class GenericEvalCache : public EvalCache {
 public:
  explicit GenericEvalCache(const ValueOracle& oracle) : oracle_(oracle) {}

  void reset() override {
    base_.clear();
    value_ = 0.0;
  }

  double base_value() const override { return value_; }
  std::size_t base_size() const override { return base_.size(); }

  double peek(std::span<const int> delta) override {
    scratch_.assign(base_.begin(), base_.end());
    scratch_.insert(scratch_.end(), delta.begin(), delta.end());
    return oracle_.evaluate(scratch_);
  }

  void commit(std::span<const int> delta) override {
    base_.insert(base_.end(), delta.begin(), delta.end());
    value_ = oracle_.evaluate(base_);
  }

  void rebase(std::span<const int> base) override {
    base_.assign(base.begin(), base.end());
    value_ = oracle_.evaluate(base_);
  }

 private:
  const ValueOracle& oracle_;
  std::vector<int> base_;
  std::vector<int> scratch_;
  double value_ = 0.0;
};

}  // namespace

std::unique_ptr<EvalCache> ValueOracle::make_cache() const {
  return std::make_unique<GenericEvalCache>(*this);
}

CountedOracle::CountedOracle(const ValueOracle& oracle, QueryLedger& ledger)
    : oracle_(oracle), ledger_(ledger), cache_(oracle.make_cache()), n_(oracle.ground_size()) {
  // Setup evaluation, uncounted: the streaming budgets leave no room for
  // querying the empty set at run time.
  const double empty = oracle_.evaluate(std::span<const int>());
  if (empty != 0.0) throw UsageError("oracle is not normalized: f(empty) = " + std::to_string(empty));
  cache_->reset();
}

void CountedOracle::check_indices(std::span<const int> set) const {
  for (int e : set) {
    if (e < 0 || e >= n_) {
      throw UsageError("element index " + std::to_string(e) + " outside ground set of size " +
                       std::to_string(n_));
    }
  }
}

double CountedOracle::eval(std::span<const int> set) {
  check_indices(set);
  ++ledger_.queries;
  if (observer_ != nullptr) {
    const int watched = observer_->watched_element();
    const bool hit = std::find(set.begin(), set.end(), watched) != set.end();
    observer_->on_query(set.size(), hit);
  }
  return oracle_.evaluate(set);
}

double CountedOracle::marginal(double base_value, std::span<const int> set_union) {
  return eval(set_union) - base_value;
}

double CountedOracle::peek(std::span<const int> delta) {
  check_indices(delta);
  ++ledger_.queries;
  ledger_.note_stored(base_size_ + delta.size());
  if (observer_ != nullptr) {
    const int watched = observer_->watched_element();
    bool hit = base_has_watched_;
    if (!hit) hit = std::find(delta.begin(), delta.end(), watched) != delta.end();
    observer_->on_query(base_size_ + delta.size(), hit);
  }
  return cache_->peek(delta);
}

void CountedOracle::commit(std::span<const int> delta) {
  cache_->commit(delta);
  base_size_ += delta.size();
  if (observer_ != nullptr && !base_has_watched_) {
    const int watched = observer_->watched_element();
    base_has_watched_ = std::find(delta.begin(), delta.end(), watched) != delta.end();
  }
}

void CountedOracle::rebase(std::span<const int> base) {
  cache_->rebase(base);
  base_size_ = base.size();
  if (observer_ != nullptr) {
    const int watched = observer_->watched_element();
    base_has_watched_ = std::find(base.begin(), base.end(), watched) != base.end();
  }
}

void CountedOracle::reset_base() {
  cache_->reset();
  base_size_ = 0;
  base_has_watched_ = false;
}

double CountedOracle::refresh_value() {
  ++ledger_.refresh_queries;
  return cache_->base_value();
}

void CountedOracle::set_observer(QueryObserver* observer) {
  observer_ = observer;
  base_has_watched_ = false;
}

namespace {

class ModularEvalCache : public EvalCache {
 public:
  explicit ModularEvalCache(const std::vector<double>& weights) : weights_(weights) {}

  void reset() override {
    sum_ = 0.0;
    count_ = 0;
  }
  double base_value() const override { return sum_; }
  std::size_t base_size() const override { return count_; }

  double peek(std::span<const int> delta) override {
    double s = sum_;
    for (int e : delta) s += weights_[static_cast<std::size_t>(e)];
    return s;
  }

  void commit(std::span<const int> delta) override {
    sum_ = peek(delta);
    count_ += delta.size();
  }

  void rebase(std::span<const int> base) override {
    reset();
    commit(base);
  }

 private:
  const std::vector<double>& weights_;
  double sum_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace

ModularOracle::ModularOracle(std::vector<double> weights) : weights_(std::move(weights)) {}

double ModularOracle::evaluate(std::span<const int> set) const {
  double s = 0.0;
  for (int e : set) s += weights_[static_cast<std::size_t>(e)];
  return s;
}

std::unique_ptr<EvalCache> ModularOracle::make_cache() const {
  return std::make_unique<ModularEvalCache>(weights_);
}

OptResult brute_force_opt(const ValueOracle& oracle, int k, int enumeration_cap) {
  const int n = oracle.ground_size();
  if (n > enumeration_cap) {
    throw UsageError("brute force refused: ground set of " + std::to_string(n) +
                     " exceeds enumeration cap " + std::to_string(enumeration_cap));
  }
  if (k < 0) throw UsageError("negative cardinality constraint");

  OptResult best;
  best.set = ElementSet(n);
  best.value = oracle.evaluate(std::span<const int>());

  const int limit = std::min(k, n);
  std::vector<int> combo;
  for (int size = 1; size <= limit; ++size) {
    combo.assign(static_cast<std::size_t>(size), 0);
    for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
      const double value = oracle.evaluate(combo);
      if (value > best.value) {
        best.value = value;
        best.set = ElementSet(n);
        for (int e : combo) best.set.append(e);
      }
      // next combination in lexicographic order
      int pos = size - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) {
        combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
  return best;
}

}  // namespace submax
