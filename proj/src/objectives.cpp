#include "objectives.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "rng.hpp"

namespace submax {

MaxCoverOracle::MaxCoverOracle(std::shared_ptr<const GraphInstance> graph) : graph_(std::move(graph)) {}

double MaxCoverOracle::evaluate(std::span<const int> set) const {
  // Collect-and-dedupe keeps this linear in the touched degree sum
  // instead of the ground size.
  std::vector<int> covered;
  const auto& adj = graph_->adjacency;
  for (int u : set) {
    const auto& nbrs = adj[static_cast<std::size_t>(u)];
    if (nbrs.empty()) continue;
    covered.push_back(u);
    covered.insert(covered.end(), nbrs.begin(), nbrs.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  return static_cast<double>(covered.size());
}

namespace {

class MaxCoverEvalCache : public EvalCache {
 public:
  explicit MaxCoverEvalCache(const GraphInstance& graph)
      : graph_(graph), covered_(static_cast<std::size_t>(graph.n), 0) {}

  void reset() override {
    std::fill(covered_.begin(), covered_.end(), 0);
    count_ = 0;
    size_ = 0;
  }

  double base_value() const override { return static_cast<double>(count_); }
  std::size_t base_size() const override { return size_; }

  double peek(std::span<const int> delta) override {
    std::size_t newly = 0;
    touched_.clear();
    for (int u : delta) newly += mark_tentative(u);
    for (int w : touched_) covered_[static_cast<std::size_t>(w)] = 0;
    return static_cast<double>(count_ + newly);
  }

  void commit(std::span<const int> delta) override {
    for (int u : delta) count_ += mark_permanent(u);
    size_ += delta.size();
  }

  void rebase(std::span<const int> base) override {
    reset();
    commit(base);
  }

 private:
  std::size_t mark_tentative(int u) {
    const auto& nbrs = graph_.adjacency[static_cast<std::size_t>(u)];
    if (nbrs.empty()) return 0;
    std::size_t newly = touch(u);
    for (int w : nbrs) newly += touch(w);
    return newly;
  }

  std::size_t touch(int w) {
    auto& mark = covered_[static_cast<std::size_t>(w)];
    if (mark != 0) return 0;
    mark = 2;  // tentative
    touched_.push_back(w);
    return 1;
  }

  std::size_t mark_permanent(int u) {
    const auto& nbrs = graph_.adjacency[static_cast<std::size_t>(u)];
    if (nbrs.empty()) return 0;
    std::size_t newly = 0;
    auto set_mark = [&](int w) {
      auto& mark = covered_[static_cast<std::size_t>(w)];
      if (mark != 1) {
        mark = 1;
        ++newly;
      }
    };
    set_mark(u);
    for (int w : nbrs) set_mark(w);
    return newly;
  }

  const GraphInstance& graph_;
  std::vector<char> covered_;
  std::vector<int> touched_;
  std::size_t count_ = 0;
  std::size_t size_ = 0;
};

}  // namespace

std::unique_ptr<EvalCache> MaxCoverOracle::make_cache() const {
  return std::make_unique<MaxCoverEvalCache>(*graph_);
}

RevenueInstance make_revenue_instance(std::shared_ptr<const GraphInstance> graph, std::uint64_t seed) {
  if (!graph || graph->n == 0) throw UsageError("revenue instance requires a nonempty graph");
  RevenueInstance inst;
  inst.graph = std::move(graph);
  inst.seed = seed;
  inst.alpha.resize(static_cast<std::size_t>(inst.graph->n));
  for (int u = 0; u < inst.graph->n; ++u) {
    inst.alpha[static_cast<std::size_t>(u)] = unit_open(keyed_bits(seed, static_cast<std::uint64_t>(u)));
  }
  return inst;
}

RevenueOracle::RevenueOracle(std::shared_ptr<const RevenueInstance> instance) : instance_(std::move(instance)) {}

double RevenueOracle::evaluate(std::span<const int> set) const {
  const auto& g = *instance_->graph;
  const double w = instance_->edge_weight;
  // Scratch per thread: repeated fresh evaluations must not pay a
  // ground-size allocation each call.
  thread_local std::vector<double> sums;
  thread_local std::vector<int> touched;
  if (sums.size() < static_cast<std::size_t>(g.n)) sums.assign(static_cast<std::size_t>(g.n), 0.0);
  touched.clear();

  for (int v : set) {
    for (int u : g.adjacency[static_cast<std::size_t>(v)]) {
      if (sums[static_cast<std::size_t>(u)] == 0.0) touched.push_back(u);
      sums[static_cast<std::size_t>(u)] += w;
    }
  }
  double total = 0.0;
  for (int u : touched) {
    total += std::pow(sums[static_cast<std::size_t>(u)], instance_->alpha[static_cast<std::size_t>(u)]);
    sums[static_cast<std::size_t>(u)] = 0.0;
  }
  return total;
}

namespace {

class RevenueEvalCache : public EvalCache {
 public:
  explicit RevenueEvalCache(const RevenueInstance& inst)
      : inst_(inst), sums_(static_cast<std::size_t>(inst.graph->n), 0.0) {}

  void reset() override {
    std::fill(sums_.begin(), sums_.end(), 0.0);
    total_ = 0.0;
    size_ = 0;
  }

  double base_value() const override { return total_; }
  std::size_t base_size() const override { return size_; }

  double peek(std::span<const int> delta) override { return total_ + gain(delta, false); }

  void commit(std::span<const int> delta) override {
    total_ += gain(delta, true);
    size_ += delta.size();
  }

  void rebase(std::span<const int> base) override {
    reset();
    commit(base);
  }

 private:
  // Accumulates the revenue change from adding delta on top of the base
  // weight sums; applies it when requested.
  double gain(std::span<const int> delta, bool apply) {
    const auto& g = *inst_.graph;
    const double w = inst_.edge_weight;
    added_.clear();
    touched_.clear();
    for (int v : delta) {
      for (int u : g.adjacency[static_cast<std::size_t>(v)]) {
        const auto iu = static_cast<std::size_t>(u);
        if (added_.size() <= iu) added_.resize(static_cast<std::size_t>(g.n), 0.0);
        if (added_[iu] == 0.0) touched_.push_back(u);
        added_[iu] += w;
      }
    }
    double d = 0.0;
    for (int u : touched_) {
      const auto iu = static_cast<std::size_t>(u);
      const double before = sums_[iu];
      const double after = before + added_[iu];
      const double a = inst_.alpha[iu];
      d += std::pow(after, a) - (before == 0.0 ? 0.0 : std::pow(before, a));
      if (apply) sums_[iu] = after;
      added_[iu] = 0.0;
    }
    return d;
  }

  const RevenueInstance& inst_;
  std::vector<double> sums_;
  std::vector<double> added_;
  std::vector<int> touched_;
  double total_ = 0.0;
  std::size_t size_ = 0;
};

}  // namespace

std::unique_ptr<EvalCache> RevenueOracle::make_cache() const {
  return std::make_unique<RevenueEvalCache>(*instance_);
}

AdversarialOracle::AdversarialOracle(int n, int c, int k, int hidden)
    : n_(n), c_(c), k_(k), hidden_(hidden) {
  if (n < 1) throw UsageError("adversarial instance requires n >= 1");
  if (c < 2) throw UsageError("adversarial instance requires c >= 2");
  if (k < 1) throw UsageError("adversarial instance requires k >= 1");
  if (hidden >= n) throw UsageError("hidden element outside ground set");
}

double AdversarialOracle::evaluate(std::span<const int> set) const {
  const double cap = static_cast<double>(c_) * k_;
  if (hidden_ >= 0 && std::find(set.begin(), set.end(), hidden_) != set.end()) return cap;
  return std::min(static_cast<double>(set.size()), cap);
}

namespace {

class AdversarialEvalCache : public EvalCache {
 public:
  AdversarialEvalCache(int hidden, double cap) : hidden_(hidden), cap_(cap) {}

  void reset() override {
    size_ = 0;
    has_hidden_ = false;
  }

  double base_value() const override { return value_of(size_, has_hidden_); }
  std::size_t base_size() const override { return size_; }

  double peek(std::span<const int> delta) override {
    bool hit = has_hidden_;
    if (!hit && hidden_ >= 0) hit = std::find(delta.begin(), delta.end(), hidden_) != delta.end();
    return value_of(size_ + delta.size(), hit);
  }

  void commit(std::span<const int> delta) override {
    if (!has_hidden_ && hidden_ >= 0) {
      has_hidden_ = std::find(delta.begin(), delta.end(), hidden_) != delta.end();
    }
    size_ += delta.size();
  }

  void rebase(std::span<const int> base) override {
    reset();
    commit(base);
  }

 private:
  double value_of(std::size_t size, bool hit) const {
    if (hit) return cap_;
    return std::min(static_cast<double>(size), cap_);
  }

  int hidden_;
  double cap_;
  std::size_t size_ = 0;
  bool has_hidden_ = false;
};

}  // namespace

std::unique_ptr<EvalCache> AdversarialOracle::make_cache() const {
  return std::make_unique<AdversarialEvalCache>(hidden_, static_cast<double>(c_) * k_);
}

}  // namespace submax
