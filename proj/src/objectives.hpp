#pragma once

#include <cstdint>
#include <memory>

#include "graph.hpp"
#include "oracle.hpp"

namespace submax {

// Coverage objective: f(S) = number of vertices incident with an edge
// that touches S. A vertex with no incident edge contributes nothing,
// even if it is in S.
class MaxCoverOracle : public ValueOracle {
 public:
  explicit MaxCoverOracle(std::shared_ptr<const GraphInstance> graph);

  int ground_size() const override { return graph_->n; }
  double evaluate(std::span<const int> set) const override;
  std::unique_ptr<EvalCache> make_cache() const override;

  const GraphInstance& graph() const { return *graph_; }

 private:
  std::shared_ptr<const GraphInstance> graph_;
};

// Concave-revenue instance: per-node exponent alpha_u drawn once,
// uniformly in the open unit interval, keyed by (seed, u) so the same
// inputs rebuild the same instance anywhere. Edge weights default to 1.
struct RevenueInstance {
  std::shared_ptr<const GraphInstance> graph;
  std::vector<double> alpha;
  double edge_weight = 1.0;
  std::uint64_t seed = 0;
};

RevenueInstance make_revenue_instance(std::shared_ptr<const GraphInstance> graph, std::uint64_t seed);

// f(S) = sum over all nodes u of (total edge weight from u into S)^alpha_u.
class RevenueOracle : public ValueOracle {
 public:
  explicit RevenueOracle(std::shared_ptr<const RevenueInstance> instance);

  int ground_size() const override { return instance_->graph->n; }
  double evaluate(std::span<const int> set) const override;
  std::unique_ptr<EvalCache> make_cache() const override;

  const RevenueInstance& instance() const { return *instance_; }

 private:
  std::shared_ptr<const RevenueInstance> instance_;
};

// Hardness construction: plain variant values a set only by its size,
// f(S) = min(|S|, c*k); the hidden variant additionally jumps to c*k on
// any set containing one secret element. The two are indistinguishable
// except through a query of a set of size < c*k containing the secret.
class AdversarialOracle : public ValueOracle {
 public:
  // hidden = -1 selects the plain variant.
  AdversarialOracle(int n, int c, int k, int hidden);

  int ground_size() const override { return n_; }
  double evaluate(std::span<const int> set) const override;
  std::unique_ptr<EvalCache> make_cache() const override;

  int ceiling() const { return c_ * k_; }
  int hidden() const { return hidden_; }

 private:
  int n_;
  int c_;
  int k_;
  int hidden_;
};

}  // namespace submax
