#pragma once

#include <cstdint>
#include <string>

#include "element_set.hpp"

namespace submax {

// One experiment row; field order here is the CSV column order.
struct RunMetrics {
  std::string algorithm;
  int n = 0;
  int k = 0;
  int c = 0;
  double eps = 0.0;
  double objective_value = 0.0;
  std::uint64_t queries = 0;
  std::uint64_t refresh_queries = 0;
  std::size_t peak_stored = 0;
  int passes = 0;
  double wall_ms = 0.0;
};

// Run-internal observations that are not part of the CSV schema.
struct RunDiagnostics {
  std::uint64_t monotone_violations = 0;
  int boost_rounds = 0;      // threshold rounds of the booster, when one ran
  double boost_alpha = 0.0;  // feed ratio handed to the booster
  double feed_value = 0.0;   // value of the feed solution in compositions
};

struct RunResult {
  ElementSet solution;
  double value = 0.0;
  RunMetrics metrics;
  RunDiagnostics diag;
};

}  // namespace submax
