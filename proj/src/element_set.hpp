#pragma once

#include <cassert>
#include <span>
#include <vector>

namespace submax {

// Ordered set of distinct ground-set elements. Insertion order is part of
// the contract: the streaming algorithms reason about "most recently
// added" and the finalization step partitions by recency.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : member_(static_cast<std::size_t>(universe), false) {}

  std::size_t size() const { return sequence_.size(); }
  bool empty() const { return sequence_.empty(); }

  bool contains(int e) const {
    const auto idx = static_cast<std::size_t>(e);
    return idx < member_.size() && member_[idx];
  }

  void append(int e) {
    grow_to(e);
    assert(!member_[static_cast<std::size_t>(e)]);
    member_[static_cast<std::size_t>(e)] = true;
    sequence_.push_back(e);
  }

  void append(std::span<const int> block) {
    for (int e : block) append(e);
  }

  // Keeps only the `count` most recently added elements.
  void keep_last(std::size_t count) {
    if (count >= sequence_.size()) return;
    const std::size_t drop = sequence_.size() - count;
    for (std::size_t i = 0; i < drop; ++i) member_[static_cast<std::size_t>(sequence_[i])] = false;
    sequence_.erase(sequence_.begin(), sequence_.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  void clear() {
    for (int e : sequence_) member_[static_cast<std::size_t>(e)] = false;
    sequence_.clear();
  }

  // View of the `count` most recently added elements, oldest first.
  std::span<const int> last(std::size_t count) const {
    if (count > sequence_.size()) count = sequence_.size();
    return std::span<const int>(sequence_).subspan(sequence_.size() - count);
  }

  std::span<const int> view() const { return sequence_; }
  const std::vector<int>& sequence() const { return sequence_; }

  int operator[](std::size_t i) const { return sequence_[i]; }

 private:
  void grow_to(int e) {
    const auto need = static_cast<std::size_t>(e) + 1;
    if (member_.size() < need) member_.resize(need, false);
  }

  std::vector<int> sequence_;
  std::vector<bool> member_;
};

}  // namespace submax
