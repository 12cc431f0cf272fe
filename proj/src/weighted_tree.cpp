#include "dehnlab/weighted_tree.hpp"

#include <cassert>
#include <stdexcept>

namespace dehnlab {

WeightedTree WeightedTree::with_roots(std::int32_t count) {
  if (count < 1) {
    throw std::invalid_argument("tree needs at least one root");
  }
  WeightedTree t;
  t.roots_ = count;
  for (std::int32_t i = 0; i < count; ++i) {
    t.parent_.push_back(-1);
    t.depth_.push_back(0);
    t.weight_.push_back(1);
    t.fenwick_append(1);
    t.total_weight_ += 1;
  }
  return t;
}

std::int32_t WeightedTree::record_step(std::int32_t chosen,
                                       std::int32_t new_children) {
  assert(chosen >= 0 && chosen < size());
  assert(new_children >= 0);
  weight_[static_cast<std::size_t>(chosen)] += 1;
  fenwick_add(chosen, 1);
  total_weight_ += 1;
  std::int32_t first = -1;
  std::int32_t child_depth = depth_[static_cast<std::size_t>(chosen)] + 1;
  for (std::int32_t c = 0; c < new_children; ++c) {
    auto id = static_cast<std::int32_t>(parent_.size());
    if (first < 0) {
      first = id;
    }
    parent_.push_back(chosen);
    depth_.push_back(child_depth);
    weight_.push_back(1);
    fenwick_append(1);
    total_weight_ += 1;
  }
  if (new_children > 0 && child_depth > height_) {
    height_ = child_depth;
  }
  steps_ += 1;
  children_added_ += new_children;
  assert(total_weight_ == roots_ + steps_ + children_added_);
  return first;
}

std::int32_t WeightedTree::select(Rng& rng) const {
  std::int64_t target =
      static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total_weight_)));
  // Smallest index whose prefix sum exceeds target.
  std::size_t idx = 0;
  std::size_t bit = 1;
  while ((bit << 1) <= fenwick_.size() - 1) {
    bit <<= 1;
  }
  for (; bit != 0; bit >>= 1) {
    std::size_t next = idx + bit;
    if (next < fenwick_.size() && fenwick_[next] <= target) {
      idx = next;
      target -= fenwick_[next];
    }
  }
  assert(idx < parent_.size());
  return static_cast<std::int32_t>(idx);
}

void WeightedTree::fenwick_append(std::int64_t value) {
  if (fenwick_.empty()) {
    fenwick_.push_back(0);  // 1-based sentinel
  }
  // Entry i covers (i - lowbit(i), i]; fill it from existing prefix sums.
  std::size_t i = fenwick_.size();
  std::int64_t acc = value;
  std::size_t low = i & (~i + 1);
  std::size_t from = i - low;  // prefix(i-1) - prefix(from) lives in covered entries
  std::size_t j = i - 1;
  while (j > from) {
    acc += fenwick_[j];
    j -= j & (~j + 1);
  }
  fenwick_.push_back(acc);
}

void WeightedTree::fenwick_add(std::int32_t index, std::int64_t delta) {
  for (std::size_t i = static_cast<std::size_t>(index) + 1; i < fenwick_.size();
       i += i & (~i + 1)) {
    fenwick_[i] += delta;
  }
}

}  // namespace dehnlab
