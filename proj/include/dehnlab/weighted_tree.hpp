#ifndef DEHNLAB_WEIGHTED_TREE_HPP_
#define DEHNLAB_WEIGHTED_TREE_HPP_

#include <cstdint>
#include <vector>

#include "dehnlab/rng.hpp"

namespace dehnlab {

// The weighted random tree (or forest) grown alongside the instance
// generators and by the branching-process simulator. One growth step picks
// a vertex with probability weight/total, bumps its weight by one, and
// appends some number of weight-1 children. The recurrence is checked by
// assertions in debug builds; total weight stays roots + steps + children
// exactly.
//
// Selection uses a Fenwick index over vertex weights, so a step costs
// O(log V); the straightforward cumulative scan was too slow for the
// 10^5-step Monte-Carlo runs.
class WeightedTree {
 public:
  static WeightedTree with_roots(std::int32_t count);

  // Bumps the chosen vertex's weight, appends new_children weight-1
  // children, and returns the id of the first new child (or -1 if none).
  std::int32_t record_step(std::int32_t chosen, std::int32_t new_children);

  // A vertex drawn with probability weight(v) / total_weight(). Exact
  // integer sampling, no floating point.
  std::int32_t select(Rng& rng) const;

  std::int32_t size() const { return static_cast<std::int32_t>(parent_.size()); }
  std::int32_t root_count() const { return roots_; }
  std::int32_t height() const { return height_; }
  std::int64_t total_weight() const { return total_weight_; }
  std::int64_t weight(std::int32_t v) const {
    return weight_[static_cast<std::size_t>(v)];
  }
  std::int32_t depth(std::int32_t v) const {
    return depth_[static_cast<std::size_t>(v)];
  }
  std::int32_t parent(std::int32_t v) const {
    return parent_[static_cast<std::size_t>(v)];
  }
  std::int64_t steps() const { return steps_; }
  std::int64_t children_added() const { return children_added_; }

 private:
  void fenwick_append(std::int64_t value);
  void fenwick_add(std::int32_t index, std::int64_t delta);

  std::vector<std::int32_t> parent_;  // -1 for roots
  std::vector<std::int32_t> depth_;
  std::vector<std::int64_t> weight_;
  std::vector<std::int64_t> fenwick_;  // 1-based prefix sums of weight_
  std::int32_t roots_ = 0;
  std::int32_t height_ = 0;
  std::int64_t total_weight_ = 0;
  std::int64_t steps_ = 0;
  std::int64_t children_added_ = 0;
};

}  // namespace dehnlab

#endif  // DEHNLAB_WEIGHTED_TREE_HPP_
