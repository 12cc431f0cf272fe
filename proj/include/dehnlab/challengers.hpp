#ifndef DEHNLAB_CHALLENGERS_HPP_
#define DEHNLAB_CHALLENGERS_HPP_

#include <cstdint>
#include <vector>

#include "dehnlab/presentation.hpp"
#include "dehnlab/rng.hpp"
#include "dehnlab/weighted_tree.hpp"
#include "dehnlab/word.hpp"

namespace dehnlab {

// A weighted distribution over insertable words: the elementary identities I
// for the I-transformation, or the materialized H^± for subgroup draws.
// Weights are normalized at construction; the default is uniform.
class InsertionDistribution {
 public:
  static InsertionDistribution uniform(std::vector<Word> items);
  static InsertionDistribution weighted(std::vector<Word> items,
                                        std::vector<double> weights);

  const Word& sample(Rng& rng) const;
  const std::vector<Word>& items() const { return items_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<Word> items_;
  std::vector<double> weights_;     // normalized
  std::vector<double> cumulative_;  // running sums, back() == 1
};

// Uniform distribution over the elementary identities of p.
InsertionDistribution identity_distribution(const Presentation& p);

// H union H^-1, freely reduced, deduplicated (trivial generators dropped
// with a warning), uniform weights.
InsertionDistribution subgroup_distribution(const std::vector<Word>& H);
std::vector<Word> materialize_symmetric(const std::vector<Word>& H);

// Provenance of one generated instance.
struct InstanceTrace {
  std::int64_t steps = 0;
  std::int32_t tree_height = 0;
  std::vector<std::int64_t> intermediate_lengths;  // |w_i| per step, unreduced
  std::uint64_t rng_seed = 0;
};

struct GeneratedInstance {
  Word word;
  InstanceTrace trace;
  WeightedTree tree;
};

struct ITransformResult {
  Word word;
  std::size_t position;
  Word inserted;
};

// One random I-transformation: u drawn from d, spliced into w at a uniform
// position of {0..|w|}, no cancellation.
ITransformResult random_i_transform(const Word& w,
                                    const InsertionDistribution& d, Rng& rng);

// n random I-transformations applied to w, freely reduced once at the end.
// The returned tree is the single-root tree for w = empty and the
// (|w|+1)-root forest otherwise; its height bounds the diagram depth of the
// instance.
GeneratedInstance random_equal_word(const Presentation& p, const Word& w,
                                    std::int64_t n,
                                    const InsertionDistribution& d_i, Rng& rng,
                                    std::uint64_t seed_label = 0);

// A uniformly rotated random conjugate of w: cyclically reduce, split off
// the last letter, rewrite the prefix, rotate the cyclic reduction of the
// recombined word. Throws if w cyclically reduces to the empty word.
GeneratedInstance random_conjugate(const Presentation& p, const Word& w,
                                   std::int64_t n,
                                   const InsertionDistribution& d_i, Rng& rng,
                                   std::uint64_t seed_label = 0);

// Concatenates k draws from H^± and rewrites the product.
GeneratedInstance random_subgroup_word(const Presentation& p,
                                       const std::vector<Word>& H,
                                       std::int64_t k, std::int64_t n,
                                       const InsertionDistribution& d_i,
                                       const InsertionDistribution& d_h,
                                       Rng& rng, std::uint64_t seed_label = 0);

// n steps, each appending an H^± draw with probability q (children attach to
// the root) or applying an I-transformation otherwise. q == 0 runs the exact
// same draw sequence as random_equal_word on the empty word.
GeneratedInstance random_subgroup_word2(const Presentation& p,
                                        const std::vector<Word>& H,
                                        std::int64_t n, double q,
                                        const InsertionDistribution& d_i,
                                        const InsertionDistribution& d_h,
                                        Rng& rng, std::uint64_t seed_label = 0);

}  // namespace dehnlab

#endif  // DEHNLAB_CHALLENGERS_HPP_
