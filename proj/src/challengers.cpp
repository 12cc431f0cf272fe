#include "dehnlab/challengers.hpp"

#include <algorithm>
#include <cassert>
#include <iostream>
#include <stdexcept>

namespace dehnlab {

InsertionDistribution InsertionDistribution::uniform(std::vector<Word> items) {
  std::vector<double> w(items.size(), 1.0);
  return weighted(std::move(items), std::move(w));
}

InsertionDistribution InsertionDistribution::weighted(
    std::vector<Word> items, std::vector<double> weights) {
  if (items.empty()) {
    throw std::invalid_argument("insertion distribution needs support");
  }
  if (items.size() != weights.size()) {
    throw std::invalid_argument("weight count must match item count");
  }
  double total = 0;
  for (double w : weights) {
    if (!(w > 0)) {
      throw std::invalid_argument("weights must be positive");
    }
    total += w;
  }
  InsertionDistribution d;
  d.items_ = std::move(items);
  d.weights_ = std::move(weights);
  d.cumulative_.reserve(d.weights_.size());
  double acc = 0;
  for (double& w : d.weights_) {
    w /= total;
    acc += w;
    d.cumulative_.push_back(acc);
  }
  d.cumulative_.back() = 1.0;
  return d;
}

const Word& InsertionDistribution::sample(Rng& rng) const {
  double u = rng.real();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
  if (idx >= items_.size()) {
    idx = items_.size() - 1;
  }
  return items_[idx];
}

InsertionDistribution identity_distribution(const Presentation& p) {
  return InsertionDistribution::uniform(p.identities);
}

std::vector<Word> materialize_symmetric(const std::vector<Word>& H) {
  std::vector<Word> out;
  for (const auto& h : H) {
    Word r = reduce(h);
    if (r.empty()) {
      std::cerr << "warning: trivial subgroup generator dropped\n";
      continue;
    }
    out.push_back(r);
    out.push_back(invert(r));
  }
  std::sort(out.begin(), out.end(), word_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InsertionDistribution subgroup_distribution(const std::vector<Word>& H) {
  return InsertionDistribution::uniform(materialize_symmetric(H));
}

namespace {

void require_in_alphabet(const Presentation& p, const InsertionDistribution& d) {
  for (const auto& item : d.items()) {
    for (std::size_t i = 0; i < item.size(); ++i) {
      if (item[i].generator() >= p.num_generators) {
        throw std::invalid_argument(
            "insertion distribution uses letters outside the presentation");
      }
    }
  }
}

// The word being grown plus the map from word gaps to tree vertices. Gap p
// of w_i corresponds to one boundary position of the evolving diagram; the
// owning vertex's weight counts exactly its positions, which is what makes
// the uniform position draw realize the weighted-vertex law.
class CoupledWord {
 public:
  CoupledWord(const Word& start, WeightedTree tree)
      : codes_(start.codes()), tree_(std::move(tree)) {
    owners_.resize(codes_.size() + 1);
    for (std::size_t i = 0; i < owners_.size(); ++i) {
      owners_[i] = static_cast<std::int32_t>(
          std::min<std::size_t>(i, static_cast<std::size_t>(tree_.root_count()) - 1));
    }
  }

  std::size_t length() const { return codes_.size(); }
  const WeightedTree& tree() const { return tree_; }
  WeightedTree take_tree() { return std::move(tree_); }

  void insert(std::size_t gap, const Word& u) {
    std::int32_t owner = owners_[gap];
    auto m = u.size();
    assert(m >= 1);  // distributions never carry the empty word
    std::int32_t first_child =
        tree_.record_step(owner, static_cast<std::int32_t>(m) - 1);
    codes_.insert(codes_.begin() + static_cast<long>(gap), u.codes().begin(),
                  u.codes().end());
    // Gap p splits into gaps p and p+m (both the old owner); the m-1
    // interior gaps are the fresh children in order.
    std::vector<std::int32_t> fresh;
    fresh.reserve(m);
    for (std::size_t c = 0; c + 1 < m; ++c) {
      fresh.push_back(first_child + static_cast<std::int32_t>(c));
    }
    fresh.push_back(owner);
    owners_.insert(owners_.begin() + static_cast<long>(gap) + 1, fresh.begin(),
                   fresh.end());
    assert(owners_.size() == codes_.size() + 1);
    assert(tree_.total_weight() ==
           static_cast<std::int64_t>(codes_.size()) + 1);
  }

  Word reduced() const { return reduce(Word(codes_)); }

 private:
  std::vector<std::int8_t> codes_;
  std::vector<std::int32_t> owners_;
  WeightedTree tree_;
};

GeneratedInstance finish(CoupledWord& cw, std::int64_t n,
                         std::vector<std::int64_t> lengths,
                         std::uint64_t seed_label) {
  GeneratedInstance out{cw.reduced(),
                        InstanceTrace{n, cw.tree().height(), std::move(lengths),
                                      seed_label},
                        cw.take_tree()};
  return out;
}

}  // namespace

ITransformResult random_i_transform(const Word& w,
                                    const InsertionDistribution& d, Rng& rng) {
  const Word& u = d.sample(rng);
  std::size_t p = static_cast<std::size_t>(rng.below(w.size() + 1));
  std::vector<std::int8_t> codes(w.codes());
  codes.insert(codes.begin() + static_cast<long>(p), u.codes().begin(),
               u.codes().end());
  return ITransformResult{Word(std::move(codes)), p, u};
}

GeneratedInstance random_equal_word(const Presentation& p, const Word& w,
                                    std::int64_t n,
                                    const InsertionDistribution& d_i, Rng& rng,
                                    std::uint64_t seed_label) {
  require_in_alphabet(p, d_i);
  CoupledWord cw(w, WeightedTree::with_roots(
                        static_cast<std::int32_t>(w.size()) + 1));
  std::vector<std::int64_t> lengths;
  lengths.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const Word& u = d_i.sample(rng);
    std::size_t gap = static_cast<std::size_t>(rng.below(cw.length() + 1));
    cw.insert(gap, u);
    lengths.push_back(static_cast<std::int64_t>(cw.length()));
  }
  return finish(cw, n, std::move(lengths), seed_label);
}

GeneratedInstance random_conjugate(const Presentation& p, const Word& w,
                                   std::int64_t n,
                                   const InsertionDistribution& d_i, Rng& rng,
                                   std::uint64_t seed_label) {
  Word u1 = cyclically_reduce(w);
  if (u1.empty()) {
    throw std::invalid_argument(
        "random_conjugate requires a word that is cyclically nontrivial");
  }
  // Split u1 = w0 . x so the shared first/last boundary position is counted
  // once.
  Word w0(std::vector<std::int8_t>(u1.codes().begin(), u1.codes().end() - 1));
  Word x(std::vector<std::int8_t>{u1.codes().back()});

  GeneratedInstance inner =
      random_equal_word(p, w0, n, d_i, rng, seed_label);
  Word v = cyclically_reduce(inner.word * x);
  Word out;
  if (!v.empty()) {
    std::size_t shift = static_cast<std::size_t>(rng.below(v.size()));
    out = rotate(v, shift);
  }
  return GeneratedInstance{std::move(out), std::move(inner.trace),
                           std::move(inner.tree)};
}

GeneratedInstance random_subgroup_word(const Presentation& p,
                                       const std::vector<Word>& H,
                                       std::int64_t k, std::int64_t n,
                                       const InsertionDistribution& d_i,
                                       const InsertionDistribution& d_h,
                                       Rng& rng, std::uint64_t seed_label) {
  if (k > 0 && H.empty()) {
    throw std::invalid_argument("k > 0 requires subgroup generators");
  }
  Word v;
  for (std::int64_t i = 0; i < k; ++i) {
    v = v * d_h.sample(rng);
  }
  return random_equal_word(p, v, n, d_i, rng, seed_label);
}

GeneratedInstance random_subgroup_word2(const Presentation& p,
                                        const std::vector<Word>& H,
                                        std::int64_t n, double q,
                                        const InsertionDistribution& d_i,
                                        const InsertionDistribution& d_h,
                                        Rng& rng, std::uint64_t seed_label) {
  require_in_alphabet(p, d_i);
  require_in_alphabet(p, d_h);
  if (q < 0.0 || q > 1.0) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
  if (q > 0.0 && H.empty()) {
    throw std::invalid_argument("q > 0 requires subgroup generators");
  }
  CoupledWord cw(Word(), WeightedTree::with_roots(1));
  std::vector<std::int64_t> lengths;
  lengths.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    // q == 0 draws no coin so the stream matches random_equal_word exactly.
    if (q > 0.0 && rng.bernoulli(q)) {
      // Append at the final gap, which the closed-boundary invariant keeps
      // owned by the root: the H-cell hangs off the base vertex.
      const Word& u = d_h.sample(rng);
      cw.insert(cw.length(), u);
    } else {
      const Word& u = d_i.sample(rng);
      std::size_t gap = static_cast<std::size_t>(rng.below(cw.length() + 1));
      cw.insert(gap, u);
    }
    lengths.push_back(static_cast<std::int64_t>(cw.length()));
  }
  return finish(cw, n, std::move(lengths), seed_label);
}

}  // namespace dehnlab
