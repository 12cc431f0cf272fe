#ifndef DEHNLAB_BRANCHING_HPP_
#define DEHNLAB_BRANCHING_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "dehnlab/challengers.hpp"
#include "dehnlab/rng.hpp"
#include "dehnlab/weighted_tree.hpp"

namespace dehnlab {

// Finite-support distribution of the per-step child count nu = eta - 1,
// where eta is the length of the inserted word.
class OffspringDistribution {
 public:
  static OffspringDistribution point_mass(std::int32_t value);
  static OffspringDistribution weighted(std::vector<std::int32_t> values,
                                        std::vector<double> weights);
  // The length law of an insertion distribution, shifted down by one.
  static OffspringDistribution from_insertion(const InsertionDistribution& d);

  std::int32_t sample(Rng& rng) const;
  double mean() const { return mean_; }
  const std::vector<std::int32_t>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<std::int32_t> values_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
  double mean_ = 0;
};

// Process constants of the embedded branching process with offspring mean
// EM: Malthusian parameter alpha = EM + 1, gamma the root of
// a e^{a+1} = 1/EM, and the almost-sure height slope 1/(alpha gamma) < e^2.
struct CmjConstants {
  double alpha = 0;
  double gamma = 0;
  double height_constant = 0;  // 1 / (alpha * gamma)
};

// Laplace transform of the intensity measure: EM / (theta - 1) for
// theta > 1. Throws std::domain_error otherwise.
double laplace_m(double theta, double offspring_mean);

// The unique positive root of a e^{a+1} = 1/EM, bracketed bisection plus a
// Newton polish; absolute tolerance 1e-12. Throws for EM <= 0.
double gamma_of(double offspring_mean);

CmjConstants constants_of(double offspring_mean);

// n steps of the weighted-attachment process from a single root.
WeightedTree grow_tree(const OffspringDistribution& m, std::int64_t n,
                       Rng& rng);

// The same process seeded with several roots (the forest the equivalence
// generator induces).
WeightedTree grow_forest(const OffspringDistribution& m, std::int32_t roots,
                         std::int64_t n, Rng& rng);

// The coupled pair for the membership dominance check: T routes the H-branch
// to the root, T' uses the weighted choice for every step; both see the same
// coin flips and child counts.
std::pair<WeightedTree, WeightedTree> grow_msp_pair(
    const OffspringDistribution& m_i, const OffspringDistribution& m_h,
    double q, std::int64_t n, Rng& rng);

struct HeightRatioSummary {
  double mean = 0;
  double stddev = 0;
  std::vector<std::int32_t> heights;
};

// Monte-Carlo mean and stddev of h(T_n) / ln n over independent trees.
HeightRatioSummary estimate_height_ratio(const OffspringDistribution& m,
                                         std::int64_t n, int trials, Rng& rng);

// Fraction of recorded heights <= x. Throws on an empty sample.
double empirical_height_cdf(const std::vector<std::int32_t>& heights,
                            double x);

}  // namespace dehnlab

#endif  // DEHNLAB_BRANCHING_HPP_
