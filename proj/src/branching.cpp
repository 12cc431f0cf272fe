#include "dehnlab/branching.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dehnlab {

OffspringDistribution OffspringDistribution::point_mass(std::int32_t value) {
  return weighted({value}, {1.0});
}

OffspringDistribution OffspringDistribution::weighted(
    std::vector<std::int32_t> values, std::vector<double> weights) {
  if (values.empty() || values.size() != weights.size()) {
    throw std::invalid_argument("offspring distribution needs matched support");
  }
  double total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw std::invalid_argument("offspring values must be non-negative");
    }
    if (!(weights[i] > 0)) {
      throw std::invalid_argument("offspring weights must be positive");
    }
    total += weights[i];
  }
  OffspringDistribution d;
  d.values_ = std::move(values);
  d.weights_ = std::move(weights);
  double acc = 0;
  for (std::size_t i = 0; i < d.weights_.size(); ++i) {
    d.weights_[i] /= total;
    acc += d.weights_[i];
    d.cumulative_.push_back(acc);
    d.mean_ += d.values_[i] * d.weights_[i];
  }
  d.cumulative_.back() = 1.0;
  return d;
}

OffspringDistribution OffspringDistribution::from_insertion(
    const InsertionDistribution& d) {
  std::map<std::int32_t, double> by_value;
  for (std::size_t i = 0; i < d.items().size(); ++i) {
    auto nu = static_cast<std::int32_t>(d.items()[i].size()) - 1;
    by_value[nu] += d.weights()[i];
  }
  std::vector<std::int32_t> values;
  std::vector<double> weights;
  for (auto [v, w] : by_value) {
    values.push_back(v);
    weights.push_back(w);
  }
  return weighted(std::move(values), std::move(weights));
}

std::int32_t OffspringDistribution::sample(Rng& rng) const {
  double u = rng.real();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
  if (idx >= values_.size()) {
    idx = values_.size() - 1;
  }
  return values_[idx];
}

double laplace_m(double theta, double offspring_mean) {
  if (!(theta > 1.0)) {
    throw std::domain_error("laplace_m is defined for theta > 1");
  }
  return offspring_mean / (theta - 1.0);
}

double gamma_of(double offspring_mean) {
  if (!(offspring_mean > 0.0)) {
    throw std::domain_error("gamma_of requires a positive offspring mean");
  }
  double target = 1.0 / offspring_mean;
  auto f = [&](double a) { return a * std::exp(a + 1.0) - target; };
  double lo = 1e-12;
  double hi = 1.0;
  while (f(hi) < 0) {  // only reached for EM < e^-2
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  double g = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {  // Newton polish
    double e = std::exp(g + 1.0);
    g -= (g * e - target) / (e * (1.0 + g));
  }
  return g;
}

CmjConstants constants_of(double offspring_mean) {
  CmjConstants c;
  c.alpha = offspring_mean + 1.0;
  c.gamma = gamma_of(offspring_mean);
  c.height_constant = 1.0 / (c.alpha * c.gamma);
  if (!(c.height_constant < std::exp(2.0))) {
    throw std::logic_error("height constant escaped the e^2 bound");
  }
  return c;
}

WeightedTree grow_tree(const OffspringDistribution& m, std::int64_t n,
                       Rng& rng) {
  return grow_forest(m, 1, n, rng);
}

WeightedTree grow_forest(const OffspringDistribution& m, std::int32_t roots,
                         std::int64_t n, Rng& rng) {
  WeightedTree t = WeightedTree::with_roots(roots);
  for (std::int64_t i = 0; i < n; ++i) {
    std::int32_t v = t.select(rng);
    std::int32_t nu = m.sample(rng);
    t.record_step(v, nu);
  }
  return t;
}

std::pair<WeightedTree, WeightedTree> grow_msp_pair(
    const OffspringDistribution& m_i, const OffspringDistribution& m_h,
    double q, std::int64_t n, Rng& rng) {
  if (q < 0.0 || q > 1.0) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
  WeightedTree t = WeightedTree::with_roots(1);
  WeightedTree t_prime = WeightedTree::with_roots(1);
  for (std::int64_t i = 0; i < n; ++i) {
    bool h_branch = (q > 0.0) && rng.bernoulli(q);
    std::int32_t nu = h_branch ? m_h.sample(rng) : m_i.sample(rng);
    std::int32_t chosen = h_branch ? 0 : t.select(rng);
    t.record_step(chosen, nu);
    t_prime.record_step(t_prime.select(rng), nu);
  }
  return {std::move(t), std::move(t_prime)};
}

HeightRatioSummary estimate_height_ratio(const OffspringDistribution& m,
                                         std::int64_t n, int trials,
                                         Rng& rng) {
  if (n < 2) {
    throw std::invalid_argument("need n >= 2 for a positive ln n");
  }
  if (trials < 1) {
    throw std::invalid_argument("need at least one trial");
  }
  HeightRatioSummary s;
  s.heights.reserve(static_cast<std::size_t>(trials));
  double log_n = std::log(static_cast<double>(n));
  double sum = 0;
  double sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    Rng trial_rng(rng.next());
    WeightedTree tree = grow_tree(m, n, trial_rng);
    s.heights.push_back(tree.height());
    double ratio = tree.height() / log_n;
    sum += ratio;
    sum_sq += ratio * ratio;
  }
  s.mean = sum / trials;
  s.stddev = std::sqrt(std::max(0.0, sum_sq / trials - s.mean * s.mean));
  return s;
}

double empirical_height_cdf(const std::vector<std::int32_t>& heights,
                            double x) {
  if (heights.empty()) {
    throw std::invalid_argument("empirical CDF of an empty sample");
  }
  std::size_t count = 0;
  for (std::int32_t h : heights) {
    if (h <= x) {
      ++count;
    }
  }
  return static_cast<double>(count) / static_cast<double>(heights.size());
}

}  // namespace dehnlab
