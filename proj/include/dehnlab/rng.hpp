#ifndef DEHNLAB_RNG_HPP_
#define DEHNLAB_RNG_HPP_

#include <cassert>
#include <cstdint>

namespace dehnlab {

// SplitMix64 generator. Small state, splittable by construction: every
// consumer derives an independent stream from (master seed, stream index)
// via derive_seed, which is the scheme the experiment harness documents
// for per-trial reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) {
      x = next();
    }
    return x % n;
  }

  // Uniform double in [0, 1).
  double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real() < p; }

  // Exponential with rate lambda > 0.
  double exponential(double lambda);

  // Per-stream seed derivation: stream i of a master seed gets
  // mix(master + (i + 1) * golden_gamma). Documented contract: identical
  // (master, stream) pairs always yield identical streams.
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

}  // namespace dehnlab

#endif  // DEHNLAB_RNG_HPP_
