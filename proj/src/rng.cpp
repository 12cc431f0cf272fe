#include "dehnlab/rng.hpp"

#include <cmath>

namespace dehnlab {

double Rng::exponential(double lambda) {
  // Inverse CDF; 1 - real() is in (0, 1], so the log argument never hits 0.
  return -std::log(1.0 - real()) / lambda;
}

std::uint64_t Rng::derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace dehnlab
