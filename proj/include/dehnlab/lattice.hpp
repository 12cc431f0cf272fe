#ifndef DEHNLAB_LATTICE_HPP_
#define DEHNLAB_LATTICE_HPP_

#include <cstdint>
#include <vector>

namespace dehnlab {

// Membership test for integer lattices given by spanning rows, via row
// echelon reduction over the integers. Used for abelianization checks:
// exact on abelianized models, and a sound necessary condition everywhere.
class IntegerLattice {
 public:
  IntegerLattice(std::vector<std::vector<std::int64_t>> rows,
                 std::size_t dimension);

  bool contains(std::vector<std::int64_t> v) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<std::int64_t>> echelon_;  // pivot rows, ascending col
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace dehnlab

#endif  // DEHNLAB_LATTICE_HPP_
