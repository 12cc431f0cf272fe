#include "dehnlab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dehnlab {

IntegerLattice::IntegerLattice(std::vector<std::vector<std::int64_t>> rows,
                               std::size_t dimension)
    : dim_(dimension) {
  for (const auto& r : rows) {
    if (r.size() != dim_) {
      throw std::invalid_argument("lattice row has wrong dimension");
    }
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim_ && top < rows.size(); ++col) {
    // Euclidean reduction of column col across rows[top..].
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] != 0 &&
            (best == rows.size() ||
             std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) {
        break;  // column is zero below top
      }
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] != 0) {
          std::int64_t q = rows[i][col] / rows[top][col];
          for (std::size_t j = 0; j < dim_; ++j) {
            rows[i][j] -= q * rows[top][j];
          }
          if (rows[i][col] != 0) {
            cleared = false;
          }
        }
      }
      if (cleared) {
        if (rows[top][col] < 0) {
          for (auto& x : rows[top]) {
            x = -x;
          }
        }
        echelon_.push_back(rows[top]);
        pivot_cols_.push_back(col);
        ++top;
        break;
      }
    }
  }
}

bool IntegerLattice::contains(std::vector<std::int64_t> v) const {
  if (v.size() != dim_) {
    throw std::invalid_argument("vector has wrong dimension");
  }
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    std::size_t col = pivot_cols_[r];
    if (v[col] == 0) {
      continue;
    }
    std::int64_t p = echelon_[r][col];
    if (v[col] % p != 0) {
      return false;
    }
    std::int64_t q = v[col] / p;
    for (std::size_t j = 0; j < dim_; ++j) {
      v[j] -= q * echelon_[r][j];
    }
  }
  return std::all_of(v.begin(), v.end(),
                     [](std::int64_t x) { return x == 0; });
}

}  // namespace dehnlab
