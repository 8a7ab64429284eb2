#pragma once

#include "lpath/exact.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace lpath {

// Triangular table of Stirling numbers of the second kind, built row by row
// with S(n,k) = k*S(n-1,k) + S(n-1,k-1). Instances are immutable; a larger
// table is produced with extended().
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t max_n);

  std::size_t max_n() const { return rows_.size() - 1; }

  // S(n,k); zero for k > n. Throws std::out_of_range when n > max_n().
  const ExactInt& operator()(std::size_t n, std::size_t k) const;

  StirlingTable extended(std::size_t new_max_n) const;

 private:
  StirlingTable() = default;
  void grow_to(std::size_t max_n);

  std::vector<std::vector<ExactInt>> rows_;  // rows_[n].size() == n + 1
};

// Shared, lazily grown table covering at least rows 0..min_n. The returned
// snapshot is read-only and remains valid after later growth.
std::shared_ptr<const StirlingTable> shared_stirling_table(std::size_t min_n);

ExactInt stirling2(std::size_t n, std::size_t k);

ExactInt factorial(std::size_t n);

// Negative-index poly-Bernoulli number B_{n,k}: the number of n x k lonesum
// matrices, equivalently of acyclic orientations of K_{n,k}.
//   B_{n,k} = sum_{m=0}^{min(n,k)} (m!)^2 S(n+1,m+1) S(k+1,m+1)
ExactInt poly_bernoulli(std::size_t n, std::size_t k);

}  // namespace lpath
