#pragma once

// Exactly uniform sampling of acyclic orientations of K_{n,k}.
//
// A lonesum matrix is pinned down by: the number m of nonzero classes, a
// partition of the rows plus a sentinel row into m+1 blocks, the same for
// the columns plus a sentinel column, and an order of the m nonzero row
// classes and of the m nonzero column classes. Sampling each piece uniformly
// with big-integer weights gives a uniform orientation.

#include "lpath/distribution.hpp"
#include "lpath/orientation.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace lpath {

class RandomState {
 public:
  explicit RandomState(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound must be positive. Rejection sampling, no
  // modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound);
  ExactInt uniform_below(const ExactInt& bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// block_of[i] is the block of item i. Blocks are labelled 0,1,2,... in order
// of their smallest item.
struct SetPartition {
  std::size_t blocks = 0;
  std::vector<std::size_t> block_of;
  bool operator==(const SetPartition&) const = default;
};

// Returns m with probability (m!)^2 S(n+1,m+1) S(k+1,m+1) / B_{n,k}.
std::size_t sample_class_count(std::size_t n, std::size_t k, RandomState& rng);

// Uniform over the S(items, blocks) partitions of {0..items-1}. Throws
// std::invalid_argument unless 1 <= blocks <= items.
SetPartition sample_partition(std::size_t items, std::size_t blocks, RandomState& rng);

// Uniform permutation of 0..size-1 (Fisher-Yates).
std::vector<std::size_t> sample_permutation(std::size_t size, RandomState& rng);

// Builds the lonesum matrix for one decoding tuple. row_blocks partitions
// n+1 items and col_blocks k+1 items, each into m+1 blocks; the block holding
// the last (sentinel) item is the zero class. The remaining blocks, taken in
// label order, get ranks row_ranks[i] + 1 (a permutation of 0..m-1); rank 1
// is the class with the largest sum. Entry (r,c) is 1 iff both classes are
// nonzero and rank(r) + rank(c) <= m + 1.
OrientationMatrix decode_orientation(std::size_t n, std::size_t k, std::size_t m,
                                     const SetPartition& row_blocks, const SetPartition& col_blocks,
                                     const std::vector<std::size_t>& row_ranks,
                                     const std::vector<std::size_t>& col_ranks);

OrientationMatrix sample_orientation(std::size_t n, std::size_t k, RandomState& rng);

struct EmpiricalDistribution {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint64_t> counts;  // same indexing as PathLengthDistribution
  std::uint64_t samples = 0;

  std::vector<double> proportions() const;
};

// Histogram of longest_path_dag over num_samples iid uniform orientations.
// visit, when set, sees every sampled matrix in order.
EmpiricalDistribution empirical_distribution(
    std::size_t n, std::size_t k, std::uint64_t num_samples, RandomState& rng,
    const std::function<void(const OrientationMatrix&)>& visit = {});

// sum_l |empirical_l - exact_l| / 2
double total_variation(const EmpiricalDistribution& empirical, const PathLengthDistribution& exact);
// sup over l of |empirical CDF - exact CDF|
double kolmogorov_distance(const EmpiricalDistribution& empirical,
                           const PathLengthDistribution& exact);

}  // namespace lpath
