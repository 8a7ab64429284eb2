#pragma once

// Exact distribution of the longest directed path length in a uniformly
// random acyclic orientation of K_{n,k}.
//
// A lonesum matrix with m nonzero row/column classes has longest path
// 2m-1, 2m or 2m+1 depending on whether it has no zero line, exactly one
// kind of zero line (row or column), or both. The class counts below split
// the lonesum matrices with m nonzero classes by which zero lines are
// allowed, and inclusion-exclusion turns them into counts per path length.

#include "lpath/exact.hpp"

#include <cstddef>
#include <vector>

namespace lpath {

// (m!)^2 S(n+1,m+1) S(k+1,m+1): zero rows and zero columns allowed.
ExactInt class_count_b(std::size_t n, std::size_t k, std::size_t m);
// (m!)^2 S(n+1,m+1) S(k,m): zero rows allowed, no zero column.
ExactInt class_count_c(std::size_t n, std::size_t k, std::size_t m);
// (m!)^2 S(n,m) S(k,m): no zero row and no zero column.
ExactInt class_count_d(std::size_t n, std::size_t k, std::size_t m);

struct PathLengthDistribution {
  std::size_t n = 0;
  std::size_t k = 0;
  // counts[l] = number of acyclic orientations with longest path l, for
  // l = 0 .. 2*min(n,k)-1 when n == k, up to 2*min(n,k) otherwise. Slot 0 is
  // kept so that index == length.
  std::vector<ExactInt> counts;
  ExactInt total;

  std::size_t max_length() const { return counts.empty() ? 0 : counts.size() - 1; }
  bool operator==(const PathLengthDistribution&) const = default;
};

// Requires n, k >= 1; throws std::invalid_argument otherwise. (K_{0,k} has a
// single, edgeless orientation whose longest path is 0; callers handle it.)
PathLengthDistribution longest_path_counts(std::size_t n, std::size_t k);

struct ProbabilityGeneratingPolynomial {
  std::vector<ExactRational> coefficients;  // coefficients[l] = P(X = l)

  ExactRational evaluate(const ExactRational& u) const;
  double evaluate(double u) const;
  ExactRational derivative_at_one() const;         // p'(1)
  ExactRational second_derivative_at_one() const;  // p''(1)
};

ProbabilityGeneratingPolynomial pgf(const PathLengthDistribution& dist);
ProbabilityGeneratingPolynomial pgf(std::size_t n, std::size_t k);

struct ExactMoments {
  ExactRational mean;
  ExactRational variance;
};

// mean = p'(1), variance = p''(1) + p'(1) - p'(1)^2.
ExactMoments moments(const ProbabilityGeneratingPolynomial& p);
ExactMoments moments(const PathLengthDistribution& dist);

ExactRational mean_exact(std::size_t n, std::size_t k);
ExactRational variance_exact(std::size_t n, std::size_t k);

// P(|X - mean| > t), exactly.
ExactRational tail_probability(const PathLengthDistribution& dist, const ExactRational& t);

}  // namespace lpath
