#pragma once

// Orientations of K_{n,k} encoded as n x k 0/1 matrices: entry (i,j) is 1
// when the edge between A_i and B_j points A_i -> B_j and 0 when it points
// B_j -> A_i. An orientation is acyclic exactly when its matrix is lonesum
// (avoids the 2x2 permutation submatrices).

#include "lpath/distribution.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lpath {

class OrientationMatrix {
 public:
  OrientationMatrix() = default;
  OrientationMatrix(std::size_t n, std::size_t k, bool fill = false);

  // One string of '0'/'1' per row; all rows must have equal length.
  static OrientationMatrix from_rows(const std::vector<std::string>& rows);
  // Bit i*k + j of mask is entry (i,j). Requires n*k <= 64.
  static OrientationMatrix from_mask(std::size_t n, std::size_t k, std::uint64_t mask);

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return k_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * k_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) { bits_[i * k_ + j] = value ? 1 : 0; }

  std::size_t row_sum(std::size_t i) const;
  std::size_t col_sum(std::size_t j) const;

  OrientationMatrix permuted(const std::vector<std::size_t>& row_order,
                             const std::vector<std::size_t>& col_order) const;

  std::string row_string(std::size_t i) const;

  bool operator==(const OrientationMatrix&) const = default;
  auto operator<=>(const OrientationMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Matrix text format: a line "n k" followed by n lines of k characters from
// {0,1}. Parse errors throw std::runtime_error.
OrientationMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const OrientationMatrix& m);

// Lonesum test through staircase normalization, O(nk + n log n + k log k).
bool is_lonesum(const OrientationMatrix& m);
// Direct scan for a [[1,0],[0,1]] or [[0,1],[1,0]] submatrix.
bool has_forbidden_minor(const OrientationMatrix& m);

// Kahn topological sort on the n + k vertices; independent of is_lonesum.
bool is_acyclic(const OrientationMatrix& m);

struct StaircaseForm {
  OrientationMatrix matrix;
  std::vector<std::size_t> row_perm;  // matrix row r is original row row_perm[r]
  std::vector<std::size_t> col_perm;
};

// Rows and columns stably sorted by decreasing sum. Throws
// std::invalid_argument for non-lonesum input.
StaircaseForm normalize_staircase(const OrientationMatrix& m);

struct ClassSignature {
  std::size_t m = 0;  // number of nonzero row (= column) classes
  bool has_zero_row = false;
  bool has_zero_col = false;
  bool operator==(const ClassSignature&) const = default;
};

ClassSignature class_signature(const OrientationMatrix& m);

// 2m-1 with no zero line, 2m with exactly one kind, 2m+1 with both.
std::size_t longest_path_via_classes(const OrientationMatrix& m);

// Longest path (in edges) by DP over a topological order. Throws
// std::invalid_argument for a cyclic orientation.
std::size_t longest_path_dag(const OrientationMatrix& m);

// Enumerates all 2^(nk) matrices in ascending mask order, keeps the acyclic
// ones and histograms longest_path_dag. Requires n,k >= 1 and nk <= 20
// (std::length_error otherwise). Work is split by mask prefix over threads.
PathLengthDistribution brute_force_distribution(std::size_t n, std::size_t k,
                                                unsigned threads = 0);

inline constexpr std::size_t kBruteForceMaxEdges = 20;

}  // namespace lpath
