#include "lpath/orientation.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lpath {

OrientationMatrix::OrientationMatrix(std::size_t n, std::size_t k, bool fill)
    : n_(n), k_(k), bits_(n * k, fill ? 1 : 0) {}

OrientationMatrix OrientationMatrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t k = rows.empty() ? 0 : rows.front().size();
  OrientationMatrix m(rows.size(), k);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != k) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < k; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw std::invalid_argument("matrix entries must be 0 or 1");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

OrientationMatrix OrientationMatrix::from_mask(std::size_t n, std::size_t k, std::uint64_t mask) {
  if (n * k > 64) throw std::invalid_argument("mask encoding needs n*k <= 64");
  OrientationMatrix m(n, k);
  for (std::size_t e = 0; e < n * k; ++e) m.bits_[e] = (mask >> e) & 1U;
  return m;
}

std::size_t OrientationMatrix::row_sum(std::size_t i) const {
  return static_cast<std::size_t>(
      std::count(bits_.begin() + static_cast<std::ptrdiff_t>(i * k_),
                 bits_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k_), 1));
}

std::size_t OrientationMatrix::col_sum(std::size_t j) const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += bits_[i * k_ + j];
  return s;
}

OrientationMatrix OrientationMatrix::permuted(const std::vector<std::size_t>& row_order,
                                              const std::vector<std::size_t>& col_order) const {
  OrientationMatrix out(n_, k_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < k_; ++c) out.set(r, c, at(row_order[r], col_order[c]));
  return out;
}

std::string OrientationMatrix::row_string(std::size_t i) const {
  std::string s(k_, '0');
  for (std::size_t j = 0; j < k_; ++j) s[j] = at(i, j) ? '1' : '0';
  return s;
}

OrientationMatrix read_matrix(std::istream& in) {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("missing matrix header");
  std::istringstream hs(header);
  if (!(hs >> n >> k)) throw std::runtime_error("malformed matrix header: '" + header + "'");
  OrientationMatrix m(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("matrix has fewer rows than declared");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != k) {
      throw std::runtime_error("matrix row " + std::to_string(i + 1) + " has wrong length");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (line[j] != '0' && line[j] != '1') throw std::runtime_error("matrix entries must be 0 or 1");
      m.set(i, j, line[j] == '1');
    }
  }
  return m;
}

void write_matrix(std::ostream& out, const OrientationMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) out << m.row_string(i) << '\n';
}

namespace {

std::vector<std::size_t> order_by_decreasing(const std::vector<std::size_t>& sums) {
  std::vector<std::size_t> order(sums.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });
  return order;
}

struct SortedForm {
  OrientationMatrix matrix;
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
  std::vector<std::size_t> sorted_row_sums;
};

SortedForm sort_by_sums(const OrientationMatrix& m) {
  std::vector<std::size_t> rs(m.rows());
  std::vector<std::size_t> cs(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rs[i] = m.row_sum(i);
  for (std::size_t j = 0; j < m.cols(); ++j) cs[j] = m.col_sum(j);
  SortedForm f;
  f.row_perm = order_by_decreasing(rs);
  f.col_perm = order_by_decreasing(cs);
  f.matrix = m.permuted(f.row_perm, f.col_perm);
  for (auto r : f.row_perm) f.sorted_row_sums.push_back(rs[r]);
  return f;
}

// Every row is 1^s 0^(k-s) with s its sum. Row sums are already
// non-increasing, so prefix rows nest into a Young diagram.
bool is_staircase(const SortedForm& f) {
  const auto& m = f.matrix;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t s = f.sorted_row_sums[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) != (j < s)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_lonesum(const OrientationMatrix& m) { return is_staircase(sort_by_sums(m)); }

bool has_forbidden_minor(const OrientationMatrix& m) {
  for (std::size_t i1 = 0; i1 < m.rows(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 < m.rows(); ++i2)
      for (std::size_t j1 = 0; j1 < m.cols(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < m.cols(); ++j2) {
          const bool a = m.at(i1, j1);
          const bool b = m.at(i1, j2);
          const bool c = m.at(i2, j1);
          const bool d = m.at(i2, j2);
          if (a == d && b == c && a != b) return true;
        }
  return false;
}

namespace {

// Vertices 0..n-1 are A, n..n+k-1 are B. Returns the topological order, or
// fewer than n+k vertices when a cycle blocks the sort.
std::vector<std::size_t> topological_order(const OrientationMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  std::vector<std::size_t> indegree(n + k, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) ++indegree[m.at(i, j) ? n + j : i];

  std::vector<std::size_t> order;
  order.reserve(n + k);
  for (std::size_t v = 0; v < n + k; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t v = order[head];
    if (v < n) {
      for (std::size_t j = 0; j < k; ++j)
        if (m.at(v, j) && --indegree[n + j] == 0) order.push_back(n + j);
    } else {
      const std::size_t j = v - n;
      for (std::size_t i = 0; i < n; ++i)
        if (!m.at(i, j) && --indegree[i] == 0) order.push_back(i);
    }
  }
  return order;
}

}  // namespace

bool is_acyclic(const OrientationMatrix& m) {
  return topological_order(m).size() == m.rows() + m.cols();
}

StaircaseForm normalize_staircase(const OrientationMatrix& m) {
  auto f = sort_by_sums(m);
  if (!is_staircase(f)) throw std::invalid_argument("normalize_staircase: matrix is not lonesum");
  return {std::move(f.matrix), std::move(f.row_perm), std::move(f.col_perm)};
}

ClassSignature class_signature(const OrientationMatrix& m) {
  if (!is_lonesum(m)) throw std::invalid_argument("class_signature: matrix is not lonesum");
  std::vector<std::size_t> nonzero;
  ClassSignature sig;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t s = m.row_sum(i);
    if (s == 0) {
      sig.has_zero_row = true;
    } else {
      nonzero.push_back(s);
    }
  }
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.col_sum(j) == 0) sig.has_zero_col = true;
  std::sort(nonzero.begin(), nonzero.end());
  sig.m = static_cast<std::size_t>(std::unique(nonzero.begin(), nonzero.end()) - nonzero.begin());
  return sig;
}

std::size_t longest_path_via_classes(const OrientationMatrix& m) {
  const auto sig = class_signature(m);
  const std::size_t zero_kinds = (sig.has_zero_row ? 1 : 0) + (sig.has_zero_col ? 1 : 0);
  return 2 * sig.m + zero_kinds - 1;
}

std::size_t longest_path_dag(const OrientationMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  const auto order = topological_order(m);
  if (order.size() != n + k) throw std::invalid_argument("longest_path_dag: orientation has a cycle");
  std::vector<std::size_t> depth(n + k, 0);  // longest path ending at v
  std::size_t best = 0;
  for (const std::size_t v : order) {
    const std::size_t next = depth[v] + 1;
    if (v < n) {
      for (std::size_t j = 0; j < k; ++j)
        if (m.at(v, j)) depth[n + j] = std::max(depth[n + j], next);
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (!m.at(i, v - n)) depth[i] = std::max(depth[i], next);
    }
    best = std::max(best, depth[v]);
  }
  return best;
}

PathLengthDistribution brute_force_distribution(std::size_t n, std::size_t k, unsigned threads) {
  if (n == 0 || k == 0) throw std::invalid_argument("brute_force_distribution requires n, k >= 1");
  if (n * k > kBruteForceMaxEdges) {
    throw std::length_error("brute-force enumeration is limited to n*k <= 20");
  }
  const std::size_t slots = n == k ? 2 * n : 2 * std::min(n, k) + 1;
  const std::uint64_t total_masks = std::uint64_t{1} << (n * k);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total_masks));
  const std::uint64_t chunk = (total_masks + threads - 1) / threads;

  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(slots, 0));
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        const std::uint64_t begin = t * chunk;
        const std::uint64_t end = std::min(total_masks, begin + chunk);
        auto& hist = partial[t];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const auto m = OrientationMatrix::from_mask(n, k, mask);
          if (!is_acyclic(m)) continue;
          ++hist.at(longest_path_dag(m));
        }
      });
    }
  }

  PathLengthDistribution dist;
  dist.n = n;
  dist.k = k;
  dist.counts.assign(slots, ExactInt(0));
  dist.total = 0;
  for (const auto& hist : partial)
    for (std::size_t l = 0; l < slots; ++l) {
      dist.counts[l] += static_cast<unsigned long>(hist[l]);
      dist.total += static_cast<unsigned long>(hist[l]);
    }
  return dist;
}

}  // namespace lpath
