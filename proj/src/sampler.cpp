#include "lpath/sampler.hpp"

#include "lpath/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace lpath {

std::uint64_t RandomState::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  if (bound == 1) return 0;
  const unsigned width = 64 - static_cast<unsigned>(std::countl_zero(bound - 1));
  const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  for (;;) {
    const std::uint64_t candidate = next() & mask;
    if (candidate < bound) return candidate;
  }
}

ExactInt RandomState::uniform_below(const ExactInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: empty range");
  if (bound.fits_ulong_p()) return ExactInt(static_cast<unsigned long>(uniform_below(bound.get_ui())));

  const ExactInt top = bound - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned spare = static_cast<unsigned>(words * 64 - bits);
  std::vector<std::uint64_t> limbs(words);
  ExactInt candidate;
  for (;;) {
    // Least significant word first; the top word is masked to `bits`.
    for (auto& w : limbs) w = next();
    limbs.back() >>= spare;
    mpz_import(candidate.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
    if (candidate < bound) return candidate;
  }
}

std::size_t sample_class_count(std::size_t n, std::size_t k, RandomState& rng) {
  if (n == 0 || k == 0) throw std::invalid_argument("sample_class_count requires n, k >= 1");
  const auto table = shared_stirling_table(std::max(n, k) + 1);
  const auto& s = *table;
  const std::size_t lo = std::min(n, k);
  std::vector<ExactInt> weights(lo + 1);
  ExactInt total = 0;
  ExactInt fact = 1;
  for (std::size_t m = 0; m <= lo; ++m) {
    if (m > 0) fact *= static_cast<unsigned long>(m);
    weights[m] = fact * fact * s(n + 1, m + 1) * s(k + 1, m + 1);
    total += weights[m];
  }
  ExactInt r = rng.uniform_below(total);
  for (std::size_t m = 0; m <= lo; ++m) {
    if (r < weights[m]) return m;
    r -= weights[m];
  }
  throw std::logic_error("class-count weights do not sum to the total");
}

SetPartition sample_partition(std::size_t items, std::size_t blocks, RandomState& rng) {
  if (blocks == 0 || blocks > items) {
    throw std::invalid_argument("sample_partition requires 1 <= blocks <= items");
  }
  const auto table = shared_stirling_table(items);
  const auto& s = *table;

  // Walk t = items..1 with j blocks left. A partition of {1..t} into j
  // blocks either has {t} as a singleton (S(t-1,j-1) ways) or puts t into
  // one of the j blocks of a partition of {1..t-1} (j*S(t-1,j) ways).
  // join[t] = -1 for a singleton, otherwise the index of the block (in
  // order of smallest element) that t joins.
  std::vector<std::ptrdiff_t> join(items, -1);
  std::size_t j = blocks;
  for (std::size_t t = items; t >= 1; --t) {
    const ExactInt& singletons = s(t - 1, j - 1);
    const ExactInt r = rng.uniform_below(s(t, j));
    if (r < singletons) {
      --j;
    } else {
      const ExactInt which = (r - singletons) / s(t - 1, j);
      join[t - 1] = static_cast<std::ptrdiff_t>(which.get_ui());
    }
  }

  SetPartition p;
  p.blocks = blocks;
  p.block_of.resize(items);
  std::size_t opened = 0;
  for (std::size_t t = 0; t < items; ++t) {
    p.block_of[t] = join[t] < 0 ? opened++ : static_cast<std::size_t>(join[t]);
  }
  return p;
}

std::vector<std::size_t> sample_permutation(std::size_t size, RandomState& rng) {
  std::vector<std::size_t> perm(size);
  for (std::size_t i = 0; i < size; ++i) perm[i] = i;
  for (std::size_t i = size; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.uniform_below(static_cast<std::uint64_t>(i))]);
  }
  return perm;
}

namespace {

// rank (1..m) of every item's class, 0 for the sentinel's (zero) class.
std::vector<std::size_t> item_ranks(const SetPartition& blocks, std::size_t m,
                                    const std::vector<std::size_t>& ranks) {
  const std::size_t items = blocks.block_of.size();
  if (blocks.blocks != m + 1 || ranks.size() != m) {
    throw std::invalid_argument("decode_orientation: inconsistent class data");
  }
  const std::size_t zero_block = blocks.block_of[items - 1];
  std::vector<std::size_t> rank_of_block(m + 1, 0);
  std::size_t next = 0;
  for (std::size_t b = 0; b <= m; ++b) {
    if (b == zero_block) continue;
    rank_of_block[b] = ranks[next++] + 1;
  }
  std::vector<std::size_t> out(items - 1);
  for (std::size_t i = 0; i + 1 < items; ++i) out[i] = rank_of_block[blocks.block_of[i]];
  return out;
}

}  // namespace

OrientationMatrix decode_orientation(std::size_t n, std::size_t k, std::size_t m,
                                     const SetPartition& row_blocks, const SetPartition& col_blocks,
                                     const std::vector<std::size_t>& row_ranks,
                                     const std::vector<std::size_t>& col_ranks) {
  if (row_blocks.block_of.size() != n + 1 || col_blocks.block_of.size() != k + 1) {
    throw std::invalid_argument("decode_orientation: partitions must include the sentinel");
  }
  const auto rr = item_ranks(row_blocks, m, row_ranks);
  const auto cr = item_ranks(col_blocks, m, col_ranks);
  OrientationMatrix out(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      out.set(i, j, rr[i] != 0 && cr[j] != 0 && rr[i] + cr[j] <= m + 1);
  return out;
}

OrientationMatrix sample_orientation(std::size_t n, std::size_t k, RandomState& rng) {
  const std::size_t m = sample_class_count(n, k, rng);
  const auto rows = sample_partition(n + 1, m + 1, rng);
  const auto cols = sample_partition(k + 1, m + 1, rng);
  const auto row_ranks = sample_permutation(m, rng);
  const auto col_ranks = sample_permutation(m, rng);
  return decode_orientation(n, k, m, rows, cols, row_ranks, col_ranks);
}

std::vector<double> EmpiricalDistribution::proportions() const {
  std::vector<double> out(counts.size(), 0.0);
  if (samples == 0) return out;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    out[l] = static_cast<double>(counts[l]) / static_cast<double>(samples);
  }
  return out;
}

EmpiricalDistribution empirical_distribution(
    std::size_t n, std::size_t k, std::uint64_t num_samples, RandomState& rng,
    const std::function<void(const OrientationMatrix&)>& visit) {
  if (num_samples == 0) throw std::invalid_argument("empirical_distribution needs at least one sample");
  EmpiricalDistribution e;
  e.n = n;
  e.k = k;
  e.counts.assign(n == k ? 2 * n : 2 * std::min(n, k) + 1, 0);
  e.samples = num_samples;
  for (std::uint64_t s = 0; s < num_samples; ++s) {
    const auto matrix = sample_orientation(n, k, rng);
    if (visit) visit(matrix);
    ++e.counts.at(longest_path_dag(matrix));
  }
  return e;
}

namespace {

std::vector<double> exact_probabilities(const PathLengthDistribution& exact, std::size_t size) {
  std::vector<double> p(size, 0.0);
  for (std::size_t l = 0; l < exact.counts.size() && l < size; ++l) {
    p[l] = to_double(make_rational(exact.counts[l], exact.total));
  }
  return p;
}

}  // namespace

double total_variation(const EmpiricalDistribution& empirical, const PathLengthDistribution& exact) {
  const std::size_t size = std::max(empirical.counts.size(), exact.counts.size());
  const auto q = exact_probabilities(exact, size);
  auto p = empirical.proportions();
  p.resize(size, 0.0);
  double sum = 0.0;
  for (std::size_t l = 0; l < size; ++l) sum += std::abs(p[l] - q[l]);
  return sum / 2.0;
}

double kolmogorov_distance(const EmpiricalDistribution& empirical,
                           const PathLengthDistribution& exact) {
  const std::size_t size = std::max(empirical.counts.size(), exact.counts.size());
  const auto q = exact_probabilities(exact, size);
  auto p = empirical.proportions();
  p.resize(size, 0.0);
  double cp = 0.0;
  double cq = 0.0;
  double worst = 0.0;
  for (std::size_t l = 0; l < size; ++l) {
    cp += p[l];
    cq += q[l];
    worst = std::max(worst, std::abs(cp - cq));
  }
  return worst;
}

}  // namespace lpath
