#include "lpath/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace lpath {

StirlingTable::StirlingTable(std::size_t max_n) {
  rows_.push_back({ExactInt(1)});
  grow_to(max_n);
}

void StirlingTable::grow_to(std::size_t max_n) {
  rows_.reserve(max_n + 1);
  for (std::size_t n = rows_.size(); n <= max_n; ++n) {
    const auto& prev = rows_[n - 1];
    std::vector<ExactInt> row(n + 1);
    row[0] = 0;
    for (std::size_t k = 1; k < n; ++k) {
      row[k] = prev[k] * static_cast<unsigned long>(k);
      row[k] += prev[k - 1];
    }
    row[n] = 1;
    rows_.push_back(std::move(row));
  }
}

const ExactInt& StirlingTable::operator()(std::size_t n, std::size_t k) const {
  static const ExactInt zero(0);
  if (n > max_n()) throw std::out_of_range("Stirling table row not available");
  if (k > n) return zero;
  return rows_[n][k];
}

StirlingTable StirlingTable::extended(std::size_t new_max_n) const {
  StirlingTable copy;
  copy.rows_ = rows_;
  copy.grow_to(new_max_n);
  return copy;
}

namespace {

std::mutex table_mutex;
std::shared_ptr<const StirlingTable> published_table;

}  // namespace

std::shared_ptr<const StirlingTable> shared_stirling_table(std::size_t min_n) {
  std::lock_guard lock(table_mutex);
  if (!published_table) {
    published_table = std::make_shared<const StirlingTable>(std::max<std::size_t>(min_n, 32));
  } else if (published_table->max_n() < min_n) {
    const std::size_t target = std::max(min_n, 2 * published_table->max_n());
    published_table = std::make_shared<const StirlingTable>(published_table->extended(target));
  }
  return published_table;
}

ExactInt stirling2(std::size_t n, std::size_t k) {
  return (*shared_stirling_table(n))(n, k);
}

ExactInt factorial(std::size_t n) {
  ExactInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

ExactInt poly_bernoulli(std::size_t n, std::size_t k) {
  const auto table = shared_stirling_table(std::max(n, k) + 1);
  const auto& s = *table;
  ExactInt total = 0;
  ExactInt m_factorial = 1;
  for (std::size_t m = 0; m <= std::min(n, k); ++m) {
    if (m > 0) m_factorial *= static_cast<unsigned long>(m);
    total += m_factorial * m_factorial * s(n + 1, m + 1) * s(k + 1, m + 1);
  }
  return total;
}

}  // namespace lpath
