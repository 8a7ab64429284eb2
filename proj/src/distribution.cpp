#include "lpath/distribution.hpp"

#include "lpath/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpath {

namespace {

ExactInt squared_factorial(std::size_t m) {
  ExactInt f = factorial(m);
  return f * f;
}

}  // namespace

ExactInt class_count_b(std::size_t n, std::size_t k, std::size_t m) {
  if (m > std::min(n, k)) return 0;
  const auto s = shared_stirling_table(std::max(n, k) + 1);
  return squared_factorial(m) * (*s)(n + 1, m + 1) * (*s)(k + 1, m + 1);
}

ExactInt class_count_c(std::size_t n, std::size_t k, std::size_t m) {
  if (m > std::min(n, k)) return 0;
  const auto s = shared_stirling_table(std::max(n, k) + 1);
  return squared_factorial(m) * (*s)(n + 1, m + 1) * (*s)(k, m);
}

ExactInt class_count_d(std::size_t n, std::size_t k, std::size_t m) {
  if (m > std::min(n, k)) return 0;
  const auto s = shared_stirling_table(std::max(n, k) + 1);
  return squared_factorial(m) * (*s)(n, m) * (*s)(k, m);
}

PathLengthDistribution longest_path_counts(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) {
    throw std::invalid_argument("longest_path_counts requires n >= 1 and k >= 1");
  }
  const std::size_t lo = std::min(n, k);
  const auto table = shared_stirling_table(std::max(n, k) + 1);
  const auto& s = *table;

  // The terms are evaluated inline with one shared factorial and table
  // snapshot; at n = k = 200 this is the hot path for the exact moments.
  std::vector<ExactInt> b(lo + 1), c_nk(lo + 1), c_kn(lo + 1), d(lo + 1);
  ExactInt fact = 1;
  for (std::size_t m = 0; m <= lo; ++m) {
    if (m > 0) fact *= static_cast<unsigned long>(m);
    const ExactInt f2 = fact * fact;
    b[m] = f2 * s(n + 1, m + 1) * s(k + 1, m + 1);
    c_nk[m] = f2 * s(n + 1, m + 1) * s(k, m);
    c_kn[m] = f2 * s(k + 1, m + 1) * s(n, m);
    d[m] = f2 * s(n, m) * s(k, m);
  }

  PathLengthDistribution dist;
  dist.n = n;
  dist.k = k;
  // Lengths run up to 2*lo when the parts differ in size and 2*lo - 1 otherwise.
  dist.counts.assign(n == k ? 2 * lo : 2 * lo + 1, ExactInt(0));
  for (std::size_t m = 0; m < lo; ++m) {
    dist.counts[2 * m + 1] = d[m + 1] + b[m] - c_nk[m] - c_kn[m] + d[m];
  }
  for (std::size_t m = 1; 2 * m < dist.counts.size(); ++m) {
    dist.counts[2 * m] = c_nk[m] + c_kn[m] - 2 * d[m];
  }
  dist.total = 0;
  for (const auto& b_m : b) dist.total += b_m;
  return dist;
}

ExactRational ProbabilityGeneratingPolynomial::evaluate(const ExactRational& u) const {
  ExactRational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double ProbabilityGeneratingPolynomial::evaluate(double u) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * u + to_double(*it);
  }
  return acc;
}

ExactRational ProbabilityGeneratingPolynomial::derivative_at_one() const {
  ExactRational acc = 0;
  for (std::size_t l = 1; l < coefficients.size(); ++l) {
    acc += coefficients[l] * static_cast<unsigned long>(l);
  }
  return acc;
}

ExactRational ProbabilityGeneratingPolynomial::second_derivative_at_one() const {
  ExactRational acc = 0;
  for (std::size_t l = 2; l < coefficients.size(); ++l) {
    acc += coefficients[l] * static_cast<unsigned long>(l * (l - 1));
  }
  return acc;
}

ProbabilityGeneratingPolynomial pgf(const PathLengthDistribution& dist) {
  ProbabilityGeneratingPolynomial p;
  p.coefficients.reserve(dist.counts.size());
  for (const auto& count : dist.counts) p.coefficients.push_back(make_rational(count, dist.total));
  return p;
}

ProbabilityGeneratingPolynomial pgf(std::size_t n, std::size_t k) {
  return pgf(longest_path_counts(n, k));
}

ExactMoments moments(const ProbabilityGeneratingPolynomial& p) {
  const ExactRational d1 = p.derivative_at_one();
  const ExactRational d2 = p.second_derivative_at_one();
  return {d1, d2 + d1 - d1 * d1};
}

ExactMoments moments(const PathLengthDistribution& dist) {
  // Same formulas as for the PGF, but with a single division at the end.
  ExactInt first = 0;
  ExactInt falling = 0;
  for (std::size_t l = 1; l < dist.counts.size(); ++l) {
    first += dist.counts[l] * static_cast<unsigned long>(l);
    falling += dist.counts[l] * static_cast<unsigned long>(l * (l - 1));
  }
  const ExactRational d1 = make_rational(first, dist.total);
  const ExactRational d2 = make_rational(falling, dist.total);
  return {d1, d2 + d1 - d1 * d1};
}

ExactRational mean_exact(std::size_t n, std::size_t k) {
  return moments(longest_path_counts(n, k)).mean;
}

ExactRational variance_exact(std::size_t n, std::size_t k) {
  return moments(longest_path_counts(n, k)).variance;
}

ExactRational tail_probability(const PathLengthDistribution& dist, const ExactRational& t) {
  const ExactRational mu = moments(dist).mean;
  ExactInt mass = 0;
  for (std::size_t l = 0; l < dist.counts.size(); ++l) {
    const ExactRational deviation = abs(ExactRational(static_cast<unsigned long>(l)) - mu);
    if (deviation > t) mass += dist.counts[l];
  }
  return make_rational(mass, dist.total);
}

}  // namespace lpath
