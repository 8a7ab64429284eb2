#include "lpath/combinatorics.hpp"
#include "lpath/distribution.hpp"
#include "lpath/sampler.hpp"
#include "lpath/series.hpp"

#include <gtest/gtest.h>

using namespace lpath;

namespace {

TruncatedSeries random_series(std::size_t order, RandomState& rng, bool zero_constant) {
  TruncatedSeries s(order);
  for (std::size_t a = 0; a <= order; ++a)
    for (std::size_t b = 0; b <= order; ++b)
      for (std::size_t l = 0; l <= 3; ++l) {
        if (rng.uniform_below(std::uint64_t{3}) == 0) continue;
        const long num = static_cast<long>(rng.uniform_below(std::uint64_t{21})) - 10;
        const long den = static_cast<long>(rng.uniform_below(std::uint64_t{6})) + 1;
        s.set_coeff(a, b, l, make_rational(num, den));
      }
  if (zero_constant)
    for (std::size_t l = 0; l <= s.u_degree_cap(); ++l) s.set_coeff(0, 0, l, 0);
  return s;
}

// x-only series: coefficient of x^a at y^0 u^0.
ExactRational x_coeff(const TruncatedSeries& s, std::size_t a) { return s.coeff(a, 0, 0); }

}  // namespace

TEST(Series, Construction) {
  const auto s = TruncatedSeries::monomial(3, 1, 2, 4, make_rational(3, 5));
  EXPECT_EQ(s.order(), 3u);
  EXPECT_EQ(s.u_degree_cap(), 7u);
  EXPECT_EQ(s.coeff(1, 2, 4), make_rational(3, 5));
  EXPECT_EQ(s.coeff(0, 0, 0), 0);
  EXPECT_TRUE(s.constant_term_is_zero());
  EXPECT_FALSE(TruncatedSeries::u_monomial(3, 2).constant_term_is_zero());
  TruncatedSeries t(2);
  EXPECT_THROW(t.set_coeff(3, 0, 0, 1), std::out_of_range);
  EXPECT_THROW(t.set_coeff(0, 0, 6, 1), std::out_of_range);
}

TEST(Series, MultiplicationTruncatesPerVariable) {
  const auto x2 = TruncatedSeries::monomial(3, 2, 0, 0);
  const auto xy = TruncatedSeries::monomial(3, 1, 1, 1);
  const auto p = x2 * xy;
  EXPECT_EQ(p.coeff(3, 1, 1), 1);
  // x^4 falls outside the x cap even though the total degree is small.
  EXPECT_EQ(x2 * x2, TruncatedSeries(3));
  EXPECT_THROW(x2 * TruncatedSeries(2), std::invalid_argument);
}

TEST(Series, RingLawsOnRandomInstances) {
  RandomState rng(20240601);
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = random_series(3, rng, false);
    const auto b = random_series(3, rng, false);
    const auto c = random_series(3, rng, false);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ(a * TruncatedSeries::one(3), a);
    EXPECT_EQ(make_rational(2, 3) * (a + b), make_rational(2, 3) * a + make_rational(2, 3) * b);
  }
}

TEST(Series, GeometricInvertsOneMinusG) {
  RandomState rng(77);
  for (int trial = 0; trial < 4; ++trial) {
    const auto g = random_series(3, rng, true);
    const auto inv = series_geometric(g);
    EXPECT_EQ((TruncatedSeries::one(3) - g) * inv, TruncatedSeries::one(3));
  }
  EXPECT_THROW(series_geometric(TruncatedSeries::one(2)), std::domain_error);
}

TEST(Series, StirlingEgfIdentities) {
  const std::size_t order = 10;
  const auto ex1 = series_exp_minus_one(Variable::x, order);
  const auto ex = ex1 + TruncatedSeries::one(order);
  auto power = TruncatedSeries::one(order);
  for (std::size_t k = 0; k <= 6; ++k) {
    const ExactRational inv_kfact = make_rational(1, factorial(k));
    const auto plain = power * inv_kfact;
    const auto shifted = (ex * power) * inv_kfact;
    for (std::size_t n = 0; n <= order; ++n) {
      EXPECT_EQ(factorial(n) * x_coeff(plain, n), ExactRational(stirling2(n, k))) << n << "," << k;
      EXPECT_EQ(factorial(n) * x_coeff(shifted, n), ExactRational(stirling2(n + 1, k + 1))) << n << "," << k;
    }
    power = power * ex1;
  }
}

TEST(Series, CoefficientIdentityOrderEight) {
  const auto F = expand_F(8);
  EXPECT_EQ(scaled_coefficient(F, 0, 0, 0), 1);
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 1; k <= 8; ++k) {
      const auto d = longest_path_counts(n, k);
      for (std::size_t l = 0; l <= F.u_degree_cap(); ++l) {
        const ExactInt expected = l < d.counts.size() ? d.counts[l] : ExactInt(0);
        ASSERT_EQ(scaled_coefficient(F, n, k, l), ExactRational(expected)) << n << "," << k << "," << l;
      }
    }
}

TEST(Series, SpecializationAtOneIsPolyBernoulli) {
  const auto F = expand_F(8);
  const auto B = expand_B(8);
  EXPECT_EQ(F.at_u(1), B);
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(scaled_coefficient(B, n, k, 0), ExactRational(poly_bernoulli(n, k)));
}

TEST(Series, ParityParts) {
  const auto parts = expand_parity_parts(6);
  const auto F = expand_F(6);
  EXPECT_EQ(parts.odd + parts.even, F);
  EXPECT_EQ(parts.odd, F.u_parity_part(1));
  EXPECT_EQ(parts.even, F.u_parity_part(0));
  EXPECT_EQ(scaled_coefficient(parts.even, 2, 2, 2), 4);
  for (std::size_t a = 0; a <= 6; ++a)
    for (std::size_t b = 0; b <= 6; ++b) EXPECT_EQ(parts.odd.coeff(a, b, 0), 0);
}
