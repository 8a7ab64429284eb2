#include "lpath/combinatorics.hpp"
#include "lpath/exact.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <thread>

using namespace lpath;

namespace {

// B_{n,k} for 0 <= n,k <= 6. The commonly reproduced printed table lists
// B_{4,4} as 6906; the correct value (diagonal 1, 2, 14, 230, 6902, ...) is
// used here and the misprint is checked separately below.
constexpr unsigned long kPolyBernoulliTable[7][7] = {
    {1, 1, 1, 1, 1, 1, 1},
    {1, 2, 4, 8, 16, 32, 64},
    {1, 4, 14, 46, 146, 454, 1394},
    {1, 8, 46, 230, 1066, 4718, 20266},
    {1, 16, 146, 1066, 6902, 41506, 237686},
    {1, 32, 454, 4718, 41506, 329462, 2441314},
    {1, 64, 1394, 20266, 237686, 2441314, 22934774},
};

}  // namespace

TEST(ExactRational, CanonicalForm) {
  const auto q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rational(2, 4), make_rational(1, 2));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_EQ(to_string(make_rational(17, 7)), "17/7");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
}

TEST(ExactRational, ConversionsAndLogs) {
  EXPECT_DOUBLE_EQ(to_double(make_rational(1, 7)), 1.0 / 7.0);
  ExactInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 3, 2000);
  EXPECT_NEAR(log_of(big), 2000.0 * std::log(3.0), 1e-9 * 2000.0);
  EXPECT_NEAR(log_of(ExactInt(1)), 0.0, 1e-15);
}

TEST(Stirling, MatchesPartitionEnumeration) {
  const auto ref = oracle::stirling_by_enumeration(9);
  for (std::size_t n = 0; n <= 9; ++n)
    for (std::size_t k = 0; k <= 9; ++k) EXPECT_EQ(stirling2(n, k), ref[n][k]) << n << "," << k;
}

TEST(Stirling, TableInvariants) {
  const StirlingTable t(40);
  EXPECT_EQ(t(0, 0), 1);
  for (std::size_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(t(n, 0), 0);
    EXPECT_EQ(t(n, n + 3), 0);
    for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(t(n, k), k * t(n - 1, k) + t(n - 1, k - 1));
  }
  EXPECT_THROW(t(41, 1), std::out_of_range);
  EXPECT_EQ(stirling2(30, 7), oracle::stirling_inclusion_exclusion(30, 7));
}

TEST(Stirling, RowSumsAreBellNumbers) {
  const auto bell = oracle::bell_triangle(20);
  for (std::size_t n = 0; n <= 20; ++n) {
    ExactInt sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += stirling2(n, k);
    EXPECT_EQ(sum, bell[n]) << n;
  }
}

TEST(Stirling, ExtensionKeepsRows) {
  const StirlingTable small(10);
  const auto big = small.extended(25);
  EXPECT_EQ(big.max_n(), 25u);
  EXPECT_EQ(small.max_n(), 10u);
  for (std::size_t n = 0; n <= 10; ++n)
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(small(n, k), big(n, k));
}

TEST(Stirling, SharedTableGrowsAndIsSafeToRead) {
  const auto first = shared_stirling_table(5);
  EXPECT_GE(first->max_n(), 5u);
  std::vector<std::jthread> readers;
  std::vector<ExactInt> results(4);
  for (std::size_t t = 0; t < 4; ++t) {
    readers.emplace_back([&, t] { results[t] = (*shared_stirling_table(60 + 20 * t))(60, 30); });
  }
  readers.clear();
  for (const auto& r : results) EXPECT_EQ(r, oracle::stirling_inclusion_exclusion(60, 30));
  EXPECT_GE(shared_stirling_table(0)->max_n(), 120u);
  // An old snapshot remains valid after growth.
  EXPECT_EQ((*first)(5, 2), 15);
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
}

TEST(PolyBernoulli, PrintedTable) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(poly_bernoulli(n, k), kPolyBernoulliTable[n][k]) << n << "," << k;
}

TEST(PolyBernoulli, PrintedDiagonalEntryIsAMisprint) {
  EXPECT_EQ(poly_bernoulli(4, 4), 6902);
  EXPECT_EQ(oracle::poly_bernoulli_alternating(4, 4), 6902);
  EXPECT_NE(poly_bernoulli(4, 4), 6906);
}

TEST(PolyBernoulli, AlternatingFormulaOracle) {
  for (std::size_t n = 0; n <= 15; ++n)
    for (std::size_t k = 0; k <= 15; ++k) EXPECT_EQ(poly_bernoulli(n, k), oracle::poly_bernoulli_alternating(n, k));
}

TEST(PolyBernoulli, SymmetryAndFirstRow) {
  for (std::size_t n = 0; n <= 30; ++n)
    for (std::size_t k = 0; k <= 30; ++k) ASSERT_EQ(poly_bernoulli(n, k), poly_bernoulli(k, n));
  for (std::size_t k = 0; k <= 30; ++k) {
    ExactInt two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    EXPECT_EQ(poly_bernoulli(1, k), two_k);
    EXPECT_EQ(poly_bernoulli(0, k), 1);
  }
}
