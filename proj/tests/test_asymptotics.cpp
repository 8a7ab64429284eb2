#include "lpath/asymptotics.hpp"
#include "lpath/combinatorics.hpp"
#include "lpath/distribution.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace lpath;

namespace {

const double kLog2 = std::log(2.0);
// Reference values evaluated at 40 digits with mpmath.
constexpr double kMeanA = -0.46392964123778593267;
constexpr double kVarA = 0.015130834105566292503;
constexpr double kVarB = 0.31933697005832223;
// Value of the published closed form for v(A), whose (log 2)^3 coefficient
// is 1 instead of 5.
constexpr double kPublishedVarA = -3.6656099154709839416;

}  // namespace

TEST(Functionals, ClosedFormDerivatives) {
  const auto b = quasi_power_B_derivatives();
  const auto a = quasi_power_A_derivatives();
  EXPECT_NEAR(b.value, 1.0, 1e-15);
  EXPECT_NEAR(a.value, 1.0, 1e-15);
  EXPECT_NEAR(m_functional(b), 1.0 / kLog2, 1e-13);
  EXPECT_NEAR(v_functional(b), (1 - kLog2) / (2 * kLog2 * kLog2), 1e-13);
  EXPECT_NEAR(v_functional(b), kVarB, 1e-13);
  EXPECT_NEAR(m_functional(a), kMeanA, 1e-13);
  EXPECT_NEAR(m_functional(a), (8 * kLog2 * kLog2 - 9 * kLog2 + 2) / (4 * kLog2 * (1 - kLog2)), 1e-13);
  EXPECT_NEAR(v_functional(a), kVarA, 1e-12);
}

TEST(Functionals, FiniteDifferences) {
  EXPECT_NEAR(m_functional([](double u) { return quasi_power_B(u); }), 1.0 / kLog2, 1e-6);
  EXPECT_NEAR(v_functional([](double u) { return quasi_power_B(u); }), kVarB, 1e-6);
  EXPECT_NEAR(m_functional([](double u) { return quasi_power_A(u); }), kMeanA, 1e-6);
  EXPECT_NEAR(v_functional([](double u) { return quasi_power_A(u); }), kVarA, 1e-6);
  const auto d = central_differences([](double u) { return u * u * u; }, 2.0);
  EXPECT_NEAR(d.value, 8.0, 1e-12);
  EXPECT_NEAR(d.first, 12.0, 1e-8);
  EXPECT_NEAR(d.second, 12.0, 1e-4);
  EXPECT_THROW(central_differences([](double u) { return std::log(u - 1.0); }), std::domain_error);
}

TEST(Functionals, VariabilityCondition) { EXPECT_GT(v_functional(quasi_power_B_derivatives()), 0.3); }

TEST(Estimates, TransferIdentities) {
  const auto mean = mean_asymptotic();
  const auto mean_qp = mean_from_quasi_power();
  EXPECT_NEAR(mean.leading, 1.0 / kLog2, 1e-15);
  for (double n : {1.0, 10.0, 200.0}) {
    EXPECT_NEAR(mean_qp.value_at(n), n * m_functional(quasi_power_B_derivatives()) + m_functional(quasi_power_A_derivatives()), 1e-12);
    EXPECT_NEAR(mean.value_at(n), mean_qp.value_at(n), 1e-12);
  }
  const auto var_qp = variance_from_quasi_power();
  EXPECT_NEAR(var_qp.leading, kVarB, 1e-13);
  EXPECT_NEAR(var_qp.constant, kVarA, 1e-12);
}

TEST(Estimates, PublishedVarianceConstantDiffersFromTransfer) {
  const auto var = variance_asymptotic();
  EXPECT_NEAR(var.leading, kVarB, 1e-13);
  EXPECT_NEAR(var.constant, kPublishedVarA, 1e-12);
  EXPECT_GT(std::abs(var.constant - variance_from_quasi_power().constant), 3.0);
}

TEST(Estimates, AffineInN) {
  const auto e = mean_asymptotic();
  EXPECT_NEAR(e.value_at(3.0) - e.value_at(2.0), e.value_at(11.0) - e.value_at(10.0), 1e-12);
}

TEST(Estimates, ExactMomentsApproachTransferEstimates) {
  const auto var_qp = variance_from_quasi_power();
  double prev_mean = INFINITY, prev_var = INFINITY;
  for (std::size_t n : {10, 20, 40, 80}) {
    const auto mom = moments(longest_path_counts(n, n));
    const double dm = std::abs(to_double(mom.mean) - mean_asymptotic().value_at(double(n)));
    const double dv = std::abs(to_double(mom.variance) - var_qp.value_at(double(n)));
    EXPECT_LT(dm, prev_mean);
    EXPECT_LT(dv, prev_var);
    prev_mean = dm;
    prev_var = dv;
  }
}

TEST(PolyBernoulliDiagonal, RatioConverges) {
  double prev = INFINITY;
  for (std::size_t n : {6, 10, 20, 40, 80}) {
    const double r = std::abs(pb_diagonal_ratio(n) - 1.0);
    EXPECT_LT(r, prev) << n;
    prev = r;
  }
  EXPECT_NEAR(log_pb_diagonal_asymptotic(80), log_of(poly_bernoulli(80, 80)), 0.01);
}

TEST(QuasiPower, FactorsNormalizedAtOne) {
  EXPECT_NEAR(quasi_power_A(1.0), 1.0, 1e-15);
  EXPECT_NEAR(quasi_power_B(1.0), 1.0, 1e-15);
  EXPECT_THROW(quasi_power_A(0.0), std::domain_error);
  EXPECT_THROW(quasi_power_B(-1.0), std::domain_error);
}

TEST(QuasiPower, ResidualShrinks) {
  for (double u : {0.95, 1.05}) {
    double prev = INFINITY;
    for (std::size_t n : {10, 20, 40, 80}) {
      const double r = std::abs(quasi_power_residual(n, u));
      EXPECT_LT(r, prev) << "u=" << u << " n=" << n;
      prev = r;
    }
  }
  // At u = 1 both sides are exactly 1.
  for (std::size_t n : {10, 40, 80}) EXPECT_NEAR(quasi_power_residual(n, 1.0), 0.0, 1e-14);
}

TEST(Critical, HeightFunctionQ) {
  EXPECT_NEAR(q_at_critical(1.0), q_from_partials(1.0), 1e-9);
  EXPECT_NEAR(q_at_critical(1.0), 2 * 8 * std::pow(kLog2, 3) * (1 - kLog2), 1e-12);
  EXPECT_NEAR(q_at_critical(0.97), q_from_partials(0.97), 1e-8);
  EXPECT_GT(q_at_critical(1.03), 0.0);
}

TEST(Gaussian, CdfSymmetry) {
  EXPECT_NEAR(gaussian_cdf(0.0), 0.5, 1e-16);
  EXPECT_NEAR(gaussian_cdf(1.959963984540054), 0.975, 1e-12);
  for (double x = -6.0; x <= 6.0; x += 0.25) EXPECT_NEAR(gaussian_cdf(x), 1.0 - gaussian_cdf(-x), 1e-15);
}

TEST(Gaussian, StandardizationConservesMass) {
  for (std::size_t n : {2, 7, 30}) {
    const auto s = standardize(longest_path_counts(n, n));
    double mass = 0.0, mean = 0.0, second = 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      mass += s.masses[i];
      mean += s.masses[i] * s.points[i];
      second += s.masses[i] * s.points[i] * s.points[i];
    }
    EXPECT_NEAR(mass, 1.0, 1e-12);
    EXPECT_NEAR(mean, 0.0, 1e-12);
    EXPECT_NEAR(second, 1.0, 1e-12);
  }
}

TEST(Gaussian, KolmogorovDistanceDecreases) {
  double prev = INFINITY;
  for (std::size_t n : {2, 5, 10, 20, 40}) {
    const double d = kolmogorov_to_gaussian(n);
    EXPECT_LT(d, prev) << n;
    prev = d;
  }
  EXPECT_NEAR(kolmogorov_to_gaussian(std::size_t{2}), 0.355, 1e-3);
}

TEST(Minimality, Curvature) {
  EXPECT_NEAR(curvature(0.0, 1.0), (1 + kLog2) / (2 * kLog2), 1e-12);
  EXPECT_NEAR(curvature(0.0, 1.0), 1.22134, 1e-4);
  EXPECT_NEAR(curvature(std::numbers::pi, 1.0), 2 * (1 - kLog2) / kLog2, 1e-12);
  EXPECT_NEAR(curvature(std::numbers::pi, 1.0), 0.88539, 1e-4);
  EXPECT_NEAR(curvature(0.3, 1.0), curvature(-0.3, 1.0), 1e-15);
}

TEST(Minimality, CertificatePasses) {
  for (double u : {0.97, 1.0, 1.03}) {
    const auto rep = certify_strict_minimality(u, 256);
    EXPECT_TRUE(rep.passed) << u;
    EXPECT_GT(rep.min_abs_h_off_critical, kMinimalityFloor);
    EXPECT_LE(rep.back_arc_max, rep.back_arc_bound + 1e-12);
    EXPECT_LT(rep.back_arc_bound, 1.0);
  }
  const auto at_one = certify_strict_minimality(1.0, 256);
  EXPECT_LT(at_one.abs_h_at_critical, 1e-12);
  EXPECT_NEAR(at_one.back_arc_bound, 0.887, 1e-3);
  // The grid maximum itself is attained at theta = pi/2: |e^{i log 2} - 1|.
  EXPECT_NEAR(at_one.back_arc_max, 2 * std::sin(kLog2 / 2), 1e-4);
}

TEST(Minimality, Validation) {
  EXPECT_THROW(certify_strict_minimality(1.0, 64), std::invalid_argument);
  EXPECT_THROW(certify_strict_minimality(1.2, 256), std::domain_error);
}
