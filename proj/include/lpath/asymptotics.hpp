#pragma once

// Floating-point layer: the n = k asymptotics of the longest path length,
// the quasi-power factors A(u), B(u) with
//     p_n(u) = A(u) B(u)^n (1 + O(1/n)),
// convergence diagnostics against the Gaussian limit, and numeric checks of
// the strict minimality of the critical point (a, a), a = log(1 + 1/u), for
//     H(x, y, u) = 1 - u^2 (e^x - 1)(e^y - 1).

#include "lpath/distribution.hpp"
#include "lpath/simd/torus_kernel.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

namespace lpath {

// leading * n + constant, with error O(1/n).
struct AsymptoticEstimate {
  double leading = 0.0;
  double constant = 0.0;
  double value_at(double n) const { return leading * n + constant; }
};

// The closed forms as published for the mean and the variance of X_n.
AsymptoticEstimate mean_asymptotic();
AsymptoticEstimate variance_asymptotic();

// The same two estimates obtained directly from the quasi-power factors:
// n m(B) + m(A) and n v(B) + v(A), with derivatives of A and B taken by
// forward-mode differentiation.
AsymptoticEstimate mean_from_quasi_power();
AsymptoticEstimate variance_from_quasi_power();

// log of (n!)^2 sqrt(1/(n pi (1 - log 2))) (1/log 2)^(2n+1).
double log_pb_diagonal_asymptotic(std::size_t n);
// estimate / exact B_{n,n}, formed on the log scale.
double pb_diagonal_ratio(std::size_t n);

// Value and first two derivatives of a real function at a point.
struct Derivatives {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

// First derivative by central differences with `step`. The three-point
// second difference at step 1e-5 loses about 1e-6 to cancellation, so the
// second derivative uses a five-point stencil at `second_step` instead.
// Throws std::domain_error when f is not finite at one of the sample points.
Derivatives central_differences(const std::function<double(double)>& f, double at = 1.0,
                                double step = 1e-5, double second_step = 1e-3);

// m(f) = f'/f and v(f) = f''/f + f'/f - (f'/f)^2 at the evaluation point.
double m_functional(const Derivatives& d);
double v_functional(const Derivatives& d);
double m_functional(const std::function<double(double)>& f);
double v_functional(const std::function<double(double)>& f);

// Second-order forward-mode jet: value, d/du, d^2/du^2.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  static Jet variable(double at) { return {at, 1.0, 0.0}; }
};

inline Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet operator-(Jet a, Jet b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet operator*(Jet a, Jet b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
inline Jet operator/(Jet a, Jet b) {
  const Jet inv{1.0 / b.v, -b.d1 / (b.v * b.v),
                (2.0 * b.d1 * b.d1 - b.v * b.d2) / (b.v * b.v * b.v)};
  return a * inv;
}
inline Jet operator+(Jet a, double c) { return {a.v + c, a.d1, a.d2}; }
inline Jet operator+(double c, Jet a) { return a + c; }
inline Jet operator-(double c, Jet a) { return {c - a.v, -a.d1, -a.d2}; }
inline Jet operator-(Jet a, double c) { return {a.v - c, a.d1, a.d2}; }
inline Jet operator*(double c, Jet a) { return {c * a.v, c * a.d1, c * a.d2}; }
inline Jet operator*(Jet a, double c) { return c * a; }
inline Jet operator/(double c, Jet a) { return Jet{c, 0.0, 0.0} / a; }
inline Jet operator/(Jet a, double c) { return {a.v / c, a.d1 / c, a.d2 / c}; }
inline Jet log(Jet a) {
  return {std::log(a.v), a.d1 / a.v, (a.d2 * a.v - a.d1 * a.d1) / (a.v * a.v)};
}
inline Jet sqrt(Jet a) {
  const double s = std::sqrt(a.v);
  return {s, a.d1 / (2.0 * s), a.d2 / (2.0 * s) - a.d1 * a.d1 / (4.0 * s * s * s)};
}

namespace detail {

template <class T>
T quasi_power_A(T u) {
  using std::log;
  using std::sqrt;
  const double log2 = std::log(2.0);
  const T a = log(1.0 + 1.0 / u);
  return (2.0 * log2) / (a * u * (u + 1.0)) * sqrt((1.0 - log2) / (1.0 - u * a));
}

template <class T>
T quasi_power_B(T u) {
  using std::log;
  const double log2 = std::log(2.0);
  const T ratio = log2 / log(1.0 + 1.0 / u);
  return ratio * ratio;
}

}  // namespace detail

// Both require u > 0 (std::domain_error otherwise); A(1) = B(1) = 1.
double quasi_power_A(double u);
double quasi_power_B(double u);
// Exact (to rounding) derivatives of A and B at u.
Derivatives quasi_power_A_derivatives(double u = 1.0);
Derivatives quasi_power_B_derivatives(double u = 1.0);

// p_n(u) / (A(u) B(u)^n) - 1 with p_n(u) evaluated exactly at the rational
// value of u.
double quasi_power_residual(std::size_t n, double u);

// 2 (u+1)^3 log^3(1+1/u) (1 - u log(1+1/u))
double q_at_critical(double u);
// The same quantity assembled from the partial derivatives of H at (a, a).
double q_from_partials(double u);

// Standard normal CDF via erfc.
double gaussian_cdf(double x);

struct StandardizedDistribution {
  std::vector<double> points;  // (l - mu) / sigma
  std::vector<double> masses;
};

// Uses the exact mean and the exact variance (square root in floating point).
StandardizedDistribution standardize(const PathLengthDistribution& dist);

// sup_x |P(Y <= x) - Phi(x)| for the standardized variable, including the
// left limits at every atom.
double kolmogorov_to_gaussian(const PathLengthDistribution& dist);
double kolmogorov_to_gaussian(std::size_t n);

// Curvature of theta -> u(e^{r e^{i theta}} - 1), r = |log(1 + 1/u)|:
//     (1 + r cos theta) / (|u| r e^{r cos theta})
double curvature(double theta, double u);

struct MinimalityReport {
  double u = 0.0;
  std::size_t grid_size = 0;
  double exclusion_radius = 0.0;     // disk around (0,0) in angle space
  double abs_h_at_critical = 0.0;    // |H(a, a, u)|
  double min_abs_h_near_critical = 0.0;
  double min_abs_h_off_critical = 0.0;
  double back_arc_max = 0.0;    // max |u(e^{r e^{i theta}} - 1)|, pi/2 <= theta <= pi
  double back_arc_bound = 0.0;  // |u| sqrt((e^{-r} cos r - 1)^2 + sin^2 r)
  simd::Isa isa = simd::Isa::scalar;
  bool passed = false;
};

inline constexpr std::size_t kMinimalityMinGrid = 128;
inline constexpr double kMinimalityMaxDelta = 0.05;
inline constexpr double kMinimalityExclusionRadius = 0.25;
inline constexpr double kMinimalityFloor = 1e-3;

// Grid over the torus |x| = |y| = log(1 + 1/u). Throws std::invalid_argument
// for grid_size < 128 and std::domain_error for |u - 1| > 0.05.
MinimalityReport certify_strict_minimality(double u, std::size_t grid_size,
                                           simd::Isa isa = simd::active_isa());

}  // namespace lpath
