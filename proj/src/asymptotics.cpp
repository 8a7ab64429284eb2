#include "lpath/asymptotics.hpp"

#include "lpath/combinatorics.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lpath {

namespace {

const double kLog2 = std::numbers::ln2;

}  // namespace

AsymptoticEstimate mean_asymptotic() {
  const double t = kLog2;
  return {1.0 / t, (8.0 * t * t - 9.0 * t + 2.0) / (4.0 * t * (1.0 - t))};
}

AsymptoticEstimate variance_asymptotic() {
  const double t = kLog2;
  const double t2 = t * t;
  return {(1.0 - t) / (2.0 * t2),
          (-2.0 * t2 * t2 + t2 * t + 2.0 * t2 - 6.0 * t + 2.0) / (8.0 * t2 * (1.0 - t) * (1.0 - t))};
}

AsymptoticEstimate mean_from_quasi_power() {
  return {m_functional(quasi_power_B_derivatives()), m_functional(quasi_power_A_derivatives())};
}

AsymptoticEstimate variance_from_quasi_power() {
  return {v_functional(quasi_power_B_derivatives()), v_functional(quasi_power_A_derivatives())};
}

double log_pb_diagonal_asymptotic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("diagonal asymptotic needs n >= 1");
  const double nd = static_cast<double>(n);
  return 2.0 * std::lgamma(nd + 1.0) -
         0.5 * std::log(nd * std::numbers::pi * (1.0 - kLog2)) -
         (2.0 * nd + 1.0) * std::log(kLog2);
}

double pb_diagonal_ratio(std::size_t n) {
  return std::exp(log_pb_diagonal_asymptotic(n) - log_of(poly_bernoulli(n, n)));
}

Derivatives central_differences(const std::function<double(double)>& f, double at, double step,
                                double second_step) {
  const double h = second_step;
  const double samples[] = {f(at - step), f(at), f(at + step), f(at - 2 * h), f(at - h), f(at + h),
                            f(at + 2 * h)};
  for (double v : samples) {
    if (!std::isfinite(v)) throw std::domain_error("function is not finite near the evaluation point");
  }
  const auto [minus, mid, plus, m2, m1, p1, p2] = samples;
  // Five-point stencil: O(h^4) truncation with roundoff near eps / h^2.
  const double second = (-p2 + 16.0 * p1 - 30.0 * mid + 16.0 * m1 - m2) / (12.0 * h * h);
  return {mid, (plus - minus) / (2.0 * step), second};
}

double m_functional(const Derivatives& d) {
  if (d.value == 0.0) throw std::domain_error("m(f) needs f != 0 at the evaluation point");
  return d.first / d.value;
}

double v_functional(const Derivatives& d) {
  const double m = m_functional(d);
  return d.second / d.value + m - m * m;
}

double m_functional(const std::function<double(double)>& f) {
  return m_functional(central_differences(f));
}

double v_functional(const std::function<double(double)>& f) {
  return v_functional(central_differences(f));
}

namespace {

void check_u(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw std::domain_error("quasi-power factors need u > 0");
}

}  // namespace

double quasi_power_A(double u) {
  check_u(u);
  return detail::quasi_power_A(u);
}

double quasi_power_B(double u) {
  check_u(u);
  return detail::quasi_power_B(u);
}

Derivatives quasi_power_A_derivatives(double u) {
  check_u(u);
  const Jet j = detail::quasi_power_A(Jet::variable(u));
  return {j.v, j.d1, j.d2};
}

Derivatives quasi_power_B_derivatives(double u) {
  check_u(u);
  const Jet j = detail::quasi_power_B(Jet::variable(u));
  return {j.v, j.d1, j.d2};
}

double quasi_power_residual(std::size_t n, double u) {
  const auto p = pgf(n, n);
  const double exact = to_double(p.evaluate(ExactRational(u)));
  return exact / (quasi_power_A(u) * std::pow(quasi_power_B(u), static_cast<double>(n))) - 1.0;
}

double q_at_critical(double u) {
  const double a = std::log(1.0 + 1.0 / u);
  const double up1 = u + 1.0;
  return 2.0 * up1 * up1 * up1 * a * a * a * (1.0 - u * a);
}

double q_from_partials(double u) {
  const double x = std::log(1.0 + 1.0 / u);
  const double y = x;
  const double u2 = u * u;
  const double ex = std::exp(x);
  const double ey = std::exp(y);
  const double hx = -u2 * ex * (ey - 1.0);
  const double hy = -u2 * (ex - 1.0) * ey;
  const double hxx = hx;
  const double hyy = hy;
  const double hxy = -u2 * ex * ey;
  return -y * y * hy * hy * x * hx - y * hy * x * x * hx * hx -
         x * x * y * y * (hy * hy * hxx + hx * hx * hyy - 2.0 * hx * hy * hxy);
}

double gaussian_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

StandardizedDistribution standardize(const PathLengthDistribution& dist) {
  const auto mom = moments(dist);
  const double mu = to_double(mom.mean);
  const double sigma = std::sqrt(to_double(mom.variance));
  if (!(sigma > 0.0)) throw std::domain_error("cannot standardize a degenerate distribution");
  StandardizedDistribution s;
  for (std::size_t l = 0; l < dist.counts.size(); ++l) {
    if (dist.counts[l] == 0) continue;
    s.points.push_back((static_cast<double>(l) - mu) / sigma);
    s.masses.push_back(to_double(make_rational(dist.counts[l], dist.total)));
  }
  return s;
}

double kolmogorov_to_gaussian(const PathLengthDistribution& dist) {
  const auto s = standardize(dist);
  double cdf = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const double phi = gaussian_cdf(s.points[i]);
    worst = std::max(worst, std::abs(cdf - phi));  // left limit
    cdf += s.masses[i];
    worst = std::max(worst, std::abs(cdf - phi));
  }
  return worst;
}

double kolmogorov_to_gaussian(std::size_t n) { return kolmogorov_to_gaussian(longest_path_counts(n, n)); }

double curvature(double theta, double u) {
  const double r = std::abs(std::log(1.0 + 1.0 / u));
  const double rc = r * std::cos(theta);
  return (1.0 + rc) / (std::abs(u) * r * std::exp(rc));
}

MinimalityReport certify_strict_minimality(double u, std::size_t grid_size, simd::Isa isa) {
  if (grid_size < kMinimalityMinGrid) {
    throw std::invalid_argument("minimality grid needs at least 128 points per axis");
  }
  if (!(std::abs(u - 1.0) <= kMinimalityMaxDelta)) {
    throw std::domain_error("minimality certification is for |u - 1| <= 0.05");
  }
  const auto kernel = simd::kernel_for(isa);
  if (kernel == nullptr) throw std::invalid_argument("requested SIMD variant is not available");

  using cplx = std::complex<double>;
  const double r = std::log(1.0 + 1.0 / u);
  const double pi = std::numbers::pi;

  // theta_i = -pi + 2 pi i / G; i = G/2 is theta = 0 for even G.
  std::vector<double> theta(grid_size);
  std::vector<double> re(grid_size);
  std::vector<double> im(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    theta[i] = -pi + 2.0 * pi * static_cast<double>(i) / static_cast<double>(grid_size);
    const cplx w = u * (std::exp(r * std::polar(1.0, theta[i])) - 1.0);
    re[i] = w.real();
    im[i] = w.imag();
  }

  MinimalityReport rep;
  rep.u = u;
  rep.grid_size = grid_size;
  rep.exclusion_radius = kMinimalityExclusionRadius;
  rep.isa = isa;
  const cplx at_critical = u * (std::exp(cplx(r, 0.0)) - 1.0);
  rep.abs_h_at_critical = std::abs(1.0 - at_critical * at_critical);

  const std::span<const double> all_re(re);
  const std::span<const double> all_im(im);
  const double rho = kMinimalityExclusionRadius;
  double off = std::numeric_limits<double>::infinity();
  double near = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_size; ++i) {
    // Columns with theta_i^2 + theta_j^2 < rho^2 form one contiguous run.
    std::size_t lo = grid_size;
    std::size_t hi = grid_size;
    if (std::abs(theta[i]) < rho) {
      const double half = std::sqrt(rho * rho - theta[i] * theta[i]);
      lo = static_cast<std::size_t>(std::lower_bound(theta.begin(), theta.end(), -half) - theta.begin());
      hi = static_cast<std::size_t>(std::lower_bound(theta.begin(), theta.end(), half) - theta.begin());
      while (lo < hi && !(theta[lo] > -half)) ++lo;
    }
    off = std::min(off, kernel(re[i], im[i], all_re.subspan(0, lo), all_im.subspan(0, lo)));
    if (hi < grid_size) {
      off = std::min(off, kernel(re[i], im[i], all_re.subspan(hi), all_im.subspan(hi)));
    }
    if (lo < hi) {
      near = std::min(near, kernel(re[i], im[i], all_re.subspan(lo, hi - lo),
                                   all_im.subspan(lo, hi - lo)));
    }
  }
  rep.min_abs_h_off_critical = std::sqrt(off);
  rep.min_abs_h_near_critical = std::sqrt(near);

  rep.back_arc_max = 0.0;
  for (std::size_t i = 0; i <= grid_size; ++i) {
    const double t = pi / 2.0 + (pi / 2.0) * static_cast<double>(i) / static_cast<double>(grid_size);
    rep.back_arc_max = std::max(rep.back_arc_max, std::abs(u * (std::exp(r * std::polar(1.0, t)) - 1.0)));
  }
  const double c = std::exp(-r) * std::cos(r) - 1.0;
  const double s = std::sin(r);
  rep.back_arc_bound = std::abs(u) * std::sqrt(c * c + s * s);

  rep.passed = rep.abs_h_at_critical < 1e-12 && rep.min_abs_h_off_critical > kMinimalityFloor &&
               rep.back_arc_max <= rep.back_arc_bound && rep.back_arc_bound < 1.0;
  return rep;
}

}  // namespace lpath
