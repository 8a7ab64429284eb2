#include "lpath/verify.hpp"

#include "lpath/combinatorics.hpp"
#include "lpath/orientation.hpp"
#include "lpath/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lpath {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string describe(const PathLengthDistribution& d) {
  std::ostringstream os;
  os << '{';
  for (std::size_t l = 0; l < d.counts.size(); ++l) {
    if (l > 0) os << ", ";
    os << l << ": " << d.counts[l].get_str();
  }
  os << "} total " << d.total.get_str();
  return os.str();
}

CheckResult oracle_check(std::size_t n, std::size_t k, const VerifyOptions& options) {
  CheckResult r;
  r.name = "oracle K_{" + std::to_string(n) + "," + std::to_string(k) + "}";
  auto formula = longest_path_counts(n, k);
  if (options.tamper) options.tamper(formula);
  const auto brute = brute_force_distribution(n, k);
  r.passed = formula == brute;
  r.detail = r.passed ? "counts match, total " + brute.total.get_str()
                      : "formula " + describe(formula) + " vs enumeration " + describe(brute);
  return r;
}

CheckResult bijection_check(std::size_t n, std::size_t k) {
  CheckResult r;
  r.name = "bijection " + std::to_string(n) + "x" + std::to_string(k);
  std::uint64_t lonesum = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * k)); ++mask) {
    const auto m = OrientationMatrix::from_mask(n, k, mask);
    const bool acyclic = is_acyclic(m);
    if (acyclic != is_lonesum(m) || is_lonesum(m) == has_forbidden_minor(m)) {
      r.passed = false;
      r.detail = "acyclic/lonesum disagree at mask " + std::to_string(mask);
      return r;
    }
    if (!acyclic) continue;
    ++lonesum;
    if (longest_path_via_classes(m) != longest_path_dag(m)) {
      r.passed = false;
      r.detail = "path length disagrees at mask " + std::to_string(mask);
      return r;
    }
  }
  if (poly_bernoulli(n, k) != lonesum) {
    r.passed = false;
    r.detail = std::to_string(lonesum) + " lonesum matrices, expected " + poly_bernoulli(n, k).get_str();
    return r;
  }
  r.detail = std::to_string(lonesum) + " acyclic orientations";
  return r;
}

}  // namespace

std::vector<CheckResult> series_checks(std::size_t order) {
  std::vector<CheckResult> out;
  const auto F = expand_F(order);

  CheckResult coeffs{"series F(x,y,u) order " + std::to_string(order), true, ""};
  for (std::size_t n = 1; n <= order && coeffs.passed; ++n)
    for (std::size_t k = 1; k <= order && coeffs.passed; ++k) {
      const auto dist = longest_path_counts(n, k);
      for (std::size_t l = 0; l <= F.u_degree_cap(); ++l) {
        const ExactRational expected = l < dist.counts.size() ? ExactRational(dist.counts[l]) : 0;
        if (scaled_coefficient(F, n, k, l) != expected) {
          coeffs.passed = false;
          coeffs.detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                          " l=" + std::to_string(l);
          break;
        }
      }
    }
  if (coeffs.passed && F.coeff(0, 0, 0) != 1) {
    coeffs.passed = false;
    coeffs.detail = "empty-graph coefficient is not 1";
  }
  if (coeffs.passed) coeffs.detail = "all coefficients match for n,k <= " + std::to_string(order);
  out.push_back(coeffs);

  CheckResult at_one{"series F(x,y,1) = B(x,y)", true, ""};
  const auto B = expand_B(order);
  at_one.passed = F.at_u(1) == B;
  for (std::size_t n = 0; n <= order && at_one.passed; ++n)
    for (std::size_t k = 0; k <= order && at_one.passed; ++k)
      if (scaled_coefficient(B, n, k, 0) != ExactRational(poly_bernoulli(n, k))) {
        at_one.passed = false;
        at_one.detail = "B coefficient mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
  if (at_one.passed) at_one.detail = "u = 1 specialization equals the poly-Bernoulli series";
  else if (at_one.detail.empty()) at_one.detail = "F(x,y,1) differs from B(x,y)";
  out.push_back(at_one);

  CheckResult parity{"series odd + even = F", true, ""};
  const auto parts = expand_parity_parts(order);
  parity.passed = parts.odd + parts.even == F && parts.odd == F.u_parity_part(1) &&
                  parts.even == F.u_parity_part(0);
  parity.detail = parity.passed ? "parity decomposition exact" : "parity decomposition differs from F";
  out.push_back(parity);
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.max_nk > kBruteForceMaxEdges) {
    throw std::length_error("verify is limited to n*k <= 20");
  }
  VerifyReport report;
  for (std::size_t n = 1; n <= options.max_nk; ++n)
    for (std::size_t k = 1; n * k <= options.max_nk; ++k) report.checks.push_back(oracle_check(n, k, options));

  const std::size_t bij_limit = std::min<std::size_t>(options.max_nk, 12);
  for (std::size_t n = 1; n <= bij_limit; ++n)
    for (std::size_t k = 1; n * k <= bij_limit; ++k) report.checks.push_back(bijection_check(n, k));

  const auto order = std::min<std::size_t>(8, static_cast<std::size_t>(std::sqrt(static_cast<double>(options.max_nk))));
  if (order >= 1) {
    for (auto& c : series_checks(order)) report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace lpath
