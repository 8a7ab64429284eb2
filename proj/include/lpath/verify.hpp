#pragma once

// Cross-checks between the independent routes to the same numbers: the
// class-count formula against brute-force enumeration, the closed-form
// generating function against the formula, and the acyclic/lonesum
// equivalence. Used by the `verify` and `series-check` CLI commands.

#include "lpath/distribution.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lpath {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample or summary
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  std::size_t max_nk = 16;
  // Applied to every formula-side distribution before comparison; lets
  // tests inject faults into the pipeline.
  std::function<void(PathLengthDistribution&)> tamper;
};

// Oracle equality for 1 <= n,k with nk <= max_nk, the bijection and
// path-length equivalence for nk <= min(max_nk, 12), and the series identity
// at order floor(sqrt(max_nk)) capped at 8. Throws std::length_error when
// max_nk exceeds the brute-force budget of 20.
VerifyReport run_verification(const VerifyOptions& options);

// Series identities at one order: coefficients of the closed form against
// the formula counts, u = 1 against the poly-Bernoulli series, and the
// odd + even decomposition.
std::vector<CheckResult> series_checks(std::size_t order);

}  // namespace lpath
