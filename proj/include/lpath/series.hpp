#pragma once

// Truncated power series in x and y whose coefficients are polynomials in u
// with exact rational coefficients. The ring is
//     Q[u]/(u^(D+1)) [x, y] / (x^(N+1), y^(N+1)),   D = 2N + 1,
// i.e. degrees in x and in y are capped independently at N, and u-degree at
// the largest path length possible for part sizes <= N.

#include "lpath/exact.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lpath {

enum class Variable { x, y };

class TruncatedSeries {
 public:
  // The zero series.
  explicit TruncatedSeries(std::size_t order);

  static TruncatedSeries constant(std::size_t order, const ExactRational& c);
  static TruncatedSeries one(std::size_t order) { return constant(order, 1); }
  // c * u^power as a series (no x, y dependence).
  static TruncatedSeries u_monomial(std::size_t order, std::size_t power, const ExactRational& c = 1);
  // c * x^a y^b u^l; terms beyond the caps are dropped.
  static TruncatedSeries monomial(std::size_t order, std::size_t a, std::size_t b, std::size_t l,
                                  const ExactRational& c = 1);

  std::size_t order() const { return order_; }
  std::size_t u_degree_cap() const { return u_cap_; }

  // [x^a y^b u^l]; zero outside the stored range.
  const ExactRational& coeff(std::size_t a, std::size_t b, std::size_t l) const;
  void set_coeff(std::size_t a, std::size_t b, std::size_t l, const ExactRational& value);

  bool constant_term_is_zero() const;  // [x^0 y^0] is the zero polynomial in u

  // Substitute u = value.
  TruncatedSeries at_u(const ExactRational& value) const;
  // Keep only u-powers of the given parity (0 = even, 1 = odd).
  TruncatedSeries u_parity_part(unsigned parity) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const ExactRational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const ExactRational& s) { return a *= s; }
  friend TruncatedSeries operator*(const ExactRational& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  bool operator==(const TruncatedSeries& other) const;

 private:
  std::size_t index(std::size_t a, std::size_t b, std::size_t l) const {
    return (a * (order_ + 1) + b) * (u_cap_ + 1) + l;
  }
  bool block_is_zero(std::size_t a, std::size_t b) const;
  void check_compatible(const TruncatedSeries& other) const;

  std::size_t order_;
  std::size_t u_cap_;
  std::vector<ExactRational> coeffs_;
};

// e^v - 1 in the chosen variable: sum_{a>=1} v^a / a!.
TruncatedSeries series_exp_minus_one(Variable variable, std::size_t order);

// sum_{j>=0} g^j = 1/(1-g). Throws std::domain_error when g has a nonzero
// constant term, since the geometric expansion is then not the inverse.
TruncatedSeries series_geometric(const TruncatedSeries& g);

// (e^(x+y) - (u-1)^2 (e^x-1)(e^y-1)) / (1 - u^2 (e^x-1)(e^y-1))
TruncatedSeries expand_F(std::size_t order);

// e^(x+y) / (1 - (e^x-1)(e^y-1)), which equals e^(x+y)/(e^x + e^y - e^(x+y)).
TruncatedSeries expand_B(std::size_t order);

struct ParityParts {
  TruncatedSeries odd;   // 2u(e^x-1)(e^y-1) / (1 - u^2(e^x-1)(e^y-1))
  TruncatedSeries even;  // 1 + (e^x + e^y - 2) / (1 - u^2(e^x-1)(e^y-1))
};
ParityParts expand_parity_parts(std::size_t order);

// n! k! [x^n y^k u^l] of a series, i.e. the count it encodes.
ExactRational scaled_coefficient(const TruncatedSeries& s, std::size_t n, std::size_t k, std::size_t l);

}  // namespace lpath
