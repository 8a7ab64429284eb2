#include "lpath/series.hpp"

#include "lpath/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpath {

TruncatedSeries::TruncatedSeries(std::size_t order)
    : order_(order),
      u_cap_(2 * order + 1),
      coeffs_((order + 1) * (order + 1) * (2 * order + 2)) {}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const ExactRational& c) {
  return monomial(order, 0, 0, 0, c);
}

TruncatedSeries TruncatedSeries::u_monomial(std::size_t order, std::size_t power,
                                            const ExactRational& c) {
  return monomial(order, 0, 0, power, c);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t a, std::size_t b,
                                          std::size_t l, const ExactRational& c) {
  TruncatedSeries s(order);
  if (a <= order && b <= order && l <= s.u_cap_) s.coeffs_[s.index(a, b, l)] = c;
  return s;
}

const ExactRational& TruncatedSeries::coeff(std::size_t a, std::size_t b, std::size_t l) const {
  static const ExactRational zero(0);
  if (a > order_ || b > order_ || l > u_cap_) return zero;
  return coeffs_[index(a, b, l)];
}

void TruncatedSeries::set_coeff(std::size_t a, std::size_t b, std::size_t l,
                                const ExactRational& value) {
  if (a > order_ || b > order_ || l > u_cap_) {
    throw std::out_of_range("coefficient outside the truncation window");
  }
  coeffs_[index(a, b, l)] = value;
}

bool TruncatedSeries::block_is_zero(std::size_t a, std::size_t b) const {
  const auto first = coeffs_.begin() + static_cast<std::ptrdiff_t>(index(a, b, 0));
  return std::all_of(first, first + static_cast<std::ptrdiff_t>(u_cap_ + 1),
                     [](const ExactRational& c) { return c == 0; });
}

bool TruncatedSeries::constant_term_is_zero() const { return block_is_zero(0, 0); }

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (other.order_ != order_) throw std::invalid_argument("series orders differ");
}

TruncatedSeries TruncatedSeries::at_u(const ExactRational& value) const {
  TruncatedSeries out(order_);
  for (std::size_t a = 0; a <= order_; ++a) {
    for (std::size_t b = 0; b <= order_; ++b) {
      ExactRational acc = 0;
      for (std::size_t l = u_cap_ + 1; l-- > 0;) acc = acc * value + coeffs_[index(a, b, l)];
      out.coeffs_[out.index(a, b, 0)] = acc;
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::u_parity_part(unsigned parity) const {
  TruncatedSeries out(*this);
  for (std::size_t a = 0; a <= order_; ++a)
    for (std::size_t b = 0; b <= order_; ++b)
      for (std::size_t l = 0; l <= u_cap_; ++l)
        if (l % 2 != parity % 2) out.coeffs_[index(a, b, l)] = 0;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const ExactRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  lhs.check_compatible(rhs);
  const std::size_t n = lhs.order_;
  const std::size_t cap = lhs.u_cap_;

  // u-degree range actually occupied by each (a,b) block; empty blocks are
  // skipped entirely.
  struct Span {
    std::size_t lo = 1;
    std::size_t hi = 0;
  };
  auto spans = [&](const TruncatedSeries& s) {
    std::vector<Span> out((n + 1) * (n + 1));
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; b <= n; ++b) {
        Span& sp = out[a * (n + 1) + b];
        for (std::size_t l = 0; l <= cap; ++l) {
          if (s.coeffs_[s.index(a, b, l)] != 0) {
            if (sp.lo > sp.hi) sp.lo = l;
            sp.hi = l;
          }
        }
      }
    return out;
  };
  const auto ls = spans(lhs);
  const auto rs = spans(rhs);

  TruncatedSeries out(n);
  ExactRational term;
  for (std::size_t a1 = 0; a1 <= n; ++a1)
    for (std::size_t b1 = 0; b1 <= n; ++b1) {
      const Span& sl = ls[a1 * (n + 1) + b1];
      if (sl.lo > sl.hi) continue;
      for (std::size_t a2 = 0; a1 + a2 <= n; ++a2)
        for (std::size_t b2 = 0; b1 + b2 <= n; ++b2) {
          const Span& sr = rs[a2 * (n + 1) + b2];
          if (sr.lo > sr.hi) continue;
          for (std::size_t l1 = sl.lo; l1 <= sl.hi; ++l1) {
            const ExactRational& x = lhs.coeffs_[lhs.index(a1, b1, l1)];
            if (x == 0) continue;
            for (std::size_t l2 = sr.lo; l2 <= sr.hi && l1 + l2 <= cap; ++l2) {
              const ExactRational& y = rhs.coeffs_[rhs.index(a2, b2, l2)];
              if (y == 0) continue;
              mpq_mul(term.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
              out.coeffs_[out.index(a1 + a2, b1 + b2, l1 + l2)] += term;
            }
          }
        }
    }
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return order_ == other.order_ && coeffs_ == other.coeffs_;
}

TruncatedSeries series_exp_minus_one(Variable variable, std::size_t order) {
  TruncatedSeries s(order);
  ExactInt fact = 1;
  for (std::size_t a = 1; a <= order; ++a) {
    fact *= static_cast<unsigned long>(a);
    const ExactRational c = make_rational(1, fact);
    if (variable == Variable::x) {
      s.set_coeff(a, 0, 0, c);
    } else {
      s.set_coeff(0, a, 0, c);
    }
  }
  return s;
}

TruncatedSeries series_geometric(const TruncatedSeries& g) {
  if (!g.constant_term_is_zero()) {
    throw std::domain_error("geometric expansion needs a series vanishing at x = y = 0");
  }
  // Horner form S <- 1 + g*S. g^j has total (x,y)-degree >= j, so the
  // iteration is stationary after at most 2N+1 steps.
  const auto one = TruncatedSeries::one(g.order());
  TruncatedSeries sum = one;
  for (std::size_t step = 0; step <= 2 * g.order() + 1; ++step) {
    TruncatedSeries next = one + g * sum;
    if (next == sum) break;
    sum = std::move(next);
  }
  return sum;
}

namespace {

struct Building {
  TruncatedSeries ex;   // e^x - 1
  TruncatedSeries ey;   // e^y - 1
  TruncatedSeries exy;  // (e^x - 1)(e^y - 1)
};

Building building_blocks(std::size_t order) {
  auto ex = series_exp_minus_one(Variable::x, order);
  auto ey = series_exp_minus_one(Variable::y, order);
  auto exy = ex * ey;
  return {std::move(ex), std::move(ey), std::move(exy)};
}

TruncatedSeries exp_x_plus_y(const Building& blk, std::size_t order) {
  // e^(x+y) = (1 + (e^x-1)) (1 + (e^y-1))
  return TruncatedSeries::one(order) + blk.ex + blk.ey + blk.exy;
}

TruncatedSeries inverse_denominator(const Building& blk, std::size_t order) {
  return series_geometric(TruncatedSeries::u_monomial(order, 2) * blk.exy);
}

}  // namespace

TruncatedSeries expand_F(std::size_t order) {
  const auto blk = building_blocks(order);
  // (u-1)^2 = u^2 - 2u + 1
  const auto u_minus_one_sq = TruncatedSeries::u_monomial(order, 2) +
                              TruncatedSeries::u_monomial(order, 1, -2) +
                              TruncatedSeries::one(order);
  const auto numerator = exp_x_plus_y(blk, order) - u_minus_one_sq * blk.exy;
  return numerator * inverse_denominator(blk, order);
}

TruncatedSeries expand_B(std::size_t order) {
  const auto blk = building_blocks(order);
  return exp_x_plus_y(blk, order) * series_geometric(blk.exy);
}

ParityParts expand_parity_parts(std::size_t order) {
  const auto blk = building_blocks(order);
  const auto inv = inverse_denominator(blk, order);
  auto odd = TruncatedSeries::u_monomial(order, 1, 2) * blk.exy * inv;
  auto even = TruncatedSeries::one(order) + (blk.ex + blk.ey) * inv;
  return {std::move(odd), std::move(even)};
}

ExactRational scaled_coefficient(const TruncatedSeries& s, std::size_t n, std::size_t k,
                                 std::size_t l) {
  return s.coeff(n, k, l) * ExactRational(factorial(n) * factorial(k));
}

}  // namespace lpath
