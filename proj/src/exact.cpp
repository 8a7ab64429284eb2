#include "lpath/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace lpath {

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const ExactInt& value) { return value.get_d(); }

double to_double(const ExactRational& value) {
  // mpq_get_d truncates but never overflows for ratios of huge integers.
  return value.get_d();
}

double log_of(const ExactInt& value) {
  if (value <= 0) throw std::domain_error("log of a nonpositive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

std::string to_string(const ExactInt& value) { return value.get_str(); }

std::string to_string(const ExactRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace lpath
