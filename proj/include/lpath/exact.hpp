#pragma once

// Exact scalars. Every count and probability in the library is carried in
// these types; floating point only appears in the asymptotics layer.

#include <gmpxx.h>

#include <string>

namespace lpath {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// num/den in lowest terms with a positive denominator. Throws
/// std::domain_error when den is zero.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

double to_double(const ExactInt& value);
double to_double(const ExactRational& value);

/// Natural log of a positive integer of any size (no overflow to inf).
double log_of(const ExactInt& value);

std::string to_string(const ExactInt& value);
/// "p/q", or just "p" when q == 1.
std::string to_string(const ExactRational& value);

}  // namespace lpath
