#pragma once

// Inner loop of the strict-minimality grid: for a fixed complex p and a row
// of complex q_j, the minimum of |1 - p*q_j|^2. With p = u(e^x - 1) and
// q_j = u(e^y_j - 1) this is |H(x, y_j, u)|^2 for
// H = 1 - u^2 (e^x - 1)(e^y - 1).
//
// Variants: a portable scalar reference, AVX2+FMA (x86-64) and NEON
// (AArch64). The dispatched entry point picks the widest variant the CPU
// supports; LPATH_SIMD=scalar|avx2|neon overrides the choice.

#include <cstddef>
#include <span>
#include <string_view>

namespace lpath::simd {

enum class Isa { scalar, avx2, neon };

using MinAbsSqKernel = double (*)(double p_re, double p_im, std::span<const double> q_re,
                                  std::span<const double> q_im);

double min_abs_one_minus_product_sq_scalar(double p_re, double p_im, std::span<const double> q_re,
                                           std::span<const double> q_im);
#if defined(__x86_64__) || defined(_M_X64)
double min_abs_one_minus_product_sq_avx2(double p_re, double p_im, std::span<const double> q_re,
                                         std::span<const double> q_im);
#endif
#if defined(__aarch64__)
double min_abs_one_minus_product_sq_neon(double p_re, double p_im, std::span<const double> q_re,
                                         std::span<const double> q_im);
#endif

bool isa_supported(Isa isa);
Isa active_isa();
std::string_view isa_name(Isa isa);

// nullptr when the variant is not compiled in or not supported.
MinAbsSqKernel kernel_for(Isa isa);

double min_abs_one_minus_product_sq(double p_re, double p_im, std::span<const double> q_re,
                                    std::span<const double> q_im);

}  // namespace lpath::simd
