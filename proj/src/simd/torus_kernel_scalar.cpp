#include "lpath/simd/torus_kernel.hpp"

#include <algorithm>
#include <limits>

namespace lpath::simd {

double min_abs_one_minus_product_sq_scalar(double p_re, double p_im, std::span<const double> q_re,
                                           std::span<const double> q_im) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t count = std::min(q_re.size(), q_im.size());
  for (std::size_t j = 0; j < count; ++j) {
    const double re = 1.0 - (p_re * q_re[j] - p_im * q_im[j]);
    const double im = p_re * q_im[j] + p_im * q_re[j];
    best = std::min(best, re * re + im * im);
  }
  return best;
}

}  // namespace lpath::simd
