#include "lpath/simd/torus_kernel.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <limits>

namespace lpath::simd {

double min_abs_one_minus_product_sq_neon(double p_re, double p_im, std::span<const double> q_re,
                                         std::span<const double> q_im) {
  const std::size_t count = std::min(q_re.size(), q_im.size());
  const double* qr = q_re.data();
  const double* qi = q_im.data();

  const float64x2_t pr = vdupq_n_f64(p_re);
  const float64x2_t pi = vdupq_n_f64(p_im);
  const float64x2_t one = vdupq_n_f64(1.0);
  float64x2_t best = vdupq_n_f64(std::numeric_limits<double>::infinity());

  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const float64x2_t a = vld1q_f64(qr + j);
    const float64x2_t b = vld1q_f64(qi + j);
    const float64x2_t prod_re = vfmsq_f64(vmulq_f64(pr, a), pi, b);  // pr*a - pi*b
    const float64x2_t re = vsubq_f64(one, prod_re);
    const float64x2_t im = vfmaq_f64(vmulq_f64(pi, a), pr, b);       // pi*a + pr*b
    const float64x2_t mag = vfmaq_f64(vmulq_f64(im, im), re, re);
    best = vminq_f64(best, mag);
  }

  double out = vminvq_f64(best);
  if (j < count) {
    out = std::min(out, min_abs_one_minus_product_sq_scalar(p_re, p_im, q_re.subspan(j, count - j),
                                                           q_im.subspan(j, count - j)));
  }
  return out;
}

}  // namespace lpath::simd

#endif
