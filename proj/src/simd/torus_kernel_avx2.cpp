#include "lpath/simd/torus_kernel.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <limits>

namespace lpath::simd {

// Built with -mavx2 -mfma; only reached after a runtime CPU check.
double min_abs_one_minus_product_sq_avx2(double p_re, double p_im, std::span<const double> q_re,
                                         std::span<const double> q_im) {
  const std::size_t count = std::min(q_re.size(), q_im.size());
  const double* qr = q_re.data();
  const double* qi = q_im.data();

  const __m256d pr = _mm256_set1_pd(p_re);
  const __m256d pi = _mm256_set1_pd(p_im);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d a = _mm256_loadu_pd(qr + j);
    const __m256d b = _mm256_loadu_pd(qi + j);
    // re = 1 - (pr*a - pi*b), im = pr*b + pi*a
    const __m256d prod_re = _mm256_fmsub_pd(pr, a, _mm256_mul_pd(pi, b));
    const __m256d re = _mm256_sub_pd(one, prod_re);
    const __m256d im = _mm256_fmadd_pd(pr, b, _mm256_mul_pd(pi, a));
    const __m256d mag = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
    best = _mm256_min_pd(best, mag);
  }

  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
  if (j < count) {
    out = std::min(out, min_abs_one_minus_product_sq_scalar(p_re, p_im, q_re.subspan(j, count - j),
                                                           q_im.subspan(j, count - j)));
  }
  return out;
}

}  // namespace lpath::simd

#endif
