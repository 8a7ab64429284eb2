#include "lpath/simd/torus_kernel.hpp"

#include <cstdlib>
#include <string>

namespace lpath::simd {

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

MinAbsSqKernel kernel_for(Isa isa) {
  if (!isa_supported(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &min_abs_one_minus_product_sq_scalar;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return &min_abs_one_minus_product_sq_avx2;
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return &min_abs_one_minus_product_sq_neon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

namespace {

Isa detect() {
  if (const char* forced = std::getenv("LPATH_SIMD")) {
    const std::string want(forced);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == isa_name(isa) && isa_supported(isa)) return isa;
    }
  }
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa chosen = detect();
  return chosen;
}

double min_abs_one_minus_product_sq(double p_re, double p_im, std::span<const double> q_re,
                                    std::span<const double> q_im) {
  static const MinAbsSqKernel kernel = kernel_for(active_isa());
  return kernel(p_re, p_im, q_re, q_im);
}

}  // namespace lpath::simd
