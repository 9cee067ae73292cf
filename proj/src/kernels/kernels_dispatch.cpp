#include <cmath>
#include <stdexcept>

#include "kernels_internal.hpp"

namespace qmagic::kernels {

namespace detail {

void finalize_m2(double* m2, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double m = -std::log(m2[i]);
    m2[i] = (m < 0.0) ? 0.0 : m;
  }
}

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

}  // namespace

}  // namespace detail

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

Backend active_backend(Backend requested) {
  switch (requested) {
    case Backend::Auto:
#if defined(__aarch64__)
      return Backend::Neon;
#else
      return detail::cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
#endif
    case Backend::Scalar:
      return Backend::Scalar;
    case Backend::Avx2:
      if (!detail::cpu_has_avx2())
        throw std::runtime_error("measure_batch: AVX2 requested but unavailable");
      return Backend::Avx2;
    case Backend::Neon:
#if defined(__aarch64__)
      return Backend::Neon;
#else
      throw std::runtime_error("measure_batch: NEON requested but unavailable");
#endif
  }
  throw std::runtime_error("measure_batch: unknown backend");
}

void measure_batch(const BatchView& in, const MeasureOut& out, Backend backend) {
  switch (active_backend(backend)) {
    case Backend::Avx2:
      measure_batch_avx2(in, out);
      return;
    case Backend::Neon:
      measure_batch_neon(in, out);
      return;
    default:
      measure_batch_scalar(in, out);
      return;
  }
}

}  // namespace qmagic::kernels
