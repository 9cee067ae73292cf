#pragma once

#include <cstddef>
#include <string_view>

namespace qmagic::kernels {

// Batch evaluation of (concurrence, magic, purity) over many states in
// structure-of-arrays layout. One scalar reference kernel plus SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected at runtime.
//
// Equivalence contract: every backend produces bit-identical output for
// identical input. The vector kernels perform exactly the same IEEE
// operations lane-wise as the scalar kernel (no FMA contraction, same
// accumulation order), and the final log lives in a shared scalar pass.

struct BatchView {
  const double* ar;
  const double* ai;
  const double* br;
  const double* bi;
  const double* cr;
  const double* ci;
  const double* dr;
  const double* di;
  std::size_t n;
};

// delta: 2|ad - bc| clamped to [0,1];
// m2:    -ln(sum_P <P>^4 / 4), clamped at 0 from below;
// sumsq: sum_P <P>^2 (equals 4 for normalized pure states).
struct MeasureOut {
  double* delta;
  double* m2;
  double* sumsq;
};

enum class Backend { Auto, Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

// Resolves Auto to the best backend supported by this CPU. Throws
// std::runtime_error when an explicitly requested backend is unavailable.
Backend active_backend(Backend requested = Backend::Auto);

void measure_batch(const BatchView& in, const MeasureOut& out,
                   Backend backend = Backend::Auto);

// Internal per-backend entry points (exposed for the equivalence tests).
void measure_batch_scalar(const BatchView& in, const MeasureOut& out);
void measure_batch_avx2(const BatchView& in, const MeasureOut& out);
void measure_batch_neon(const BatchView& in, const MeasureOut& out);

}  // namespace qmagic::kernels
