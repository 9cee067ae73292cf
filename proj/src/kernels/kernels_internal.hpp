#pragma once

#include "qmagic/kernels.hpp"

namespace qmagic::kernels::detail {

// Raw kernels fill delta, sumsq and the *pre-log* magic value
// sum4/4 into out.m2; finalize_m2 turns that into -log(.) clamped at 0.
// Keeping the log in one shared scalar pass is what makes the backends
// bit-identical end to end.
void measure_batch_scalar_raw(const BatchView& in, const MeasureOut& out);
void measure_batch_avx2_raw(const BatchView& in, const MeasureOut& out);
void measure_batch_neon_raw(const BatchView& in, const MeasureOut& out);

void finalize_m2(double* m2, std::size_t n);

}  // namespace qmagic::kernels::detail
