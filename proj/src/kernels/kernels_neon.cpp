// NEON variant (aarch64): two states per iteration, same operation sequence
// as kernels_scalar.cpp. Compiled with -ffp-contract=off.

#include <stdexcept>

#include "kernels_internal.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace qmagic::kernels::detail {

void measure_batch_neon_raw(const BatchView& in, const MeasureOut& out) {
  const std::size_t n2 = in.n & ~std::size_t(1);
  const float64x2_t two = vdupq_n_f64(2.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t quarter = vdupq_n_f64(0.25);

  for (std::size_t i = 0; i < n2; i += 2) {
    const float64x2_t ar = vld1q_f64(in.ar + i), ai = vld1q_f64(in.ai + i);
    const float64x2_t br = vld1q_f64(in.br + i), bi = vld1q_f64(in.bi + i);
    const float64x2_t cr = vld1q_f64(in.cr + i), ci = vld1q_f64(in.ci + i);
    const float64x2_t dr = vld1q_f64(in.dr + i), di = vld1q_f64(in.di + i);

    auto mul = [](float64x2_t a, float64x2_t b) { return vmulq_f64(a, b); };
    auto add = [](float64x2_t a, float64x2_t b) { return vaddq_f64(a, b); };
    auto sub = [](float64x2_t a, float64x2_t b) { return vsubq_f64(a, b); };

    const float64x2_t naa = add(mul(ar, ar), mul(ai, ai));
    const float64x2_t nbb = add(mul(br, br), mul(bi, bi));
    const float64x2_t ncc = add(mul(cr, cr), mul(ci, ci));
    const float64x2_t ndd = add(mul(dr, dr), mul(di, di));

    const float64x2_t re_ab = add(mul(ar, br), mul(ai, bi)), im_ab = sub(mul(ar, bi), mul(ai, br));
    const float64x2_t re_cd = add(mul(cr, dr), mul(ci, di)), im_cd = sub(mul(cr, di), mul(ci, dr));
    const float64x2_t re_ac = add(mul(ar, cr), mul(ai, ci)), im_ac = sub(mul(ar, ci), mul(ai, cr));
    const float64x2_t re_bd = add(mul(br, dr), mul(bi, di)), im_bd = sub(mul(br, di), mul(bi, dr));
    const float64x2_t re_ad = add(mul(ar, dr), mul(ai, di)), im_ad = sub(mul(ar, di), mul(ai, dr));
    const float64x2_t re_bc = add(mul(br, cr), mul(bi, ci)), im_bc = sub(mul(br, ci), mul(bi, cr));

    const float64x2_t e[16] = {
        add(add(naa, nbb), add(ncc, ndd)),
        mul(two, add(re_ab, re_cd)),
        mul(two, add(im_ab, im_cd)),
        add(sub(naa, nbb), sub(ncc, ndd)),
        mul(two, add(re_ac, re_bd)),
        mul(two, add(re_ad, re_bc)),
        mul(two, sub(im_ad, im_bc)),
        mul(two, sub(re_ac, re_bd)),
        mul(two, add(im_ac, im_bd)),
        mul(two, add(im_ad, im_bc)),
        mul(two, sub(re_bc, re_ad)),
        mul(two, sub(im_ac, im_bd)),
        sub(add(naa, nbb), add(ncc, ndd)),
        mul(two, sub(re_ab, re_cd)),
        mul(two, sub(im_ab, im_cd)),
        sub(sub(naa, nbb), sub(ncc, ndd)),
    };

    float64x2_t sumsq = vdupq_n_f64(0.0);
    float64x2_t sum4 = vdupq_n_f64(0.0);
    for (int k = 0; k < 16; ++k) {
      const float64x2_t q = mul(e[k], e[k]);
      sumsq = add(sumsq, q);
      sum4 = add(sum4, mul(q, q));
    }

    const float64x2_t x = sub(sub(mul(ar, dr), mul(ai, di)), sub(mul(br, cr), mul(bi, ci)));
    const float64x2_t y = sub(add(mul(ar, di), mul(ai, dr)), add(mul(br, ci), mul(bi, cr)));
    float64x2_t delta = mul(two, vsqrtq_f64(add(mul(x, x), mul(y, y))));
    delta = vminq_f64(delta, one);

    vst1q_f64(out.delta + i, delta);
    vst1q_f64(out.sumsq + i, sumsq);
    vst1q_f64(out.m2 + i, mul(sum4, quarter));
  }

  if (n2 < in.n) {
    const BatchView tail{in.ar + n2, in.ai + n2, in.br + n2, in.bi + n2,
                         in.cr + n2, in.ci + n2, in.dr + n2, in.di + n2,
                         in.n - n2};
    const MeasureOut tout{out.delta + n2, out.m2 + n2, out.sumsq + n2};
    measure_batch_scalar_raw(tail, tout);
  }
}

}  // namespace qmagic::kernels::detail

namespace qmagic::kernels {

void measure_batch_neon(const BatchView& in, const MeasureOut& out) {
  detail::measure_batch_neon_raw(in, out);
  detail::finalize_m2(out.m2, in.n);
}

}  // namespace qmagic::kernels

#else

namespace qmagic::kernels::detail {
void measure_batch_neon_raw(const BatchView&, const MeasureOut&) {
  throw std::runtime_error("NEON kernel not built for this architecture");
}
}  // namespace qmagic::kernels::detail

namespace qmagic::kernels {
void measure_batch_neon(const BatchView&, const MeasureOut&) {
  throw std::runtime_error("NEON kernel not built for this architecture");
}
}  // namespace qmagic::kernels

#endif
