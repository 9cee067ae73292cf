// AVX2 variant: four states per iteration, operation-for-operation the same
// sequence as kernels_scalar.cpp (see the contract note there). Compiled
// with -mavx2 -ffp-contract=off; the tail runs through the scalar kernel.

#include <stdexcept>

#include "kernels_internal.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace qmagic::kernels::detail {

void measure_batch_avx2_raw(const BatchView& in, const MeasureOut& out) {
  const std::size_t n4 = in.n & ~std::size_t(3);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d quarter = _mm256_set1_pd(0.25);

  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d ar = _mm256_loadu_pd(in.ar + i), ai = _mm256_loadu_pd(in.ai + i);
    const __m256d br = _mm256_loadu_pd(in.br + i), bi = _mm256_loadu_pd(in.bi + i);
    const __m256d cr = _mm256_loadu_pd(in.cr + i), ci = _mm256_loadu_pd(in.ci + i);
    const __m256d dr = _mm256_loadu_pd(in.dr + i), di = _mm256_loadu_pd(in.di + i);

    auto mul = [](__m256d a, __m256d b) { return _mm256_mul_pd(a, b); };
    auto add = [](__m256d a, __m256d b) { return _mm256_add_pd(a, b); };
    auto sub = [](__m256d a, __m256d b) { return _mm256_sub_pd(a, b); };

    const __m256d naa = add(mul(ar, ar), mul(ai, ai));
    const __m256d nbb = add(mul(br, br), mul(bi, bi));
    const __m256d ncc = add(mul(cr, cr), mul(ci, ci));
    const __m256d ndd = add(mul(dr, dr), mul(di, di));

    const __m256d re_ab = add(mul(ar, br), mul(ai, bi)), im_ab = sub(mul(ar, bi), mul(ai, br));
    const __m256d re_cd = add(mul(cr, dr), mul(ci, di)), im_cd = sub(mul(cr, di), mul(ci, dr));
    const __m256d re_ac = add(mul(ar, cr), mul(ai, ci)), im_ac = sub(mul(ar, ci), mul(ai, cr));
    const __m256d re_bd = add(mul(br, dr), mul(bi, di)), im_bd = sub(mul(br, di), mul(bi, dr));
    const __m256d re_ad = add(mul(ar, dr), mul(ai, di)), im_ad = sub(mul(ar, di), mul(ai, dr));
    const __m256d re_bc = add(mul(br, cr), mul(bi, ci)), im_bc = sub(mul(br, ci), mul(bi, cr));

    const __m256d e[16] = {
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

    __m256d sumsq = _mm256_setzero_pd();
    __m256d sum4 = _mm256_setzero_pd();
    for (int k = 0; k < 16; ++k) {
      const __m256d q = mul(e[k], e[k]);
      sumsq = add(sumsq, q);
      sum4 = add(sum4, mul(q, q));
    }

    const __m256d x = sub(sub(mul(ar, dr), mul(ai, di)), sub(mul(br, cr), mul(bi, ci)));
    const __m256d y = sub(add(mul(ar, di), mul(ai, dr)), add(mul(br, ci), mul(bi, cr)));
    __m256d delta = mul(two, _mm256_sqrt_pd(add(mul(x, x), mul(y, y))));
    delta = _mm256_min_pd(delta, one);

    _mm256_storeu_pd(out.delta + i, delta);
    _mm256_storeu_pd(out.sumsq + i, sumsq);
    _mm256_storeu_pd(out.m2 + i, mul(sum4, quarter));
  }

  if (n4 < in.n) {
    const BatchView tail{in.ar + n4, in.ai + n4, in.br + n4, in.bi + n4,
                         in.cr + n4, in.ci + n4, in.dr + n4, in.di + n4,
                         in.n - n4};
    const MeasureOut tout{out.delta + n4, out.m2 + n4, out.sumsq + n4};
    measure_batch_scalar_raw(tail, tout);
  }
}

}  // namespace qmagic::kernels::detail

namespace qmagic::kernels {

void measure_batch_avx2(const BatchView& in, const MeasureOut& out) {
  detail::measure_batch_avx2_raw(in, out);
  detail::finalize_m2(out.m2, in.n);
}

}  // namespace qmagic::kernels

#else  // non-x86 build: keep the symbol, route through the dispatcher error

namespace qmagic::kernels::detail {
void measure_batch_avx2_raw(const BatchView&, const MeasureOut&) {
  throw std::runtime_error("AVX2 kernel not built for this architecture");
}
}  // namespace qmagic::kernels::detail

namespace qmagic::kernels {
void measure_batch_avx2(const BatchView&, const MeasureOut&) {
  throw std::runtime_error("AVX2 kernel not built for this architecture");
}
}  // namespace qmagic::kernels

#endif
