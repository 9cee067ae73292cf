// Scalar reference kernel. The SIMD variants replay exactly this operation
// sequence lane-wise (same products, same accumulation order, no FMA
// contraction), so their outputs are bit-identical to this code. Any change
// here must be mirrored in kernels_avx2.cpp / kernels_neon.cpp.
//
// Expectation values from amplitudes (psi = (a,b,c,d), pab = conj(a)*b etc.):
//   IX = 2 Re(pab+pcd)   IY = 2 Im(pab+pcd)   ZX = 2 Re(pab-pcd)   ZY = 2 Im(pab-pcd)
//   XI = 2 Re(pac+pbd)   YI = 2 Im(pac+pbd)   XZ = 2 Re(pac-pbd)   YZ = 2 Im(pac-pbd)
//   XX = 2 Re(pad+pbc)   YX = 2 Im(pad+pbc)   YY = 2 Re(pbc-pad)   XY = 2 Im(pad-pbc)
//   II/IZ/ZI/ZZ from the four amplitude norms.

#include <cmath>

#include "kernels_internal.hpp"

namespace qmagic::kernels {

namespace detail {

void measure_batch_scalar_raw(const BatchView& in, const MeasureOut& out) {
  for (std::size_t i = 0; i < in.n; ++i) {
    const double ar = in.ar[i], ai = in.ai[i];
    const double br = in.br[i], bi = in.bi[i];
    const double cr = in.cr[i], ci = in.ci[i];
    const double dr = in.dr[i], di = in.di[i];

    const double naa = ar * ar + ai * ai;
    const double nbb = br * br + bi * bi;
    const double ncc = cr * cr + ci * ci;
    const double ndd = dr * dr + di * di;

    const double re_ab = ar * br + ai * bi, im_ab = ar * bi - ai * br;
    const double re_cd = cr * dr + ci * di, im_cd = cr * di - ci * dr;
    const double re_ac = ar * cr + ai * ci, im_ac = ar * ci - ai * cr;
    const double re_bd = br * dr + bi * di, im_bd = br * di - bi * dr;
    const double re_ad = ar * dr + ai * di, im_ad = ar * di - ai * dr;
    const double re_bc = br * cr + bi * ci, im_bc = br * ci - bi * cr;

    // index order II, IX, IY, IZ, XI, XX, XY, XZ, YI, YX, YY, YZ, ZI, ZX, ZY, ZZ
    const double e[16] = {
        (naa + nbb) + (ncc + ndd),
        2.0 * (re_ab + re_cd),
        2.0 * (im_ab + im_cd),
        (naa - nbb) + (ncc - ndd),
        2.0 * (re_ac + re_bd),
        2.0 * (re_ad + re_bc),
        2.0 * (im_ad - im_bc),
        2.0 * (re_ac - re_bd),
        2.0 * (im_ac + im_bd),
        2.0 * (im_ad + im_bc),
        2.0 * (re_bc - re_ad),
        2.0 * (im_ac - im_bd),
        (naa + nbb) - (ncc + ndd),
        2.0 * (re_ab - re_cd),
        2.0 * (im_ab - im_cd),
        (naa - nbb) - (ncc - ndd),
    };

    double sumsq = 0.0, sum4 = 0.0;
    for (int k = 0; k < 16; ++k) {
      const double q = e[k] * e[k];
      sumsq = sumsq + q;
      sum4 = sum4 + q * q;
    }

    // full (non-conjugated) products for ad - bc
    const double x = (ar * dr - ai * di) - (br * cr - bi * ci);
    const double y = (ar * di + ai * dr) - (br * ci + bi * cr);
    double delta = 2.0 * std::sqrt(x * x + y * y);
    if (delta > 1.0) delta = 1.0;

    out.delta[i] = delta;
    out.sumsq[i] = sumsq;
    out.m2[i] = sum4 * 0.25;
  }
}

}  // namespace detail

void measure_batch_scalar(const BatchView& in, const MeasureOut& out) {
  detail::measure_batch_scalar_raw(in, out);
  detail::finalize_m2(out.m2, in.n);
}

}  // namespace qmagic::kernels
