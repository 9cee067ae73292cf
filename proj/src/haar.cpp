#include "qmagic/haar.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qmagic/kernels.hpp"

namespace qmagic {

void SplitMix64::normal_pair(double& z0, double& z1) {
  const double u1 = double((next() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  z0 = r * std::cos(t);
  z1 = r * std::sin(t);
}

StateVector haar_sample(SplitMix64& rng) {
  double g[8];
  rng.normal_pair(g[0], g[1]);
  rng.normal_pair(g[2], g[3]);
  rng.normal_pair(g[4], g[5]);
  rng.normal_pair(g[6], g[7]);
  return make_state({g[0], g[1]}, {g[2], g[3]}, {g[4], g[5]}, {g[6], g[7]});
}

WhartonAngles sample_angles(SplitMix64& rng) {
  constexpr double pi = std::numbers::pi;
  WhartonAngles w;
  w.theta1 = rng.uniform(0.0, pi);
  w.phi1 = rng.uniform(0.0, 2.0 * pi);
  w.theta2 = rng.uniform(0.0, pi);
  w.phi2 = rng.uniform(0.0, 2.0 * pi);
  w.chi = rng.uniform(0.0, pi / 2.0);
  w.gamma = rng.uniform(0.0, 2.0 * pi);
  return w;
}

Mat2 random_su2(SplitMix64& rng) {
  double g[4];
  rng.normal_pair(g[0], g[1]);
  rng.normal_pair(g[2], g[3]);
  cplx u{g[0], g[1]}, v{g[2], g[3]};
  const double n = std::sqrt(std::norm(u) + std::norm(v));
  u /= n;
  v /= n;
  // first column (u, v); second column completes the unitary
  return {u, -std::conj(v), v, std::conj(u)};
}

void haar_measure_scan(std::uint64_t n, std::uint64_t seed, const MeasureSink& sink) {
  std::vector<double> ar(kHaarChunk), ai(kHaarChunk), br(kHaarChunk), bi(kHaarChunk);
  std::vector<double> cr(kHaarChunk), ci(kHaarChunk), dr(kHaarChunk), di(kHaarChunk);
  std::vector<double> delta(kHaarChunk), m2(kHaarChunk), sumsq(kHaarChunk);

  const std::uint64_t chunks = (n + kHaarChunk - 1) / kHaarChunk;
  std::uint64_t done = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t len = std::min<std::uint64_t>(kHaarChunk, n - done);
    SplitMix64 rng = SplitMix64::substream(seed, c);
    for (std::uint64_t i = 0; i < len; ++i) {
      const StateVector s = haar_sample(rng);
      ar[i] = s.amp[0].real();
      ai[i] = s.amp[0].imag();
      br[i] = s.amp[1].real();
      bi[i] = s.amp[1].imag();
      cr[i] = s.amp[2].real();
      ci[i] = s.amp[2].imag();
      dr[i] = s.amp[3].real();
      di[i] = s.amp[3].imag();
    }
    const kernels::BatchView view{ar.data(), ai.data(), br.data(), bi.data(),
                                  cr.data(), ci.data(), dr.data(), di.data(),
                                  static_cast<std::size_t>(len)};
    const kernels::MeasureOut out{delta.data(), m2.data(), sumsq.data()};
    kernels::measure_batch(view, out);
    sink(delta.data(), m2.data(), sumsq.data(), len);
    done += len;
  }
}

}  // namespace qmagic
