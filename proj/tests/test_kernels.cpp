#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "qmagic/haar.hpp"
#include "qmagic/kernels.hpp"
#include "qmagic/measures.hpp"

using namespace qmagic;
namespace k = qmagic::kernels;

namespace {

struct Soa {
  std::vector<double> ar, ai, br, bi, cr, ci, dr, di;

  explicit Soa(std::size_t n)
      : ar(n), ai(n), br(n), bi(n), cr(n), ci(n), dr(n), di(n) {}

  void set(std::size_t i, const StateVector& s) {
    ar[i] = s.amp[0].real();
    ai[i] = s.amp[0].imag();
    br[i] = s.amp[1].real();
    bi[i] = s.amp[1].imag();
    cr[i] = s.amp[2].real();
    ci[i] = s.amp[2].imag();
    dr[i] = s.amp[3].real();
    di[i] = s.amp[3].imag();
  }
  k::BatchView view() const {
    return {ar.data(), ai.data(), br.data(), bi.data(),
            cr.data(), ci.data(), dr.data(), di.data(), ar.size()};
  }
};

struct Out {
  std::vector<double> delta, m2, sumsq;

  explicit Out(std::size_t n) : delta(n), m2(n), sumsq(n) {}
  k::MeasureOut view() { return {delta.data(), m2.data(), sumsq.data()}; }
};

Soa random_batch(std::size_t n, std::uint64_t seed) {
  Soa soa(n);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) soa.set(i, haar_sample(rng));
  return soa;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar kernel matches the matrix-route reference") {
  const std::size_t n = 4096;
  Soa soa = random_batch(n, 21);
  Out out(n);
  k::measure_batch(soa.view(), out.view(), k::Backend::Scalar);

  SplitMix64 rng(21);
  for (std::size_t i = 0; i < n; ++i) {
    const StateVector s = haar_sample(rng);
    CHECK(std::abs(out.delta[i] - concurrence(s)) < 1e-12);
    CHECK(std::abs(out.m2[i] - m2_direct(s)) < 1e-12);
    CHECK(std::abs(out.sumsq[i] - 4.0) < 1e-10);
  }
}

TEST_CASE("scalar kernel on known states") {
  Soa soa(3);
  soa.set(0, make_state(1, 0, 0, 0));                       // stabilizer
  soa.set(1, make_state(1, 0, 0, 1));                       // Bell
  soa.set(2, make_state(std::sqrt(3.0) / 2, 0, 0, 0.5));
  Out out(3);
  k::measure_batch(soa.view(), out.view(), k::Backend::Scalar);
  CHECK(out.delta[0] == doctest::Approx(0.0));
  CHECK(out.m2[0] == doctest::Approx(0.0));
  CHECK(out.delta[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(out.m2[1] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(out.delta[2] == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
}

TEST_CASE("SIMD backends are bit-identical to the scalar reference") {
  const k::Backend best = k::active_backend();
  if (best == k::Backend::Scalar) {
    MESSAGE("no SIMD backend on this CPU; equivalence check skipped");
    return;
  }
  // odd sizes exercise the scalar tail path
  for (std::size_t n : {1, 2, 3, 4, 5, 7, 8, 64, 67, 1000, 4097}) {
    Soa soa = random_batch(n, 1000 + n);
    Out scalar_out(n), simd_out(n);
    k::measure_batch(soa.view(), scalar_out.view(), k::Backend::Scalar);
    k::measure_batch(soa.view(), simd_out.view(), best);
    CHECK(bitwise_equal(scalar_out.delta, simd_out.delta));
    CHECK(bitwise_equal(scalar_out.m2, simd_out.m2));
    CHECK(bitwise_equal(scalar_out.sumsq, simd_out.sumsq));
  }
}

TEST_CASE("backend dispatch") {
  CHECK(k::active_backend(k::Backend::Scalar) == k::Backend::Scalar);
  const k::Backend a = k::active_backend(k::Backend::Auto);
  CHECK((a == k::Backend::Scalar || a == k::Backend::Avx2 || a == k::Backend::Neon));
  CHECK(k::backend_name(k::Backend::Avx2) == "avx2");

#if defined(__aarch64__)
  CHECK_THROWS(k::active_backend(k::Backend::Avx2));
#else
  CHECK_THROWS(k::active_backend(k::Backend::Neon));
#endif
}
