#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qmagic/errors.hpp"
#include "qmagic/haar.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/wharton.hpp"

using namespace qmagic;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("angles_to_state at the chart origin gives |00>") {
  const StateVector s = angles_to_state(make_angles(0, 0, 0, 0, 0, 0));
  CHECK(std::abs(s.a() - cplx{1, 0}) < 1e-15);
  CHECK(std::abs(s.b()) < 1e-15);
  CHECK(std::abs(s.c()) < 1e-15);
  CHECK(std::abs(s.d()) < 1e-15);
}

TEST_CASE("angles_to_state with both polar angles zero") {
  for (double chi : {0.2, 0.8}) {
    for (double gamma : {0.0, 1.1, 4.0}) {
      const StateVector s = angles_to_state(make_angles(0, 0, 0, 0, chi, gamma));
      CHECK(std::abs(s.a() - std::cos(chi / 2) * std::polar(1.0, gamma / 2)) < 1e-14);
      CHECK(std::abs(s.d() - std::sin(chi / 2) * std::polar(1.0, -gamma / 2)) < 1e-14);
      CHECK(std::abs(s.b()) < 1e-15);
      CHECK(std::abs(s.c()) < 1e-15);
    }
  }
}

TEST_CASE("gamma tied to phi1+phi2+pi/2 collapses to the phase-locked pair") {
  // theta1 = theta2 = 0 with gamma = phi1 + phi2 + pi/2: the state reduces to
  // cos(chi/2) e^{i pi/4}|00> + sin(chi/2) e^{-i pi/4}|11> for any phis.
  const double chi = 0.9;
  const StateVector want =
      make_state(std::cos(chi / 2) * std::polar(1.0, kPi / 4), 0, 0,
                 std::sin(chi / 2) * std::polar(1.0, -kPi / 4));
  for (double p1 : {0.0, 0.7, 2.9})
    for (double p2 : {0.0, 1.3, 5.1}) {
      const StateVector s =
          angles_to_state(make_angles(0, p1, 0, p2, chi, p1 + p2 + kPi / 2));
      CHECK(fidelity(s, want) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("make_spinor basics") {
  const Spinor up = make_spinor(0, 0, 0);
  CHECK(std::abs(up.up - cplx{1, 0}) < 1e-15);
  CHECK(std::abs(up.down) < 1e-15);

  const Spinor down = make_spinor(kPi, 0, 0);
  CHECK(std::abs(down.up) < 1e-15);
  CHECK(std::abs(down.down - cplx{1, 0}) < 1e-15);

  const Spinor eq = make_spinor(kPi / 2, kPi / 2, 0);
  CHECK(std::abs(eq.up - std::polar(1.0 / std::sqrt(2.0), -kPi / 4)) < 1e-15);
  CHECK(std::abs(eq.down - std::polar(1.0 / std::sqrt(2.0), +kPi / 4)) < 1e-15);

  SplitMix64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Spinor s = make_spinor(rng.uniform(0, kPi), rng.uniform(0, 2 * kPi),
                                 rng.uniform(0, 2 * kPi));
    CHECK(std::abs(std::norm(s.up) + std::norm(s.down) - 1.0) < 1e-12);
  }
}

TEST_CASE("assemble basics") {
  const Spinor zz = make_spinor(0, 0, 0);
  const StateVector s0 = assemble(zz, zz, 0.0);
  CHECK(fidelity(s0, make_state(1, 0, 0, 0)) == doctest::Approx(1.0).epsilon(1e-14));

  const StateVector bell = assemble(zz, zz, kPi / 2);
  CHECK(fidelity(bell, make_state(1, 0, 0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spinor assembly reproduces the six-angle chart with gamma = a1+a2") {
  SplitMix64 rng(5);
  double worst = 0.0;
  for (int i = 0; i < 3000; ++i) {
    const double t1 = rng.uniform(0, kPi), t2 = rng.uniform(0, kPi);
    const double p1 = rng.uniform(0, 2 * kPi), p2 = rng.uniform(0, 2 * kPi);
    const double a1 = rng.uniform(0, 2 * kPi), a2 = rng.uniform(0, 2 * kPi);
    const double chi = rng.uniform(0, kPi / 2);
    const StateVector via =
        assemble(make_spinor(t1, p1, a1), make_spinor(t2, p2, a2), chi);
    const StateVector direct =
        angles_to_state(make_angles(t1, p1, t2, p2, chi, a1 + a2));
    worst = std::max(worst, std::abs(1.0 - fidelity(via, direct)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("concurrence angle: sin(chi) == 2|ad - bc| identically") {
  CHECK(concurrence_of_angles(make_angles(0.4, 1, 2, 3, 0, 0.5)) == 0.0);
  CHECK(concurrence_of_angles(make_angles(0.4, 1, 2, 3, kPi / 2, 0.5)) ==
        doctest::Approx(1.0).epsilon(1e-15));

  SplitMix64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const double t1 = rng.uniform(0, kPi), t2 = rng.uniform(0, kPi);
    const double p1 = rng.uniform(0, 2 * kPi), p2 = rng.uniform(0, 2 * kPi);
    const double g = rng.uniform(0, 2 * kPi);
    const WhartonAngles w = make_angles(t1, p1, t2, p2, kPi / 4, g);
    CHECK(concurrence_of_angles(w) ==
          doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
    CHECK(concurrence(angles_to_state(w)) ==
          doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-13));
  }

  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const WhartonAngles w = sample_angles(rng);
    worst = std::max(worst, std::abs(concurrence(angles_to_state(w)) -
                                     concurrence_of_angles(w)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("chart output is normalized without renormalization") {
  SplitMix64 rng(9);
  for (int i = 0; i < 5000; ++i) {
    const StateVector s = angles_to_state(sample_angles(rng));
    CHECK(std::abs(norm(s) - 1.0) < 1e-12);
  }
}

TEST_CASE("recurrence-angle diagnostic: sin(gamma) from ad + bc") {
  SplitMix64 rng(13);
  int used = 0;
  while (used < 500) {
    const WhartonAngles w = sample_angles(rng);
    const double den = std::cos(w.chi) * std::sin(w.theta1) * std::sin(w.theta2);
    if (std::abs(den) < 1e-2) continue;  // avoid degenerate denominators
    const StateVector s = angles_to_state(w);
    const cplx adbc = s.a() * s.d() + s.b() * s.c();
    CHECK(2.0 * adbc.imag() / den == doctest::Approx(std::sin(w.gamma)).epsilon(1e-8));
    ++used;
  }
}

TEST_CASE("angle wrapping and validation") {
  const WhartonAngles w = make_angles(kPi / 2, -kPi / 2, kPi, 7.0, 0.3, -0.5);
  CHECK(w.phi1 == doctest::Approx(3 * kPi / 2));
  CHECK(w.phi2 == doctest::Approx(7.0 - 2 * kPi));
  CHECK(w.gamma == doctest::Approx(2 * kPi - 0.5));
  CHECK(wrap_angle(2 * kPi) == doctest::Approx(0.0));
  CHECK(wrap_angle(-1e-18) == doctest::Approx(0.0));

  CHECK_THROWS_AS(make_angles(-0.5, 0, 0, 0, 0.3, 0), DomainError);
  CHECK_THROWS_AS(make_angles(0, 0, 4.0, 0, 0.3, 0), DomainError);
  CHECK_THROWS_AS(make_angles(0, 0, 0, 0, 2.0, 0), DomainError);
}
