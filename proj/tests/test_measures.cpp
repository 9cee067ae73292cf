#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "doctest.h"
#include "qmagic/catalogs.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/haar.hpp"
#include "qmagic/measures.hpp"

using namespace qmagic;

namespace {

constexpr double kPi = std::numbers::pi;

const double kAlpha = std::acos(1.0 / std::sqrt(3.0));

std::set<std::string> zero_names(const ZeroPattern& z) {
  std::set<std::string> out;
  for (int k = 0; k < kNumPauliStrings; ++k)
    if (z.mask[k]) out.insert(pauli_string_name(PauliString::from_index(k)));
  return out;
}

}  // namespace

TEST_CASE("concurrence examples") {
  CHECK(concurrence(make_state(1, 0, 0, 0)) == doctest::Approx(0.0));
  CHECK(concurrence(make_state(1, 0, 0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(concurrence(make_state(std::sqrt(3.0) / 2, 0, 0, 0.5)) ==
        doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
}

TEST_CASE("m2_direct on stabilizer and product states") {
  CHECK(m2_direct(make_state(1, 0, 0, 0)) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(m2_direct(make_state(1, 0, 0, 1)) == doctest::Approx(0.0).epsilon(1e-13));

  // product of two maximal-magic single-qubit states: M2 is additive,
  // 2 * ln(3/2) = ln(9/4)
  const WhartonAngles w = make_angles(kAlpha, kPi / 4, kAlpha, kPi / 4, 0.0, kPi / 3);
  CHECK(m2_direct(angles_to_state(w)) ==
        doctest::Approx(std::log(9.0 / 4.0)).epsilon(1e-12));
}

TEST_CASE("closed-form table at the chart origin") {
  const ExpectationTable t = expectation_table(make_angles(0, 0, 0, 0, 0, 0));
  CHECK(t.at({Pauli::Z, Pauli::I}) == doctest::Approx(1.0));
  CHECK(t.at({Pauli::I, Pauli::Z}) == doctest::Approx(1.0));
  CHECK(t.at({Pauli::Z, Pauli::Z}) == doctest::Approx(1.0));
  CHECK(t.at({Pauli::X, Pauli::I}) == doctest::Approx(0.0));
  CHECK(t.at({Pauli::Y, Pauli::I}) == doctest::Approx(0.0));
  CHECK(t.at({Pauli::I, Pauli::X}) == doctest::Approx(0.0));
  CHECK(t.at({Pauli::I, Pauli::Y}) == doctest::Approx(0.0));
}

TEST_CASE("six-term structure of the minimal-magic row 17") {
  for (double chi : {0.4, 1.0}) {
    for (double p1 : {0.0, kPi})
      for (double p2 : {0.0, kPi})
        for (double g : {0.0, kPi}) {
          const ExpectationTable t =
              expectation_table(make_angles(kPi / 2, p1, kPi / 2, p2, chi, g));
          CHECK(std::abs(t.at({Pauli::X, Pauli::X})) == doctest::Approx(1.0));
          CHECK(std::abs(t.at({Pauli::X, Pauli::I})) ==
                doctest::Approx(std::cos(chi)));
          CHECK(std::abs(t.at({Pauli::I, Pauli::X})) ==
                doctest::Approx(std::cos(chi)));
          CHECK(std::abs(t.at({Pauli::Y, Pauli::Y})) ==
                doctest::Approx(std::sin(chi)));
          CHECK(std::abs(t.at({Pauli::Z, Pauli::Z})) ==
                doctest::Approx(std::sin(chi)));
          const ZeroPattern z = zero_pattern(t);
          CHECK(z.zero_count() == 10);
        }
  }
}

TEST_CASE("fourth powers of the maximal-magic left-branch representative") {
  // theta1 = theta2 = arccos(1/sqrt(3)), phi1 = phi2 = pi/4, gamma = pi/3
  for (double schi : {0.2, 0.45}) {
    const double chi = std::asin(schi);
    const ExpectationTable t =
        expectation_table(make_angles(kAlpha, kPi / 4, kAlpha, kPi / 4, chi, kPi / 3));
    const double c4 = std::pow(std::cos(chi), 4);
    CHECK(std::pow(t.at({Pauli::X, Pauli::I}), 4) ==
          doctest::Approx(c4 / 9.0).epsilon(1e-10));
    CHECK(std::pow(t.at({Pauli::Y, Pauli::Y}), 4) ==
          doctest::Approx(std::pow(2 * schi - 1, 4) / 81.0).epsilon(1e-9));
  }
}

TEST_CASE("m2_analytic landmark values") {
  CHECK(m2_analytic(make_angles(0, 0, 0, 0, 0, 0)) == doctest::Approx(0.0));

  // minimal-magic representative at chi = pi/4
  CHECK(m2_analytic(make_angles(kPi / 2, 0, kPi / 2, 0, kPi / 4, 0)) ==
        doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-12));
  CHECK(std::log(4.0 / 3.0) == doctest::Approx(0.28768207245).epsilon(1e-11));

  // middle-branch representative at chi = pi/2
  CHECK(m2_analytic(make_angles(kPi / 4, kPi / 2, kPi / 4, kPi / 2, kPi / 2, kPi / 2)) ==
        doctest::Approx(std::log(16.0 / 9.0)).epsilon(1e-12));
}

TEST_CASE("zero patterns: separable corner, row 17, middle-branch row 0") {
  // |00> sits at the chi = 0 corner where 12 of the 16 terms vanish
  const ZeroPattern z00 = zero_pattern(expectation_table(make_state(1, 0, 0, 0)));
  CHECK(z00.zero_count() == 12);
  CHECK_FALSE(z00.mask[PauliString{Pauli::I, Pauli::I}.index()]);

  const ZeroPattern z17 =
      zero_pattern(expectation_table(make_angles(kPi / 2, 0, kPi / 2, 0, 0.7, 0)));
  CHECK(zero_names(z17) == std::set<std::string>{"IY", "IZ", "XY", "XZ", "YI",
                                                 "YX", "YZ", "ZI", "ZX", "ZY"});

  const ZeroPattern zg = zero_pattern(expectation_table(
      make_angles(kPi / 4, kPi / 2, kPi / 4, kPi / 2, 0.8, kPi / 2)));
  CHECK(zero_names(zg) == std::set<std::string>{"IX", "XI", "XX"});

  CHECK_THROWS(zero_pattern(expectation_table(make_state(1, 0, 0, 0)), 0.0));
}

TEST_CASE("analytic and direct routes agree over random angles") {
  SplitMix64 rng(101);
  double max_entry = 0.0, max_m2 = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const WhartonAngles w = sample_angles(rng);
    const StateVector s = angles_to_state(w);
    const ExpectationTable closed = expectation_table(w);
    const ExpectationTable direct = expectation_table(s);
    for (int k = 0; k < kNumPauliStrings; ++k)
      max_entry = std::max(max_entry, std::abs(closed.values[k] - direct.values[k]));
    max_m2 = std::max(max_m2, std::abs(m2_analytic(w) - m2_direct(s)));
  }
  CHECK(max_entry < 1e-10);
  CHECK(max_m2 < 1e-10);
}

TEST_CASE("magic is nonnegative") {
  SplitMix64 rng(103);
  for (int i = 0; i < 2000; ++i) CHECK(m2_direct(haar_sample(rng)) >= -1e-12);
}

TEST_CASE("concurrence is invariant under local unitaries") {
  SplitMix64 rng(107);
  for (int i = 0; i < 200; ++i) {
    const StateVector s = haar_sample(rng);
    const Unitary4 u = kron(random_su2(rng), random_su2(rng));
    CHECK(std::abs(concurrence(apply(u, s)) - concurrence(s)) < 1e-10);
  }
}

TEST_CASE("magic is invariant under the Clifford generators") {
  SplitMix64 rng(109);
  const auto gens = clifford_generators();
  for (int i = 0; i < 100; ++i) {
    const StateVector s = haar_sample(rng);
    const double m = m2_direct(s);
    for (const Unitary4& g : gens)
      CHECK(std::abs(m2_direct(apply(g, s)) - m) < 1e-10);
  }
}

TEST_CASE("minimal-magic family shows exactly 18 ten-zero patterns") {
  // interior chi values only; the chi = 0, pi/2 corners gain extra zeros
  std::set<std::uint16_t> seen;
  for (double chi : {0.3, 0.6, 0.9, 1.2, 1.5}) {
    std::set<std::uint16_t> at_chi;
    for (const CatalogEntry& e : abc_catalog(chi)) {
      const ZeroPattern z = zero_pattern(expectation_table(e.angles));
      CHECK(z.zero_count() == 10);
      at_chi.insert(z.bits());
    }
    CHECK(at_chi.size() == 18);
    seen.insert(at_chi.begin(), at_chi.end());
  }
  CHECK(seen.size() == 18);
}
