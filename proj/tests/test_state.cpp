#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qmagic/errors.hpp"
#include "qmagic/haar.hpp"
#include "qmagic/state.hpp"

using namespace qmagic;

namespace {
constexpr double kPi = std::numbers::pi;

StateVector bell_phi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return make_state(r, 0, 0, r);
}
}  // namespace

TEST_CASE("make_state normalizes and rejects the zero vector") {
  const StateVector s0 = make_state(1, 0, 0, 0);
  CHECK(s0.a() == cplx{1, 0});

  const StateVector s1 = make_state(2, 0, 0, 0);
  CHECK(std::abs(s1.a() - cplx{1, 0}) < 1e-15);

  const StateVector s2 = make_state(1, 0, 0, 1);
  CHECK(std::abs(s2.a().real() - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(s2.d().real() - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(norm(s2) - 1.0) < 1e-12);

  CHECK_THROWS_AS(make_state(0, 0, 0, 0), ZeroVectorError);
  CHECK_THROWS_AS(make_state(1e-15, 0, 0, 0), ZeroVectorError);
}

TEST_CASE("expectation values on eigenstates and Bell states") {
  const StateVector s00 = make_state(1, 0, 0, 0);
  CHECK(expectation(s00, {Pauli::Z, Pauli::I}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(expectation(s00, {Pauli::I, Pauli::I}) == doctest::Approx(1.0).epsilon(1e-14));

  const StateVector bell = bell_phi_plus();
  CHECK(expectation(bell, {Pauli::X, Pauli::X}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(expectation(bell, {Pauli::Y, Pauli::Y}) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(expectation(bell, {Pauli::Z, Pauli::Z}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("expectations of the two-parameter |00>/|11> superposition") {
  // cos(chi/2) e^{i pi/4} |00> + sin(chi/2) e^{-i pi/4} |11>: XY and YX carry
  // the entanglement (|value| = sin chi), while YY vanishes.
  for (double chi : {0.3, 0.9, 1.4}) {
    const cplx pp = std::polar(1.0, kPi / 4), pm = std::polar(1.0, -kPi / 4);
    const StateVector s =
        make_state(std::cos(chi / 2) * pp, 0, 0, std::sin(chi / 2) * pm);
    CHECK(expectation(s, {Pauli::X, Pauli::Y}) ==
          doctest::Approx(-std::sin(chi)).epsilon(1e-13));
    CHECK(expectation(s, {Pauli::Y, Pauli::X}) ==
          doctest::Approx(-std::sin(chi)).epsilon(1e-13));
    CHECK(std::abs(expectation(s, {Pauli::Y, Pauli::Y}))  < 1e-14);
    const double xy = expectation(s, {Pauli::X, Pauli::Y});
    CHECK(std::pow(xy, 4) == doctest::Approx(std::pow(std::sin(chi), 4)).epsilon(1e-12));
  }
}

TEST_CASE("fidelity: global phase, symmetry, orthogonality") {
  const StateVector s00 = make_state(1, 0, 0, 0);
  const StateVector s00_phase = make_state(std::polar(1.0, kPi / 3), 0, 0, 0);
  const StateVector s11 = make_state(0, 0, 0, 1);

  CHECK(fidelity(s00, s00) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(s00, s00_phase) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(s00, s11) == doctest::Approx(0.0).epsilon(1e-14));

  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const StateVector u = haar_sample(rng), v = haar_sample(rng);
    CHECK(fidelity(u, v) == doctest::Approx(fidelity(v, u)).epsilon(1e-14));
    const double f = fidelity(u, v);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
  }
}

TEST_CASE("apply: truth tables, Bell circuit, unitarity gate") {
  const StateVector s01 = make_state(0, 1, 0, 0);
  const StateVector r_id = apply(Unitary4::identity(), s01);
  CHECK(fidelity(r_id, s01) == doctest::Approx(1.0).epsilon(1e-14));

  const StateVector s10 = make_state(0, 0, 1, 0);
  const StateVector r_cnot = apply(gate_cnot(), s10);
  CHECK(fidelity(r_cnot, make_state(0, 0, 0, 1)) == doctest::Approx(1.0).epsilon(1e-14));

  const StateVector bell = apply(gate_cnot(), apply(kron(gate_h(), identity2()),
                                                    make_state(1, 0, 0, 0)));
  CHECK(fidelity(bell, bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-14));

  Unitary4 bad = Unitary4::identity();
  bad.at(0, 0) = 2.0;
  CHECK_THROWS_AS(apply(bad, s01), NotUnitaryError);
}

TEST_CASE("purity identity: sum of squared expectations is 4") {
  SplitMix64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const StateVector s = haar_sample(rng);
    double sum = 0.0;
    for (const PauliString& p : all_pauli_strings()) {
      const double e = expectation(s, p);
      CHECK(e >= -1.0 - 1e-12);
      CHECK(e <= 1.0 + 1e-12);
      sum += e * e;
    }
    CHECK(std::abs(sum - 4.0) < 1e-10);
  }
}

TEST_CASE("apply preserves purity and pairwise fidelities") {
  SplitMix64 rng(23);
  const Unitary4 u = kron(gate_h(), gate_s()) * gate_cnot();
  for (int i = 0; i < 50; ++i) {
    const StateVector s1 = haar_sample(rng), s2 = haar_sample(rng);
    const StateVector t1 = apply(u, s1), t2 = apply(u, s2);
    CHECK(std::abs(norm(t1) - 1.0) < 1e-12);
    CHECK(fidelity(t1, t2) == doctest::Approx(fidelity(s1, s2)).epsilon(1e-12));
    double sum = 0.0;
    for (const PauliString& p : all_pauli_strings()) {
      const double e = expectation(t1, p);
      sum += e * e;
    }
    CHECK(std::abs(sum - 4.0) < 1e-10);
  }
}

TEST_CASE("pauli string matrices are Hermitian and unitary") {
  for (const PauliString& p : all_pauli_strings()) {
    const Unitary4& m = pauli_string_matrix(p);
    CHECK(is_unitary(m));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        CHECK(std::abs(m.at(r, c) - std::conj(m.at(c, r))) < 1e-15);
  }
  CHECK(pauli_string_name({Pauli::X, Pauli::Z}) == "XZ");
  CHECK(PauliString::from_index(7) == PauliString{Pauli::X, Pauli::Z});
}
