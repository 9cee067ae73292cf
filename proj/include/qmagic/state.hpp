#pragma once

#include <array>
#include <complex>

#include "qmagic/pauli.hpp"

namespace qmagic {

// Pure two-qubit state. Amplitudes are ordered |00>, |01>, |10>, |11>,
// first qubit = left tensor factor. Global phase is not canonicalized;
// physical equality of states is always decided through fidelity().
struct StateVector {
  std::array<cplx, 4> amp{};

  cplx a() const { return amp[0]; }
  cplx b() const { return amp[1]; }
  cplx c() const { return amp[2]; }
  cplx d() const { return amp[3]; }
};

// Row-major 4x4 complex matrix (basis order as in StateVector).
struct Unitary4 {
  std::array<cplx, 16> m{};

  cplx& at(int r, int c) { return m[4 * r + c]; }
  const cplx& at(int r, int c) const { return m[4 * r + c]; }
  static Unitary4 identity();
};

Unitary4 operator*(const Unitary4& lhs, const Unitary4& rhs);
Unitary4 adjoint(const Unitary4& u);
Unitary4 kron(const Mat2& p, const Mat2& q);
bool is_unitary(const Unitary4& u, double tol = 1e-10);

double norm(const StateVector& s);

// Normalizes (a,b,c,d). Throws ZeroVectorError when the norm is below 1e-14.
StateVector make_state(cplx a, cplx b, cplx c, cplx d);

// <psi| P1 (x) P2 |psi>, real by Hermiticity. An imaginary residue above
// 1e-10 means an internal bug and throws std::logic_error.
double expectation(const StateVector& s, PauliString p);

// |<psi1|psi2>|^2, clamped into [0,1]. Equals 1 iff the states differ only
// by a global phase.
double fidelity(const StateVector& s1, const StateVector& s2);

// u * s. Throws NotUnitaryError when u fails the unitarity check (1e-10).
StateVector apply(const Unitary4& u, const StateVector& s);

const Unitary4& pauli_string_matrix(PauliString p);

// Gates used for Clifford generators and circuit tests.
// CNOT: control = first qubit, target = second.
Mat2 gate_h();
Mat2 gate_s();
Mat2 identity2();
Unitary4 gate_cnot();

}  // namespace qmagic
