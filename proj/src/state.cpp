#include "qmagic/state.hpp"

#include <cmath>
#include <stdexcept>

#include "qmagic/errors.hpp"

namespace qmagic {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

const Mat2& pauli_matrix2(Pauli p) {
  static const std::array<Mat2, 4> mats = {{
      {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}},    // I
      {cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}},    // X
      {cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0}},   // Y
      {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-1, 0}},   // Z
  }};
  return mats[static_cast<int>(p)];
}

Unitary4 Unitary4::identity() {
  Unitary4 u;
  for (int k = 0; k < 4; ++k) u.at(k, k) = 1.0;
  return u;
}

Unitary4 operator*(const Unitary4& lhs, const Unitary4& rhs) {
  Unitary4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cplx acc{};
      for (int k = 0; k < 4; ++k) acc += lhs.at(r, k) * rhs.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

Unitary4 adjoint(const Unitary4& u) {
  Unitary4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.at(r, c) = std::conj(u.at(c, r));
  return out;
}

Unitary4 kron(const Mat2& p, const Mat2& q) {
  Unitary4 out;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          out.at(2 * r1 + r2, 2 * c1 + c2) = p[2 * r1 + c1] * q[2 * r2 + c2];
  return out;
}

bool is_unitary(const Unitary4& u, double tol) {
  const Unitary4 g = adjoint(u) * u;
  double dev = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const cplx want = (r == c) ? cplx{1, 0} : cplx{0, 0};
      dev = std::max(dev, std::abs(g.at(r, c) - want));
    }
  return dev <= tol;
}

double norm(const StateVector& s) {
  double n2 = 0.0;
  for (const cplx& z : s.amp) n2 += std::norm(z);
  return std::sqrt(n2);
}

StateVector make_state(cplx a, cplx b, cplx c, cplx d) {
  StateVector s{{a, b, c, d}};
  const double n = norm(s);
  if (n < 1e-14) throw ZeroVectorError("make_state: zero-norm amplitude vector");
  for (cplx& z : s.amp) z /= n;
  return s;
}

double expectation(const StateVector& s, PauliString p) {
  const Unitary4& P = pauli_string_matrix(p);
  cplx acc{};
  for (int r = 0; r < 4; ++r) {
    cplx row{};
    for (int c = 0; c < 4; ++c) row += P.at(r, c) * s.amp[c];
    acc += std::conj(s.amp[r]) * row;
  }
  if (std::abs(acc.imag()) > 1e-10)
    throw std::logic_error("expectation: non-real value for a Hermitian operator");
  return acc.real();
}

double fidelity(const StateVector& s1, const StateVector& s2) {
  cplx ov{};
  for (int k = 0; k < 4; ++k) ov += std::conj(s1.amp[k]) * s2.amp[k];
  const double f = std::norm(ov);
  return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
}

StateVector apply(const Unitary4& u, const StateVector& s) {
  if (!is_unitary(u)) throw NotUnitaryError("apply: matrix is not unitary");
  StateVector out;
  for (int r = 0; r < 4; ++r) {
    cplx acc{};
    for (int c = 0; c < 4; ++c) acc += u.at(r, c) * s.amp[c];
    out.amp[r] = acc;
  }
  return out;
}

const Unitary4& pauli_string_matrix(PauliString p) {
  static const std::array<Unitary4, kNumPauliStrings> mats = [] {
    std::array<Unitary4, kNumPauliStrings> out{};
    for (int k = 0; k < kNumPauliStrings; ++k) {
      const PauliString ps = PauliString::from_index(k);
      out[k] = kron(pauli_matrix2(ps.first), pauli_matrix2(ps.second));
    }
    return out;
  }();
  return mats[p.index()];
}

Mat2 gate_h() {
  const double r = 1.0 / std::sqrt(2.0);
  return {cplx{r, 0}, cplx{r, 0}, cplx{r, 0}, cplx{-r, 0}};
}

Mat2 gate_s() { return {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, kI}; }

Mat2 identity2() { return {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}; }

Unitary4 gate_cnot() {
  Unitary4 u;
  u.at(0, 0) = 1.0;
  u.at(1, 1) = 1.0;
  u.at(2, 3) = 1.0;
  u.at(3, 2) = 1.0;
  return u;
}

}  // namespace qmagic
