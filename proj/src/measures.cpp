#include "qmagic/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace qmagic {

double concurrence(const StateVector& s) {
  const cplx v = s.amp[0] * s.amp[3] - s.amp[1] * s.amp[2];
  const double c = 2.0 * std::abs(v);
  return c < 0.0 ? 0.0 : (c > 1.0 ? 1.0 : c);
}

double m2_from_table(const ExpectationTable& t) {
  double sum4 = 0.0;
  for (double v : t.values) {
    const double q = v * v;
    sum4 += q * q;
  }
  double arg = sum4 / 4.0;
  if (arg < 1e-300) arg = 1e-300;  // fp guard; unreachable for valid tables
  const double m2 = -std::log(arg);
  return (m2 < 0.0 && m2 >= -1e-12) ? 0.0 : m2;
}

double m2_direct(const StateVector& s) { return m2_from_table(expectation_table(s)); }

AngleTrig AngleTrig::from(const WhartonAngles& w) {
  return AngleTrig{
      std::sin(w.chi),    std::cos(w.chi),    std::sin(w.theta1),
      std::cos(w.theta1), std::sin(w.theta2), std::cos(w.theta2),
      std::sin(w.phi1),   std::cos(w.phi1),   std::sin(w.phi2),
      std::cos(w.phi2),   std::sin(w.gamma),  std::cos(w.gamma)};
}

// Closed-form table in the six angles. The single-qubit rows carry a
// cos(chi) factor; the two-qubit rows mix a sin(chi) part (gamma-dependent)
// with a gamma-free product of polar sines.
ExpectationTable expectation_table(const AngleTrig& t) {
  const double sx = t.sin_chi, cx = t.cos_chi;
  const double s1 = t.sin_t1, c1 = t.cos_t1, s2 = t.sin_t2, c2 = t.cos_t2;
  const double sp1 = t.sin_p1, cp1 = t.cos_p1, sp2 = t.sin_p2, cp2 = t.cos_p2;
  const double sg = t.sin_g, cg = t.cos_g;

  ExpectationTable e;
  auto set = [&e](Pauli p1, Pauli p2, double v) {
    e.values[PauliString{p1, p2}.index()] = v;
  };

  set(Pauli::I, Pauli::I, 1.0);
  set(Pauli::X, Pauli::I, cx * s1 * cp1);
  set(Pauli::Y, Pauli::I, cx * s1 * sp1);
  set(Pauli::Z, Pauli::I, cx * c1);
  set(Pauli::I, Pauli::X, cx * s2 * cp2);
  set(Pauli::I, Pauli::Y, cx * s2 * sp2);
  set(Pauli::I, Pauli::Z, cx * c2);

  set(Pauli::X, Pauli::X,
      sx * c1 * c2 * cp1 * cp2 * cg + sx * c1 * cp1 * sp2 * sg +
          sx * c2 * sp1 * cp2 * sg - sx * sp1 * sp2 * cg + s1 * s2 * cp1 * cp2);
  set(Pauli::Y, Pauli::Y,
      sx * c1 * c2 * sp1 * sp2 * cg - sx * c1 * sp1 * cp2 * sg -
          sx * c2 * cp1 * sp2 * sg - sx * cp1 * cp2 * cg + s1 * s2 * sp1 * sp2);
  set(Pauli::Z, Pauli::Z, sx * s1 * s2 * cg + c1 * c2);

  set(Pauli::X, Pauli::Y,
      sx * c1 * c2 * cp1 * sp2 * cg - sx * c1 * cp1 * cp2 * sg +
          sx * c2 * sp1 * sp2 * sg + sx * sp1 * cp2 * cg + s1 * s2 * cp1 * sp2);
  set(Pauli::Y, Pauli::X,
      sx * c1 * c2 * sp1 * cp2 * cg + sx * c1 * sp1 * sp2 * sg -
          sx * c2 * cp1 * cp2 * sg + sx * cp1 * sp2 * cg + s1 * s2 * sp1 * cp2);

  set(Pauli::X, Pauli::Z, -sx * c1 * s2 * cp1 * cg - sx * s2 * sp1 * sg + s1 * c2 * cp1);
  set(Pauli::Z, Pauli::X, -sx * s1 * c2 * cp2 * cg - sx * s1 * sp2 * sg + c1 * s2 * cp2);
  set(Pauli::Y, Pauli::Z, -sx * c1 * s2 * sp1 * cg + sx * s2 * cp1 * sg + s1 * c2 * sp1);
  set(Pauli::Z, Pauli::Y, -sx * s1 * c2 * sp2 * cg + sx * s1 * cp2 * sg + c1 * s2 * sp2);

  return e;
}

ExpectationTable expectation_table(const WhartonAngles& w) {
  return expectation_table(AngleTrig::from(w));
}

ExpectationTable expectation_table(const StateVector& s) {
  ExpectationTable e;
  for (int k = 0; k < kNumPauliStrings; ++k)
    e.values[k] = expectation(s, PauliString::from_index(k));
  return e;
}

double m2_analytic(const WhartonAngles& w) {
  return m2_from_table(expectation_table(w));
}

ZeroPattern zero_pattern(const ExpectationTable& t, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("zero_pattern: tol must be > 0");
  ZeroPattern z;
  z.tol = tol;
  for (int k = 0; k < kNumPauliStrings; ++k) z.mask[k] = std::abs(t.values[k]) < tol;
  return z;
}

}  // namespace qmagic
