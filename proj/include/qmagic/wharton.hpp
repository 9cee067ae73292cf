#pragma once

#include "qmagic/state.hpp"

namespace qmagic {

// Six-angle chart of the two-qubit state manifold (global phase removed):
// two Bloch pairs (theta_i, phi_i), the concurrence angle chi with
// Delta = sin(chi), and the recurrence angle gamma (sum of the two local
// spinor phases). chi is restricted to [0, pi/2] so Delta <-> chi is a
// bijection.
struct WhartonAngles {
  double theta1{};  // [0, pi]
  double phi1{};    // [0, 2*pi)
  double theta2{};  // [0, pi]
  double phi2{};    // [0, 2*pi)
  double chi{};     // [0, pi/2]
  double gamma{};   // [0, 2*pi)
};

// Normalized local spinor (up, down) with its global phase angle kept for
// bookkeeping; the phase factor is already folded into the amplitudes.
struct Spinor {
  cplx up{};
  cplx down{};
  double alpha{};
};

// Reduces x modulo 2*pi into [0, 2*pi).
double wrap_angle(double x);

// Validating factory: wraps the azimuthal angles and gamma into [0, 2*pi)
// and checks theta1, theta2 in [0, pi] and chi in [0, pi/2] (fp slack 1e-12).
// Throws DomainError on out-of-range polar/concurrence angles.
WhartonAngles make_angles(double theta1, double phi1, double theta2,
                          double phi2, double chi, double gamma);

// exp(+i*alpha/2) * (cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{+i phi/2}).
// The +i phase sign is what makes assemble() with gamma = alpha1 + alpha2
// reproduce angles_to_state() exactly.
Spinor make_spinor(double theta, double phi, double alpha);

// Combines two local spinors with the concurrence angle:
//   a = A C cos(chi/2) + B* D* sin(chi/2),  b = A D cos(chi/2) - B* C* sin(chi/2),
//   c = B C cos(chi/2) - A* D* sin(chi/2),  d = B D cos(chi/2) + A* C* sin(chi/2).
// The result is normalized by construction.
StateVector assemble(const Spinor& s1, const Spinor& s2, double chi);

// Closed-form amplitudes from the six angles; exactly normalized, no
// renormalization step.
StateVector angles_to_state(const WhartonAngles& w);

// sin(chi) == 2|ad - bc| of angles_to_state(w), identically in the
// remaining five angles.
double concurrence_of_angles(const WhartonAngles& w);

}  // namespace qmagic
