#include "qmagic/wharton.hpp"

#include <cmath>
#include <numbers>

#include "qmagic/errors.hpp"

namespace qmagic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRangeSlack = 1e-12;

cplx polar1(double phase) { return {std::cos(phase), std::sin(phase)}; }

}  // namespace

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod can land exactly on 2*pi after the correction when x is a tiny
  // negative number
  if (r >= kTwoPi) r = 0.0;
  return r;
}

WhartonAngles make_angles(double theta1, double phi1, double theta2,
                          double phi2, double chi, double gamma) {
  auto check_polar = [](double t, const char* what) {
    if (!(t >= -kRangeSlack && t <= std::numbers::pi + kRangeSlack))
      throw DomainError(std::string(what) + " outside [0, pi]");
    return std::min(std::max(t, 0.0), std::numbers::pi);
  };
  if (!(chi >= -kRangeSlack && chi <= std::numbers::pi / 2 + kRangeSlack))
    throw DomainError("chi outside [0, pi/2]");
  WhartonAngles w;
  w.theta1 = check_polar(theta1, "theta1");
  w.theta2 = check_polar(theta2, "theta2");
  w.phi1 = wrap_angle(phi1);
  w.phi2 = wrap_angle(phi2);
  w.chi = std::min(std::max(chi, 0.0), std::numbers::pi / 2);
  w.gamma = wrap_angle(gamma);
  return w;
}

Spinor make_spinor(double theta, double phi, double alpha) {
  const cplx pre = polar1(alpha / 2.0);
  Spinor s;
  s.up = pre * (std::cos(theta / 2.0) * polar1(-phi / 2.0));
  s.down = pre * (std::sin(theta / 2.0) * polar1(+phi / 2.0));
  s.alpha = alpha;
  return s;
}

StateVector assemble(const Spinor& s1, const Spinor& s2, double chi) {
  const double ch = std::cos(chi / 2.0);
  const double sh = std::sin(chi / 2.0);
  const cplx A = s1.up, B = s1.down, C = s2.up, D = s2.down;
  StateVector out;
  out.amp[0] = A * C * ch + std::conj(B) * std::conj(D) * sh;
  out.amp[1] = A * D * ch - std::conj(B) * std::conj(C) * sh;
  out.amp[2] = B * C * ch - std::conj(A) * std::conj(D) * sh;
  out.amp[3] = B * D * ch + std::conj(A) * std::conj(C) * sh;
  return out;
}

StateVector angles_to_state(const WhartonAngles& w) {
  const double ch = std::cos(w.chi / 2.0), sh = std::sin(w.chi / 2.0);
  const double c1 = std::cos(w.theta1 / 2.0), s1 = std::sin(w.theta1 / 2.0);
  const double c2 = std::cos(w.theta2 / 2.0), s2 = std::sin(w.theta2 / 2.0);
  const cplx eg = polar1(w.gamma / 2.0);
  const cplx egc = std::conj(eg);
  const cplx psum = polar1(-(w.phi1 + w.phi2) / 2.0);
  const cplx pdiff = polar1(-(w.phi1 - w.phi2) / 2.0);

  StateVector out;
  out.amp[0] = (ch * c1 * c2 * eg + sh * s1 * s2 * egc) * psum;
  out.amp[1] = (ch * c1 * s2 * eg - sh * s1 * c2 * egc) * pdiff;
  out.amp[2] = (ch * s1 * c2 * eg - sh * c1 * s2 * egc) * std::conj(pdiff);
  out.amp[3] = (ch * s1 * s2 * eg + sh * c1 * c2 * egc) * std::conj(psum);
  return out;
}

double concurrence_of_angles(const WhartonAngles& w) { return std::sin(w.chi); }

}  // namespace qmagic
