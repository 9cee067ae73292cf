#include "qmagic/frontiers.hpp"

#include <cmath>
#include <numbers>

#include "qmagic/errors.hpp"

namespace qmagic {

namespace {

void check_unit_interval(double delta, const char* fn) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw DomainError(std::string(fn) + ": delta outside [0, 1]");
}

double quartic(double d) {
  return ((24.0 * d + 32.0) * d - 72.0) * d * d + 17.0;
}

// Bisection on [lo, hi]; the bracket must straddle a sign change.
double bisect_quartic(double lo, double hi) {
  double flo = quartic(lo), fhi = quartic(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw ConvergenceFailure("solve_frontier_quartic: bracket has no sign change");
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    const double fm = quartic(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::ABC: return "ABC";
    case Branch::IHG: return "IHG";
    case Branch::GFE: return "GFE";
    case Branch::ED: return "ED";
  }
  return "?";
}

double f_abc(double delta) {
  check_unit_interval(delta, "f_abc");
  const double d2 = delta * delta;
  return -std::log(d2 * d2 - d2 + 1.0);
}

double f_ihg(double delta) {
  check_unit_interval(delta, "f_ihg");
  const double d2 = delta * delta;
  return std::log(9.0 / (3.0 * d2 * d2 - 2.0 * d2 * delta + 4.0));
}

double f_gfe(double delta) {
  check_unit_interval(delta, "f_gfe");
  const double d2 = delta * delta;
  return std::log(16.0 / (8.0 * d2 * d2 - 8.0 * d2 + 9.0));
}

double f_ed(double delta) {
  check_unit_interval(delta, "f_ed");
  const double d2 = delta * delta;
  return std::log(18.0 / (7.0 * d2 * d2 - 6.0 * d2 + 9.0));
}

FrontierQuarticRoots solve_frontier_quartic() {
  return {bisect_quartic(0.5, 0.71), bisect_quartic(0.95, 1.0)};
}

double solve_delta_g() { return solve_frontier_quartic().delta_g; }

double delta_g() {
  static const double v = solve_delta_g();
  return v;
}

double delta_e() { return std::sqrt(0.75); }

FrontierPoint m2_max(double delta) {
  check_unit_interval(delta, "m2_max");
  if (delta <= delta_g()) return {delta, f_ihg(delta), Branch::IHG};
  if (delta <= delta_e()) return {delta, f_gfe(delta), Branch::GFE};
  return {delta, f_ed(delta), Branch::ED};
}

double gamma_shift(double delta) {
  if (!(delta >= delta_e() && delta <= 1.0))
    throw DomainError("gamma_shift: delta outside [sqrt(3/4), 1]");
  double inner = (4.0 - 3.0 / (delta * delta)) / 9.0;
  if (inner < 0.0) inner = 0.0;  // fp residue at delta == sqrt(3/4)
  return std::numbers::pi / 2.0 - std::acos(std::sqrt(inner));
}

double m2_of_gamma(double chi, double gamma) {
  const double s2 = std::sin(chi) * std::sin(chi);
  const double c2 = 1.0 - s2;
  const double s4 = s2 * s2, c4 = c2 * c2;
  const double sg2 = std::sin(gamma) * std::sin(gamma);
  const double cg2 = std::cos(gamma) * std::cos(gamma);
  const double arg = (1.25 + c4 + s4 * (sg2 * sg2 + 1.25 * cg2 * cg2) +
                      1.5 * s2 * cg2) / 4.0;
  return -std::log(arg);
}

SpecialPoints special_points() {
  const FrontierQuarticRoots roots = solve_frontier_quartic();
  SpecialPoints p{};
  p.delta_b = 1.0 / std::sqrt(2.0);
  p.delta_f = 1.0 / std::sqrt(2.0);
  p.delta_h = 0.5;
  p.delta_e = delta_e();
  p.delta_g = roots.delta_g;
  p.delta_crossing = roots.delta_crossing;
  p.m2_b = f_abc(p.delta_b);
  p.m2_f = f_gfe(p.delta_f);
  p.m2_h = f_ihg(p.delta_h);
  p.m2_e = f_gfe(p.delta_e);
  p.m2_g = f_ihg(p.delta_g);
  // value where the extended IHG and GFE curves cross again; the frontier
  // itself is carried by ED there
  p.m2_crossing = f_gfe(p.delta_crossing);
  return p;
}

}  // namespace qmagic
