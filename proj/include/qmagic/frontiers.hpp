#pragma once

#include <string_view>

namespace qmagic {

// Boundary segments of the reachable (Delta, M2) region. ABC is the lower
// (minimal magic) boundary; IHG, GFE, ED compose the upper one.
enum class Branch { ABC, IHG, GFE, ED };

std::string_view branch_name(Branch b);

struct FrontierPoint {
  double delta{};
  double m2{};
  Branch branch{};
};

// Closed-form boundary curves; each throws DomainError outside [0, 1].
double f_abc(double delta);  // -ln(D^4 - D^2 + 1)
double f_ihg(double delta);  //  ln(9 / (3 D^4 - 2 D^3 + 4))
double f_gfe(double delta);  //  ln(16 / (8 D^4 - 8 D^2 + 9))
double f_ed(double delta);   //  ln(18 / (7 D^4 - 6 D^2 + 9))

// In-range roots of 24 D^4 + 32 D^3 - 72 D^2 + 17 = 0 (where the IHG and
// GFE curves cross). delta_g ~ 0.63726445 is the kink of the upper
// boundary; delta_crossing ~ 0.977411 is the second crossing of the two
// extended curves, beyond which ED carries the maximum.
struct FrontierQuarticRoots {
  double delta_g{};
  double delta_crossing{};
};

// Bracketed bisection to 1e-12. Throws ConvergenceFailure if a bracket
// fails to straddle a sign change (cannot happen; coding-error guard).
FrontierQuarticRoots solve_frontier_quartic();
double solve_delta_g();

double delta_g();  // cached
double delta_e();  // sqrt(3/4), tangency point of GFE and ED

// Piecewise maximum-magic boundary: IHG for D <= delta_g, GFE up to
// delta_e, ED beyond. At the exact joints the left branch provides the
// label (the values coincide).
FrontierPoint m2_max(double delta);

// Offset of the recurrence angle from its nominal value along the ED
// branch: pi/2 - arccos(sqrt((4 - 3/D^2)/9)). Defined for
// D in [sqrt(3/4), 1]; throws DomainError below sqrt(3/4).
double gamma_shift(double delta);

// Magic of the ED/GFE angle family as a function of chi and a free gamma:
//   -ln(( 5/4 + cos^4 chi + sin^4 chi (sin^4 g + 5/4 cos^4 g)
//         + 3/2 sin^2 chi cos^2 g ) / 4).
// At cos(gamma) = 0 this reduces to f_gfe(sin chi).
double m2_of_gamma(double chi, double gamma);

// Named landmarks of the two boundaries with their magic values.
struct SpecialPoints {
  double delta_b, delta_f, delta_h, delta_e, delta_g, delta_crossing;
  double m2_b, m2_f, m2_h, m2_e, m2_g, m2_crossing;
};

SpecialPoints special_points();

}  // namespace qmagic
