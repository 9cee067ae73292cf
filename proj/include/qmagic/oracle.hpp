#pragma once

#include "qmagic/wharton.hpp"

namespace qmagic {

// Brute-force frontier check, independent of the closed-form boundary
// curves: fixes chi = arcsin(delta) and extremizes M2 over the remaining
// five angles by coarse grid search plus coordinate-wise bracketed line
// search.
struct OracleConfig {
  enum class Mode { Maximize, Minimize };

  // Number of azimuthal/gamma grid points over [0, 2*pi); the polar angles
  // use the same angular step, i.e. N/2 + 1 points over [0, pi].
  int coarse_grid_points_per_angle = 24;
  int refine_iterations = 200;     // max refinement cycles over the 5 coordinates
  double refine_tolerance = 1e-9;  // stop when a full cycle improves less than this
  Mode mode = Mode::Maximize;
};

struct OracleResult {
  double delta{};
  double m2{};
  WhartonAngles angles{};  // extremizing angles, wrapped into canonical ranges
};

// Throws DomainError for delta outside [0, 1] and std::invalid_argument for
// a config violating grid >= 8 or tolerance > 0.
OracleResult frontier_oracle(double delta, const OracleConfig& cfg = {});

}  // namespace qmagic
