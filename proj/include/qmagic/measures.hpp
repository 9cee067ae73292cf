#pragma once

#include <array>
#include <cstdint>

#include "qmagic/state.hpp"
#include "qmagic/wharton.hpp"

namespace qmagic {

// All 16 Pauli-string expectation values of one state, indexed like
// PauliString::index(). For a pure state values[II] = 1, every entry lies
// in [-1, 1] and the sum of squares equals 4 (purity).
struct ExpectationTable {
  std::array<double, kNumPauliStrings> values{};

  double at(PauliString p) const { return values[p.index()]; }
};

// Precomputed sines/cosines of the six angles; lets grid searches reuse
// per-angle trig instead of recomputing it for every tuple.
struct AngleTrig {
  double sin_chi, cos_chi;
  double sin_t1, cos_t1, sin_t2, cos_t2;
  double sin_p1, cos_p1, sin_p2, cos_p2;
  double sin_g, cos_g;

  static AngleTrig from(const WhartonAngles& w);
};

// Which expectation values vanish (|value| < tol). mask[II] is always false.
struct ZeroPattern {
  std::array<bool, kNumPauliStrings> mask{};
  double tol{};

  int zero_count() const {
    int n = 0;
    for (bool b : mask) n += b;
    return n;
  }
  // Bitmask form (bit k = mask[k]); convenient as a set key for censuses.
  std::uint16_t bits() const {
    std::uint16_t v = 0;
    for (int k = 0; k < kNumPauliStrings; ++k)
      if (mask[k]) v |= std::uint16_t(1u << k);
    return v;
  }
};

inline constexpr double kZeroPatternTol = 1e-9;

// Concurrence 2|ad - bc|, clamped into [0, 1].
double concurrence(const StateVector& s);

// Magic as -ln( sum_P <psi|P|psi>^4 / 4 ), computed from the amplitudes via
// the 16 Pauli matrices. Zero exactly on stabilizer states; tiny negative
// fp results in [-1e-12, 0) are returned as 0.
double m2_direct(const StateVector& s);

// Closed-form trigonometric expectation table in the six angles. Agrees
// entrywise with expectation(angles_to_state(w), p) to ~1e-15.
ExpectationTable expectation_table(const AngleTrig& t);
ExpectationTable expectation_table(const WhartonAngles& w);

// Entry-by-entry table through the matrix route (reference path).
ExpectationTable expectation_table(const StateVector& s);

double m2_from_table(const ExpectationTable& t);

// Magic from the closed-form table. Equals m2_direct(angles_to_state(w)).
double m2_analytic(const WhartonAngles& w);

// tol must be > 0; default kZeroPatternTol.
ZeroPattern zero_pattern(const ExpectationTable& t, double tol = kZeroPatternTol);

}  // namespace qmagic
