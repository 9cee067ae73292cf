#include "qmagic/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qmagic/errors.hpp"
#include "qmagic/measures.hpp"

namespace qmagic {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_P <P>^4 from the closed-form table; extremizing this (log is
// monotone) avoids a log per grid point.
double sum4_from_trig(const AngleTrig& t) {
  const ExpectationTable e = expectation_table(t);
  double s = 0.0;
  for (double v : e.values) {
    const double q = v * v;
    s += q * q;
  }
  return s;
}

struct TrigPair {
  double s, c;
};

TrigPair trig_of(double x) { return {std::sin(x), std::cos(x)}; }

double objective(double sin_chi, double cos_chi, const std::array<double, 5>& x,
                 bool maximize_m2) {
  AngleTrig t{};
  t.sin_chi = sin_chi;
  t.cos_chi = cos_chi;
  const TrigPair t1 = trig_of(x[0]), t2 = trig_of(x[1]);
  const TrigPair p1 = trig_of(x[2]), p2 = trig_of(x[3]), g = trig_of(x[4]);
  t.sin_t1 = t1.s;
  t.cos_t1 = t1.c;
  t.sin_t2 = t2.s;
  t.cos_t2 = t2.c;
  t.sin_p1 = p1.s;
  t.cos_p1 = p1.c;
  t.sin_p2 = p2.s;
  t.cos_p2 = p2.c;
  t.sin_g = g.s;
  t.cos_g = g.c;
  // maximizing m2 means minimizing sum4; flip so "bigger is better"
  const double s4 = sum4_from_trig(t);
  return maximize_m2 ? -s4 : s4;
}

// Golden-section maximization of f over [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi, double& best_val) {
  constexpr double invphi = 0.6180339887498949;
  double c = hi - (hi - lo) * invphi;
  double d = lo + (hi - lo) * invphi;
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 100; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * invphi;
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * invphi;
      fd = f(d);
    }
  }
  if (fc > fd) {
    best_val = fc;
    return c;
  }
  best_val = fd;
  return d;
}

}  // namespace

OracleResult frontier_oracle(double delta, const OracleConfig& cfg) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw DomainError("frontier_oracle: delta outside [0, 1]");
  if (cfg.coarse_grid_points_per_angle < 8)
    throw std::invalid_argument("frontier_oracle: grid points must be >= 8");
  if (!(cfg.refine_tolerance > 0.0))
    throw std::invalid_argument("frontier_oracle: tolerance must be > 0");

  const double chi = std::asin(delta);
  const double sin_chi = std::sin(chi), cos_chi = std::cos(chi);
  const bool maximize = cfg.mode == OracleConfig::Mode::Maximize;

  // Azimuthal/gamma grid: N points over [0, 2*pi). Polar grid: the same
  // angular step, N/2 + 1 points covering [0, pi] inclusive.
  const int n_az = cfg.coarse_grid_points_per_angle;
  const int n_pol = n_az / 2 + 1;
  const double step = 2.0 * kPi / n_az;

  std::vector<TrigPair> az(n_az), pol(n_pol);
  for (int k = 0; k < n_az; ++k) az[std::size_t(k)] = trig_of(k * step);
  for (int k = 0; k < n_pol; ++k) pol[std::size_t(k)] = trig_of(k * step);

  double best = -1e300;
  std::array<int, 5> best_idx{};
  AngleTrig t{};
  t.sin_chi = sin_chi;
  t.cos_chi = cos_chi;
  for (int i1 = 0; i1 < n_pol; ++i1) {
    t.sin_t1 = pol[std::size_t(i1)].s;
    t.cos_t1 = pol[std::size_t(i1)].c;
    for (int i2 = 0; i2 < n_pol; ++i2) {
      t.sin_t2 = pol[std::size_t(i2)].s;
      t.cos_t2 = pol[std::size_t(i2)].c;
      for (int j1 = 0; j1 < n_az; ++j1) {
        t.sin_p1 = az[std::size_t(j1)].s;
        t.cos_p1 = az[std::size_t(j1)].c;
        for (int j2 = 0; j2 < n_az; ++j2) {
          t.sin_p2 = az[std::size_t(j2)].s;
          t.cos_p2 = az[std::size_t(j2)].c;
          for (int jg = 0; jg < n_az; ++jg) {
            t.sin_g = az[std::size_t(jg)].s;
            t.cos_g = az[std::size_t(jg)].c;
            const double s4 = sum4_from_trig(t);
            const double val = maximize ? -s4 : s4;
            if (val > best) {
              best = val;
              best_idx = {i1, i2, j1, j2, jg};
            }
          }
        }
      }
    }
  }

  std::array<double, 5> x = {best_idx[0] * step, best_idx[1] * step,
                             best_idx[2] * step, best_idx[3] * step,
                             best_idx[4] * step};

  // Coordinate-wise bracketed line search, cycling until a full sweep stops
  // improving. The search window re-centers on the current point, widening
  // when the optimum presses against an edge.
  auto eval = [&](const std::array<double, 5>& p) {
    return objective(sin_chi, cos_chi, p, maximize);
  };
  double current = eval(x);
  for (int cycle = 0; cycle < cfg.refine_iterations; ++cycle) {
    const double before = current;
    for (int k = 0; k < 5; ++k) {
      double h = step;
      for (int widen = 0; widen < 6; ++widen) {
        double lo = x[std::size_t(k)] - h;
        double hi = x[std::size_t(k)] + h;
        if (k < 2) {  // polar angles stay in [0, pi]
          lo = std::max(lo, 0.0);
          hi = std::min(hi, kPi);
        }
        auto line = [&](double v) {
          std::array<double, 5> p = x;
          p[std::size_t(k)] = v;
          return eval(p);
        };
        double val = 0.0;
        const double arg = golden_max(line, lo, hi, val);
        if (val >= current) {
          x[std::size_t(k)] = arg;
          current = val;
        }
        const bool at_edge = std::min(arg - lo, hi - arg) < 1e-8 * (hi - lo);
        if (!at_edge) break;
        h *= 2.0;
      }
    }
    if (current - before < cfg.refine_tolerance) break;
  }

  OracleResult res;
  res.delta = delta;
  res.angles = make_angles(x[0], x[2], x[1], x[3], chi, x[4]);
  res.m2 = m2_analytic(res.angles);
  return res;
}

}  // namespace qmagic
