#include "qmagic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "qmagic/catalogs.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/frontiers.hpp"
#include "qmagic/haar.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/oracle.hpp"

namespace qmagic {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Check {
  std::string name;
  double residual = 0.0;
  bool pass = true;
  std::string detail;

  // records |got - want| against a tolerance
  void expect_near(double got, double want, double tol) {
    const double r = std::abs(got - want);
    residual = std::max(residual, r);
    if (!(r <= tol)) pass = false;
  }
  void expect(bool ok) {
    if (!ok) pass = false;
  }
  CheckResult done() const { return {name, pass, residual, detail}; }
};

CheckResult c1_frontier_anchors() {
  Check c{"frontier anchor values and tangency at E"};
  const double rt2 = 1.0 / std::sqrt(2.0);
  const double de = delta_e();
  c.expect_near(f_abc(rt2), std::log(4.0 / 3.0), 1e-10);
  c.expect_near(f_abc(0.5), std::log(16.0 / 13.0), 1e-10);
  c.expect_near(f_ihg(0.0), std::log(9.0 / 4.0), 1e-10);
  c.expect_near(f_ihg(0.5), std::log(16.0 / 7.0), 1e-10);
  c.expect_near(f_gfe(rt2), std::log(16.0 / 7.0), 1e-10);
  c.expect_near(f_ihg(1.0), std::log(9.0 / 5.0), 1e-10);
  c.expect_near(f_ed(1.0), std::log(9.0 / 5.0), 1e-10);
  c.expect_near(f_gfe(de), f_ed(de), 1e-10);
  const double slope_want = -(16.0 / 15.0) * de;
  const double h = 1e-6;
  const double s_gfe = (f_gfe(de + h) - f_gfe(de - h)) / (2 * h);
  const double s_ed = (f_ed(de + h) - f_ed(de - h)) / (2 * h);
  // slope residuals tracked separately from the 1e-10 value residuals
  const bool slopes_ok =
      std::abs(s_gfe - slope_want) <= 1e-5 && std::abs(s_ed - slope_want) <= 1e-5;
  c.expect(slopes_ok);
  c.detail = "slope(E)=" + fmt("%.8f", s_gfe) + " want " + fmt("%.8f", slope_want);
  return c.done();
}

CheckResult c2_quartic_roots() {
  Check c{"quartic roots: delta_G and secondary crossing"};
  const FrontierQuarticRoots r = solve_frontier_quartic();
  c.expect_near(r.delta_g, 0.63726445, 1e-7);
  c.expect_near(r.delta_crossing, 0.977411, 1e-5);
  auto quartic = [](double d) {
    return ((24.0 * d + 32.0) * d - 72.0) * d * d + 17.0;
  };
  c.expect(std::abs(quartic(r.delta_g)) < 1e-10);
  c.expect(std::abs(quartic(r.delta_crossing)) < 1e-10);
  c.detail = "delta_G=" + fmt("%.9f", r.delta_g) +
             " crossing=" + fmt("%.7f", r.delta_crossing);
  return c.done();
}

CheckResult c3_analytic_direct(const VerifyOptions& opts) {
  Check c{"analytic/direct equivalence of expectations and M2"};
  const int n = opts.fast ? 2000 : 10000;
  SplitMix64 rng(opts.seed);
  double max_entry = 0.0, max_m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const WhartonAngles w = sample_angles(rng);
    const ExpectationTable closed = expectation_table(w);
    const ExpectationTable direct = expectation_table(angles_to_state(w));
    for (int k = 0; k < kNumPauliStrings; ++k)
      max_entry = std::max(max_entry, std::abs(closed.values[k] - direct.values[k]));
    max_m2 = std::max(max_m2,
                      std::abs(m2_analytic(w) - m2_direct(angles_to_state(w))));
  }
  c.residual = std::max(max_entry, max_m2);
  c.expect(max_entry < 1e-10 && max_m2 < 1e-10);
  c.detail = "entries " + fmt("%.2e", max_entry) + ", m2 " + fmt("%.2e", max_m2);
  return c.done();
}

CheckResult c4_catalogs() {
  Check c{"catalog counts, frontier residuals, pattern censuses"};
  const CatalogReport abc = verify_catalog(Branch::ABC, 0.7);
  const CatalogReport ihg = verify_catalog(Branch::IHG, std::asin(0.45));
  const CatalogReport ihg_h = verify_catalog(Branch::IHG, std::asin(0.5));
  const CatalogReport gfe = verify_catalog(Branch::GFE, std::asin(0.68));
  const CatalogReport gfe_f = verify_catalog(Branch::GFE, std::asin(1.0 / std::sqrt(2.0)));
  const CatalogReport ed = verify_catalog(Branch::ED, std::asin(0.95));

  c.expect(abc.count_generated == 144 && abc.count_distinct == 144);
  c.expect(ihg.count_generated == 192 && ihg.count_distinct == 192);
  c.expect(gfe.count_generated == 288 && gfe.count_distinct == 288);
  c.expect(ed.count_generated == 576 && ed.count_distinct == 576);
  c.expect(int(abc.patterns_seen.size()) == 18);
  c.expect(int(gfe.patterns_seen.size()) == 9);
  c.expect(int(gfe_f.patterns_seen.size()) == 9);
  c.expect(int(ihg_h.patterns_seen.size()) == 6);
  c.expect(int(ed.patterns_seen.size()) == 9);
  for (const CatalogReport* r : {&abc, &ihg, &ihg_h, &gfe, &gfe_f, &ed}) {
    c.residual = std::max(c.residual, r->frontier_residual_max);
    c.expect(r->frontier_residual_max < 1e-10);
  }
  c.detail = "counts 144/192/288/576, censuses 18/9/6@H/9";
  return c.done();
}

CheckResult c5_clifford(const VerifyOptions& opts) {
  Check c{"clifford group order, orbits, magic invariance"};
  const CliffordGroup& group = clifford_group();
  c.expect(group.size() == kCliffordOrder);

  // generator invariance on random states
  SplitMix64 rng(opts.seed + 5);
  const auto gens = clifford_generators();
  double inv_dev = 0.0;
  for (int i = 0; i < 100; ++i) {
    const StateVector s = haar_sample(rng);
    const double m = m2_direct(s);
    for (const Unitary4& g : gens)
      inv_dev = std::max(inv_dev, std::abs(m2_direct(apply(g, s)) - m));
  }
  c.residual = std::max(c.residual, inv_dev);
  c.expect(inv_dev < 1e-10);

  const double rt2 = 1.0 / std::sqrt(2.0);
  const double m2_peak = std::log(16.0 / 7.0);
  auto count_at = [](const std::vector<StateVector>& orbit, double delta) {
    int n = 0;
    for (const StateVector& s : orbit)
      if (std::abs(concurrence(s) - delta) < 1e-10) ++n;
    return n;
  };

  // orbit of a max-magic state visits exactly the 480 extremal states:
  // 192 at Delta = 1/2 and 288 at Delta = 1/sqrt(2)
  const auto ihg_entries = ihg_catalog(std::asin(0.5));
  const auto orbit_h = clifford_orbit(state_of(ihg_entries.front()), group);
  double m2_dev = 0.0;
  for (const StateVector& s : orbit_h)
    m2_dev = std::max(m2_dev, std::abs(m2_direct(s) - m2_peak));
  c.residual = std::max(c.residual, m2_dev);
  c.expect(m2_dev < 1e-10);
  c.expect(count_at(orbit_h, 0.5) == 192);
  c.expect(count_at(orbit_h, rt2) == 288);
  c.expect(int(orbit_h.size()) == 480);

  const auto gfe_entries = gfe_catalog(std::asin(rt2));
  const auto orbit_f = clifford_orbit(state_of(gfe_entries.front()), group);
  c.expect(count_at(orbit_f, rt2) == 288);
  c.expect(int(orbit_f.size()) == 480);

  // union of the two orbits: still the 480 maximal-magic states
  std::vector<StateVector> all = orbit_h;
  for (const StateVector& s : orbit_f) {
    bool known = false;
    for (const StateVector& t : all)
      if (fidelity(s, t) > kFidelityDedupThreshold) {
        known = true;
        break;
      }
    if (!known) all.push_back(s);
  }
  c.expect(int(all.size()) == 480);

  // the 576 ED states at a generic chi split into two orbit classes of 288
  const auto ed_states = distinct_states(ed_catalog(std::asin(0.95)));
  c.expect(int(ed_states.size()) == 576);
  auto in_orbit = [](const StateVector& s, const std::vector<StateVector>& orbit) {
    for (const StateVector& t : orbit)
      if (fidelity(s, t) > kFidelityDedupThreshold) return true;
    return false;
  };
  const auto orbit_a = clifford_orbit(ed_states.front(), group);
  int in_a = 0;
  const StateVector* outside = nullptr;
  for (const StateVector& s : ed_states) {
    if (in_orbit(s, orbit_a))
      ++in_a;
    else if (!outside)
      outside = &s;
  }
  c.expect(in_a == 288);
  c.expect(outside != nullptr);
  int in_b = 0;
  if (outside) {
    const auto orbit_b = clifford_orbit(*outside, group);
    for (const StateVector& s : ed_states)
      if (in_orbit(s, orbit_b)) ++in_b;
  }
  c.expect(in_b == 288);

  c.detail = "order " + std::to_string(group.size()) + ", orbit@H " +
             std::to_string(count_at(orbit_h, 0.5)) + "+" +
             std::to_string(count_at(orbit_h, rt2)) + ", ED classes " +
             std::to_string(in_a) + "/" + std::to_string(in_b);
  return c.done();
}

CheckResult c6_oracle(const VerifyOptions& opts) {
  Check c{"grid-search oracle agrees with analytic frontiers"};
  std::vector<double> deltas;
  if (opts.fast)
    deltas = {0.5, 0.9};
  else
    deltas = {0.1, 0.3, 0.5, delta_g(), 0.7, 1.0 / std::sqrt(2.0),
              delta_e(), 0.9, 0.95, 1.0};

  double worst = 0.0;
  for (double d : deltas) {
    OracleConfig cfg;
    cfg.mode = OracleConfig::Mode::Maximize;
    const OracleResult up = frontier_oracle(d, cfg);
    cfg.mode = OracleConfig::Mode::Minimize;
    const OracleResult lo = frontier_oracle(d, cfg);
    worst = std::max(worst, std::abs(up.m2 - m2_max(d).m2));
    worst = std::max(worst, std::abs(lo.m2 - f_abc(d)));
  }
  c.residual = worst;
  c.expect(worst < 1e-4);

  // recovered gamma at Delta = 0.9: distance from the nearest nominal
  // multiple of pi/2 must equal the analytic shift
  OracleConfig cfg;
  cfg.mode = OracleConfig::Mode::Maximize;
  const OracleResult r = frontier_oracle(0.9, cfg);
  double dist = 1e300;
  for (int k = 0; k < 4; ++k) {
    const double nominal = k * kPi / 2.0;
    double dd = std::abs(r.angles.gamma - nominal);
    dd = std::min(dd, 2 * kPi - dd);
    dist = std::min(dist, dd);
  }
  const double gamma_res = std::abs(dist - gamma_shift(0.9));
  c.residual = std::max(c.residual, gamma_res);
  c.expect(gamma_res < 1e-4);
  c.detail = "max |oracle-analytic| " + fmt("%.2e", worst) + ", gamma dev " +
             fmt("%.2e", gamma_res);
  return c.done();
}

CheckResult c7_containment(const VerifyOptions& opts) {
  Check c{"Haar containment between the frontiers; purity identity"};
  const std::uint64_t n = opts.fast ? 100000 : 1000000;
  std::uint64_t violations = 0;
  double worst_bound = 0.0, worst_purity = 0.0;
  haar_measure_scan(n, opts.seed,
                    [&](const double* delta, const double* m2, const double* sumsq,
                        std::uint64_t len) {
                      for (std::uint64_t i = 0; i < len; ++i) {
                        const double lo = f_abc(delta[i]);
                        const double hi = m2_max(delta[i]).m2;
                        const double under = lo - m2[i];   // > 0 means below band
                        const double over = m2[i] - hi;    // > 0 means above band
                        worst_bound = std::max(worst_bound, std::max(under, over));
                        if (under > 1e-9 || over > 1e-9) ++violations;
                        const double pd = std::abs(sumsq[i] - 4.0);
                        worst_purity = std::max(worst_purity, pd);
                        if (pd > 1e-9) ++violations;
                      }
                    });
  c.residual = std::max(worst_bound, worst_purity);
  c.expect(violations == 0);
  c.detail = std::to_string(n) + " samples, worst bound margin " +
             fmt("%.2e", worst_bound) + ", purity dev " + fmt("%.2e", worst_purity);
  return c.done();
}

CheckResult c8_round_trip(const VerifyOptions& opts) {
  Check c{"parametrization round trip and spinor assembly"};
  const int n = opts.fast ? 2000 : 10000;
  SplitMix64 rng(opts.seed + 8);
  double max_conc = 0.0, max_fid = 0.0;
  for (int i = 0; i < n; ++i) {
    const WhartonAngles w = sample_angles(rng);
    max_conc = std::max(max_conc,
                        std::abs(concurrence(angles_to_state(w)) - std::sin(w.chi)));

    const double a1 = rng.uniform(0.0, 2 * kPi), a2 = rng.uniform(0.0, 2 * kPi);
    const StateVector via_spinors = assemble(make_spinor(w.theta1, w.phi1, a1),
                                             make_spinor(w.theta2, w.phi2, a2), w.chi);
    const WhartonAngles w2 = make_angles(w.theta1, w.phi1, w.theta2, w.phi2,
                                         w.chi, a1 + a2);
    max_fid = std::max(max_fid,
                       std::abs(1.0 - fidelity(via_spinors, angles_to_state(w2))));
  }
  c.residual = std::max(max_conc, max_fid);
  c.expect(max_conc < 1e-10 && max_fid < 1e-10);
  c.detail = "concurrence " + fmt("%.2e", max_conc) + ", assembly |1-F| " +
             fmt("%.2e", max_fid);
  return c.done();
}

}  // namespace

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts) {
  return {c1_frontier_anchors(), c2_quartic_roots(), c3_analytic_direct(opts),
          c4_catalogs(),         c5_clifford(opts),  c6_oracle(opts),
          c7_containment(opts),  c8_round_trip(opts)};
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace qmagic
