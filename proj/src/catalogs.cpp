#include "qmagic/catalogs.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qmagic/errors.hpp"
#include "qmagic/rng.hpp"

namespace qmagic {

namespace {

constexpr double kPi = std::numbers::pi;

// theta value shared by the whole IHG family: sin(theta) = sqrt(2/3).
double ihg_alpha() {
  static const double a = std::acos(1.0 / std::sqrt(3.0));
  return a;
}

// ---------------------------------------------------------------------------
// ABC family (18 rows x 8). Rows marked Free leave the angle unconstrained;
// the canonical representative uses 0 and gamma is tied by the row formula
//   gamma = [(-1)^n phi1] + [(-1)^m phi2] + base +- pi/2
// with the bracketed terms present only where the row uses them.
// ---------------------------------------------------------------------------

enum class PhiSet { Free, HalfPair, ZeroPi };  // Free, {pi/2, 3pi/2}, {0, pi}

struct AbcRow {
  const char* mnemonic;
  bool theta1_npi;  // theta1 in {0, pi} enumerated by n; otherwise pi/2
  bool theta2_mpi;
  PhiSet phi1;
  PhiSet phi2;
  bool gamma_has_phi1;
  bool gamma_has_phi2;
  double gamma_base;  // 0 -> {+-pi/2}; pi/2 -> {0, pi}
};

const std::array<AbcRow, 18> kAbcRows = {{
    {"ss---", true, true, PhiSet::Free, PhiSet::Free, true, true, 0.0},
    {"csc--", false, true, PhiSet::HalfPair, PhiSet::Free, false, true, kPi / 2},
    {"ss---", true, true, PhiSet::Free, PhiSet::Free, true, true, kPi / 2},
    {"csc--", false, true, PhiSet::HalfPair, PhiSet::Free, false, true, 0.0},
    {"css--", false, true, PhiSet::ZeroPi, PhiSet::Free, false, true, kPi / 2},
    {"css--", false, true, PhiSet::ZeroPi, PhiSet::Free, false, true, 0.0},
    {"sc-c-", true, false, PhiSet::Free, PhiSet::HalfPair, true, false, kPi / 2},
    {"ccccc", false, false, PhiSet::HalfPair, PhiSet::HalfPair, false, false, 0.0},
    {"sc-c-", true, false, PhiSet::Free, PhiSet::HalfPair, true, false, 0.0},
    {"ccccs", false, false, PhiSet::HalfPair, PhiSet::HalfPair, false, false, kPi / 2},
    {"ccscc", false, false, PhiSet::ZeroPi, PhiSet::HalfPair, false, false, 0.0},
    {"ccscs", false, false, PhiSet::ZeroPi, PhiSet::HalfPair, false, false, kPi / 2},
    {"sc-s-", true, false, PhiSet::Free, PhiSet::ZeroPi, true, false, kPi / 2},
    {"cccsc", false, false, PhiSet::HalfPair, PhiSet::ZeroPi, false, false, 0.0},
    {"sc-s-", true, false, PhiSet::Free, PhiSet::ZeroPi, true, false, 0.0},
    {"cccss", false, false, PhiSet::HalfPair, PhiSet::ZeroPi, false, false, kPi / 2},
    {"ccssc", false, false, PhiSet::ZeroPi, PhiSet::ZeroPi, false, false, 0.0},
    {"ccsss", false, false, PhiSet::ZeroPi, PhiSet::ZeroPi, false, false, kPi / 2},
}};

std::vector<double> phi_choices(PhiSet set, double free_value) {
  switch (set) {
    case PhiSet::Free: return {free_value};
    case PhiSet::HalfPair: return {kPi / 2, 3 * kPi / 2};
    case PhiSet::ZeroPi: return {0.0, kPi};
  }
  return {};
}

// gamma_phi1/gamma_phi2 are the phi values fed to the gamma formula; they
// equal the state's phi values except in the broken-tie negative control.
std::vector<CatalogEntry> expand_abc_row(int row_index, double chi,
                                         double phi1_value, double phi2_value,
                                         double gamma_phi1, double gamma_phi2) {
  const AbcRow& row = kAbcRows[std::size_t(row_index)];
  std::vector<CatalogEntry> out;
  out.reserve(8);

  const auto theta_choices = [](bool npi) {
    return npi ? std::vector<std::pair<double, int>>{{0.0, 0}, {kPi, 1}}
               : std::vector<std::pair<double, int>>{{kPi / 2, 0}};
  };

  for (const auto& [t1, n] : theta_choices(row.theta1_npi))
    for (const auto& [t2, m] : theta_choices(row.theta2_mpi))
      for (double p1 : phi_choices(row.phi1, phi1_value))
        for (double p2 : phi_choices(row.phi2, phi2_value)) {
          const double g1 = (row.phi1 == PhiSet::Free) ? gamma_phi1 : p1;
          const double g2 = (row.phi2 == PhiSet::Free) ? gamma_phi2 : p2;
          for (double sgn : {+1.0, -1.0}) {
            double gamma = row.gamma_base + sgn * kPi / 2;
            if (row.gamma_has_phi1) gamma += (n == 0 ? 1.0 : -1.0) * g1;
            if (row.gamma_has_phi2) gamma += (m == 0 ? 1.0 : -1.0) * g2;
            CatalogEntry e;
            e.branch = Branch::ABC;
            e.row = row_index;
            e.mnemonic = row.mnemonic;
            e.angles = make_angles(t1, p1, t2, p2, chi, gamma);
            out.push_back(std::move(e));
          }
        }
  return out;
}

// ---------------------------------------------------------------------------
// GFE family (9 rows x 32) and its gamma-shifted ED counterpart (9 x 64).
// ---------------------------------------------------------------------------

struct GfeRow {
  const char* code;
  std::vector<double> t1, t2, p1, p2, g;
};

const std::vector<GfeRow>& gfe_rows() {
  static const std::vector<double> q = {kPi / 4, 3 * kPi / 4};
  static const std::vector<double> h = {kPi / 2, 3 * kPi / 2};
  static const std::vector<double> zp = {0.0, kPi};
  static const std::vector<double> qq = {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4};
  static const std::vector<double> half = {kPi / 2};
  static const std::vector<GfeRow> rows = {
      {"--ccc", q, q, h, h, h},
      {"--scc", q, q, zp, h, h},
      {"c--cs", half, q, qq, h, zp},
      {"--csc", q, q, h, zp, h},
      {"--ssc", q, q, zp, zp, h},
      {"c--ss", half, q, qq, zp, zp},
      {"-cc-s", q, half, h, qq, zp},
      {"-cs-s", q, half, zp, qq, zp},
      {"cc--c", half, half, qq, qq, h},
  };
  return rows;
}

std::vector<CatalogEntry> expand_gfe_like(Branch branch, double chi,
                                          double gamma_offset) {
  std::vector<CatalogEntry> out;
  out.reserve(branch == Branch::ED ? 576 : 288);
  const auto& rows = gfe_rows();
  for (int r = 0; r < int(rows.size()); ++r) {
    const GfeRow& row = rows[std::size_t(r)];
    for (double t1 : row.t1)
      for (double t2 : row.t2)
        for (double p1 : row.p1)
          for (double p2 : row.p2)
            for (double g : row.g) {
              const std::vector<double> gammas =
                  (branch == Branch::ED)
                      ? std::vector<double>{g + gamma_offset, g - gamma_offset}
                      : std::vector<double>{g};
              for (double gamma : gammas) {
                CatalogEntry e;
                e.branch = branch;
                e.row = r;
                e.mnemonic = (branch == Branch::GFE) ? row.code : "";
                e.angles = make_angles(t1, p1, t2, p2, chi, gamma);
                out.push_back(std::move(e));
              }
            }
  }
  return out;
}

// ---------------------------------------------------------------------------
// IHG family. Compact form: 4 rows x (4 phi1 x 4 phi2 x 3 gamma) = 192.
// Expanded form: 24 cases "0a".."5d" grouped by zero pattern at the magic
// peak; phi2 is tied to phi1 (parallel {phi1, phi1+pi} or perpendicular
// {phi1 +- pi/2}) and gamma is either fixed or selected by phi1.
// ---------------------------------------------------------------------------

std::vector<CatalogEntry> ihg_compact_impl(double chi) {
  const double a = ihg_alpha();
  const std::vector<double> qq = {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4};
  const std::vector<double> g_odd = {kPi / 3, kPi, 5 * kPi / 3};
  const std::vector<double> g_even = {0.0, 2 * kPi / 3, 4 * kPi / 3};
  struct Row {
    double t1, t2;
    const std::vector<double>* g;
  };
  const std::array<Row, 4> rows = {{{a, a, &g_odd},
                                    {kPi - a, kPi - a, &g_odd},
                                    {a, kPi - a, &g_even},
                                    {kPi - a, a, &g_even}}};
  std::vector<CatalogEntry> out;
  out.reserve(192);
  for (int r = 0; r < 4; ++r)
    for (double p1 : qq)
      for (double p2 : qq)
        for (double g : *rows[std::size_t(r)].g) {
          CatalogEntry e;
          e.branch = Branch::IHG;
          e.row = r;
          e.angles = make_angles(rows[std::size_t(r)].t1, p1,
                                 rows[std::size_t(r)].t2, p2, chi, g);
          out.push_back(std::move(e));
        }
  return out;
}

struct IhgCase {
  int pattern;
  char letter;
  int theta_kind;  // 0..3 fixed pairs; 4: t2 = t1 over {a, pi-a}; 5: t2 = pi - t1
  bool phi2_perp;  // phi2 = phi1 +- pi/2; otherwise {phi1, phi1 + pi}
  bool gamma_fixed;
  double g_fixed;  // used when gamma_fixed
  double g_lo;     // phi1 in {pi/4, 5pi/4}
  double g_hi;     // phi1 in {3pi/4, 7pi/4}
};

const std::array<IhgCase, 20>& ihg_cases() {
  constexpr double g0 = 0.0, g13 = kPi / 3, g23 = 2 * kPi / 3, gpi = kPi,
                   g43 = 4 * kPi / 3, g53 = 5 * kPi / 3;
  static const std::array<IhgCase, 20> cases = {{
      {0, 'a', 4, true, true, gpi, 0, 0},
      {0, 'b', 5, false, true, g0, 0, 0},
      {1, 'a', 0, false, false, 0, g53, g13},
      {1, 'b', 1, false, false, 0, g13, g53},
      {1, 'c', 2, true, false, 0, g23, g43},
      {1, 'd', 3, true, false, 0, g43, g23},
      {2, 'a', 4, false, true, gpi, 0, 0},
      {2, 'b', 5, true, true, g0, 0, 0},
      {3, 'a', 0, true, false, 0, g53, g13},
      {3, 'b', 1, true, false, 0, g13, g53},
      {3, 'c', 2, false, false, 0, g23, g43},
      {3, 'd', 3, false, false, 0, g43, g23},
      {4, 'a', 0, true, false, 0, g13, g53},
      {4, 'b', 1, true, false, 0, g53, g13},
      {4, 'c', 2, false, false, 0, g43, g23},
      {4, 'd', 3, false, false, 0, g23, g43},
      {5, 'a', 0, false, false, 0, g13, g53},
      {5, 'b', 1, false, false, 0, g53, g13},
      {5, 'c', 2, true, false, 0, g43, g23},
      {5, 'd', 3, true, false, 0, g23, g43},
  }};
  return cases;
}

std::vector<CatalogEntry> ihg_expanded_impl(double chi) {
  const double a = ihg_alpha();
  const std::vector<double> qq = {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4};
  std::vector<CatalogEntry> out;
  out.reserve(192);
  for (const IhgCase& cs : ihg_cases()) {
    std::vector<std::pair<double, double>> thetas;
    switch (cs.theta_kind) {
      case 0: thetas = {{a, a}}; break;
      case 1: thetas = {{kPi - a, kPi - a}}; break;
      case 2: thetas = {{a, kPi - a}}; break;
      case 3: thetas = {{kPi - a, a}}; break;
      case 4: thetas = {{a, a}, {kPi - a, kPi - a}}; break;
      case 5: thetas = {{a, kPi - a}, {kPi - a, a}}; break;
    }
    for (const auto& [t1, t2] : thetas)
      for (double p1 : qq) {
        const std::vector<double> p2s =
            cs.phi2_perp ? std::vector<double>{p1 + kPi / 2, p1 - kPi / 2}
                         : std::vector<double>{p1, p1 + kPi};
        const bool lo = (std::abs(p1 - kPi / 4) < 1e-12 ||
                         std::abs(p1 - 5 * kPi / 4) < 1e-12);
        const double g = cs.gamma_fixed ? cs.g_fixed : (lo ? cs.g_lo : cs.g_hi);
        for (double p2 : p2s) {
          CatalogEntry e;
          e.branch = Branch::IHG;
          e.row = cs.pattern;
          e.case_label = std::string(1, char('0' + cs.pattern)) + cs.letter;
          e.angles = make_angles(t1, p1, t2, p2, chi, g);
          out.push_back(std::move(e));
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------

void check_branch_domain(Branch b, double chi) {
  if (!(chi >= 0.0 && chi <= kPi / 2 + 1e-12))
    throw DomainError("catalog: chi outside [0, pi/2]");
  const double s = std::sin(chi);
  constexpr double tol = 1e-9;
  switch (b) {
    case Branch::ABC:
      if (!(chi > 0.0 && chi < kPi / 2))
        throw DomainError("abc_catalog: chi must lie strictly inside (0, pi/2)");
      return;
    case Branch::GFE:
      if (!(s >= delta_g() - tol && s <= delta_e() + tol))
        throw DomainError("gfe_catalog: sin(chi) outside [delta_G, sqrt(3/4)]");
      return;
    case Branch::IHG:
      if (!(s <= delta_g() + tol))
        throw DomainError("ihg_catalog: sin(chi) outside [0, delta_G]");
      return;
    case Branch::ED:
      if (!(s >= delta_e() - tol))
        throw DomainError("ed_catalog: sin(chi) outside [sqrt(3/4), 1]");
      return;
  }
}

double branch_frontier(Branch b, double delta) {
  switch (b) {
    case Branch::ABC: return f_abc(delta);
    case Branch::IHG: return f_ihg(delta);
    case Branch::GFE: return f_gfe(delta);
    case Branch::ED: return f_ed(delta);
  }
  throw std::logic_error("branch_frontier: bad branch");
}

bool in_set(const StateVector& s, const std::vector<StateVector>& set) {
  for (const StateVector& t : set)
    if (fidelity(s, t) > kFidelityDedupThreshold) return true;
  return false;
}

void print17(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void write_csv_row(std::ostream& os, Branch branch, int row,
                   const std::string& case_label, const WhartonAngles* w,
                   const StateVector& s) {
  os << branch_name(branch) << ',' << row << ',' << case_label << ',';
  if (w) {
    const double angles[6] = {w->theta1, w->theta2, w->phi1, w->phi2, w->chi, w->gamma};
    for (double a : angles) {
      print17(os, a);
      os << ',';
    }
  } else {
    os << ",,,,,,";
  }
  for (const cplx& z : s.amp) {
    print17(os, z.real());
    os << ',';
    print17(os, z.imag());
    os << ',';
  }
  print17(os, concurrence(s));
  os << ',';
  print17(os, m2_direct(s));
  os << '\n';
}

constexpr const char* kCsvHeader =
    "branch,row,case_label,theta1,theta2,phi1,phi2,chi,gamma,"
    "re_a,im_a,re_b,im_b,re_c,im_c,re_d,im_d,delta,m2";

}  // namespace

StateVector state_of(const CatalogEntry& e) { return angles_to_state(e.angles); }

std::vector<StateVector> distinct_states(const std::vector<CatalogEntry>& entries) {
  std::vector<StateVector> out;
  out.reserve(entries.size());
  for (const CatalogEntry& e : entries) {
    const StateVector s = state_of(e);
    if (!in_set(s, out)) out.push_back(s);
  }
  return out;
}

std::vector<CatalogEntry> abc_catalog(double chi) {
  check_branch_domain(Branch::ABC, chi);
  std::vector<CatalogEntry> out;
  out.reserve(144);
  for (int r = 0; r < 18; ++r) {
    auto entries = expand_abc_row(r, chi, 0.0, 0.0, 0.0, 0.0);
    out.insert(out.end(), entries.begin(), entries.end());
  }
  return out;
}

std::vector<CatalogEntry> gfe_catalog(double chi) {
  check_branch_domain(Branch::GFE, chi);
  return expand_gfe_like(Branch::GFE, chi, 0.0);
}

std::vector<CatalogEntry> ed_catalog(double chi) {
  check_branch_domain(Branch::ED, chi);
  const double s = std::min(std::sin(chi), 1.0);
  const double offset = gamma_shift(std::max(s, delta_e()));
  return expand_gfe_like(Branch::ED, chi, offset);
}

std::vector<CatalogEntry> ihg_catalog_compact(double chi) {
  check_branch_domain(Branch::IHG, chi);
  return ihg_compact_impl(chi);
}

std::vector<CatalogEntry> ihg_catalog(double chi) {
  check_branch_domain(Branch::IHG, chi);
  std::vector<CatalogEntry> expanded = ihg_expanded_impl(chi);
  // both enumerations must describe the same 192 physical states
  const std::vector<CatalogEntry> compact = ihg_compact_impl(chi);
  if (expanded.size() != compact.size())
    throw std::logic_error("ihg_catalog: enumeration sizes differ");
  std::vector<StateVector> compact_states;
  compact_states.reserve(compact.size());
  for (const CatalogEntry& e : compact) compact_states.push_back(state_of(e));
  for (const CatalogEntry& e : expanded)
    if (!in_set(state_of(e), compact_states))
      throw std::logic_error("ihg_catalog: expanded state missing from compact enumeration");
  return expanded;
}

CatalogReport verify_catalog(Branch branch, double chi) {
  std::vector<CatalogEntry> entries;
  switch (branch) {
    case Branch::ABC: entries = abc_catalog(chi); break;
    case Branch::GFE: entries = gfe_catalog(chi); break;
    case Branch::IHG: entries = ihg_catalog(chi); break;
    case Branch::ED: entries = ed_catalog(chi); break;
  }
  CatalogReport rep;
  rep.branch = branch;
  rep.chi = chi;
  rep.count_generated = int(entries.size());
  rep.count_distinct = int(distinct_states(entries).size());
  const double target = branch_frontier(branch, std::min(std::sin(chi), 1.0));
  for (const CatalogEntry& e : entries) {
    rep.patterns_seen.insert(zero_pattern(expectation_table(e.angles)).bits());
    const double m2 = m2_direct(state_of(e));
    rep.frontier_residual_max =
        std::max(rep.frontier_residual_max, std::abs(m2 - target));
  }
  return rep;
}

bool free_angle_collapse_check(int abc_row, double chi, const CollapseOptions& opts) {
  if (abc_row < 0 || abc_row >= 18)
    throw DomainError("free_angle_collapse_check: row outside 0..17");
  const AbcRow& row = kAbcRows[std::size_t(abc_row)];
  const bool free1 = row.phi1 == PhiSet::Free;
  const bool free2 = row.phi2 == PhiSet::Free;
  if (!free1 && !free2)
    throw DomainError("free_angle_collapse_check: row has no free angle");
  check_branch_domain(Branch::ABC, chi);

  const auto canonical = expand_abc_row(abc_row, chi, 0.0, 0.0, 0.0, 0.0);
  std::vector<StateVector> canonical_states;
  canonical_states.reserve(canonical.size());
  for (const CatalogEntry& e : canonical) canonical_states.push_back(state_of(e));

  SplitMix64 rng(opts.seed);
  for (int s = 0; s < opts.samples; ++s) {
    const double p1 = free1 ? rng.uniform(0.0, 2 * kPi) : 0.0;
    const double p2 = free2 ? rng.uniform(0.0, 2 * kPi) : 0.0;
    const double g1 = opts.break_gamma_tie ? 0.0 : p1;
    const double g2 = opts.break_gamma_tie ? 0.0 : p2;
    const auto sampled = expand_abc_row(abc_row, chi, p1, p2, g1, g2);
    for (std::size_t k = 0; k < sampled.size(); ++k)
      if (fidelity(state_of(sampled[k]), canonical_states[k]) <= kFidelityDedupThreshold)
        return false;
  }
  return true;
}

void write_catalog_csv(std::ostream& os, const std::vector<CatalogEntry>& entries,
                       bool with_header) {
  if (with_header) os << kCsvHeader << '\n';
  for (const CatalogEntry& e : entries)
    write_csv_row(os, e.branch, e.row, e.case_label, &e.angles, state_of(e));
}

void write_state_csv(std::ostream& os, const std::vector<StateVector>& states,
                     Branch branch, int row, bool with_header) {
  if (with_header) os << kCsvHeader << '\n';
  for (const StateVector& s : states)
    write_csv_row(os, branch, row, "orbit", nullptr, s);
}

}  // namespace qmagic
