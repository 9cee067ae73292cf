// qmagic: command-line front end. Subcommands mirror the library surface
// (measure, frontier, catalog, sample, oracle, orbit, verify-all) and emit
// CSV with a metadata header. Seeds come from flags only; identical argv
// produces byte-identical output.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmagic/catalogs.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/errors.hpp"
#include "qmagic/frontiers.hpp"
#include "qmagic/haar.hpp"
#include "qmagic/histogram.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/oracle.hpp"
#include "qmagic/verify.hpp"
#include "qmagic/version.hpp"

namespace {

using namespace qmagic;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Accepts "1", "-0.5", "2i", "-1.5i", "1+2i", "0.3-0.4i" (also 'j').
cplx parse_complex(const std::string& tok) {
  std::string s;
  for (char ch : tok)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty complex token");

  bool imag_unit = false;
  if (s.back() == 'i' || s.back() == 'j') {
    imag_unit = true;
    s.pop_back();
  }
  // split at the last +/- that is not an exponent sign and not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto to_d = [](const std::string& u) {
    if (u.empty() || u == "+") return 1.0;
    if (u == "-") return -1.0;
    std::size_t pos = 0;
    const double v = std::stod(u, &pos);
    if (pos != u.size()) throw std::invalid_argument("bad number: " + u);
    return v;
  };
  if (!imag_unit) {
    if (split != std::string::npos)
      throw std::invalid_argument("bad complex token: " + tok);
    return {to_d(s), 0.0};
  }
  if (split == std::string::npos) return {0.0, to_d(s)};
  return {to_d(s.substr(0, split)), to_d(s.substr(split))};
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Branch parse_branch(const std::string& s) {
  if (s == "ABC") return Branch::ABC;
  if (s == "IHG") return Branch::IHG;
  if (s == "GFE") return Branch::GFE;
  if (s == "ED") return Branch::ED;
  throw DomainError("unknown branch: " + s + " (expected ABC|IHG|GFE|ED)");
}

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw std::runtime_error("cannot open output file: " + path);
      os = file.get();
    }
  }
  std::ostream& stream() { return *os; }
};

void meta(std::ostream& os, const std::string& subcommand, const std::string& params) {
  os << "# qmagic " << kVersion << ' ' << subcommand << '\n';
  if (!params.empty()) os << "# " << params << '\n';
}

std::vector<CatalogEntry> catalog_for(Branch b, double chi) {
  switch (b) {
    case Branch::ABC: return abc_catalog(chi);
    case Branch::IHG: return ihg_catalog(chi);
    case Branch::GFE: return gfe_catalog(chi);
    case Branch::ED: return ed_catalog(chi);
  }
  throw std::logic_error("bad branch");
}

int run(int argc, char** argv) {
  CLI::App app{"magic/entanglement extremes for pure two-qubit states"};
  app.require_subcommand(1);

  // measure
  auto* measure = app.add_subcommand("measure", "concurrence and M2 of one state");
  std::string state_arg, angles_arg, out_path;
  measure->add_option("--state", state_arg, "a,b,c,d (complex, e.g. 1,0,0,1+1i); normalized");
  measure->add_option("--angles", angles_arg, "theta1,phi1,theta2,phi2,chi,gamma (radians)");
  measure->add_option("--out", out_path, "output file (default stdout)");

  // frontier
  auto* frontier = app.add_subcommand("frontier", "boundary values at a concurrence");
  double fr_delta = 0.0;
  std::string fr_branch;
  frontier->add_option("--delta", fr_delta, "concurrence in [0,1]")->required();
  frontier->add_option("--branch", fr_branch, "ABC|IHG|GFE|ED (default: max and min)");
  frontier->add_option("--out", out_path, "output file (default stdout)");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "extremal states of one branch");
  std::string cat_branch;
  double cat_chi = 0.0;
  catalog->add_option("--branch", cat_branch, "ABC|IHG|GFE|ED")->required();
  catalog->add_option("--chi", cat_chi, "concurrence angle (radians)")->required();
  catalog->add_option("--out", out_path, "output file (default stdout)");

  // sample
  auto* sample = app.add_subcommand("sample", "Haar-sampled (Delta, M2) histogram");
  std::uint64_t n = 1000000, seed = 1;
  int bins = 200;
  sample->add_option("--n", n, "number of samples (default 1e6)");
  sample->add_option("--bins", bins, "bins per axis (default 200)");
  sample->add_option("--seed", seed, "RNG seed (default 1)");
  sample->add_option("--out", out_path, "output file (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "grid-search frontier check");
  double or_delta = 0.0;
  std::string or_mode = "max";
  int or_grid = 24, or_iters = 200;
  double or_tol = 1e-9;
  oracle->add_option("--delta", or_delta, "concurrence in [0,1]")->required();
  oracle->add_option("--mode", or_mode, "max|min (default max)");
  oracle->add_option("--grid", or_grid, "coarse grid points per angle (default 24)");
  oracle->add_option("--iters", or_iters, "refinement cycles (default 200)");
  oracle->add_option("--tol", or_tol, "refinement tolerance (default 1e-9)");
  oracle->add_option("--out", out_path, "output file (default stdout)");

  // orbit
  auto* orbit = app.add_subcommand("orbit", "Clifford orbit of a catalog state");
  std::string orb_branch;
  double orb_chi = 0.0;
  int orb_row = 0;
  orbit->add_option("--branch", orb_branch, "ABC|IHG|GFE|ED")->required();
  orbit->add_option("--chi", orb_chi, "concurrence angle (radians)")->required();
  orbit->add_option("--row", orb_row, "source-table row of the seed state")->required();
  orbit->add_option("--out", out_path, "output file (default stdout)");

  // verify-all
  auto* verify = app.add_subcommand("verify-all", "run the full verification battery");
  bool fast = false;
  std::uint64_t vseed = VerifyOptions{}.seed;
  verify->add_flag("--fast", fast, "reduced sample counts, same thresholds");
  verify->add_option("--seed", vseed, "RNG seed for the sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (measure->parsed()) {
    if (state_arg.empty() == angles_arg.empty())
      throw DomainError("measure: give exactly one of --state or --angles");
    StateVector s;
    if (!state_arg.empty()) {
      const auto toks = split_csv(state_arg);
      if (toks.size() != 4) throw DomainError("measure: --state needs 4 amplitudes");
      s = make_state(parse_complex(toks[0]), parse_complex(toks[1]),
                     parse_complex(toks[2]), parse_complex(toks[3]));
    } else {
      const auto toks = split_csv(angles_arg);
      if (toks.size() != 6) throw DomainError("measure: --angles needs 6 values");
      s = angles_to_state(make_angles(std::stod(toks[0]), std::stod(toks[1]),
                                      std::stod(toks[2]), std::stod(toks[3]),
                                      std::stod(toks[4]), std::stod(toks[5])));
    }
    Output out(out_path);
    meta(out.stream(), "measure",
         state_arg.empty() ? "angles=" + angles_arg : "state=" + state_arg);
    out.stream() << "delta,m2\n"
                 << fmt17(concurrence(s)) << ',' << fmt17(m2_direct(s)) << '\n';
    return 0;
  }

  if (frontier->parsed()) {
    Output out(out_path);
    meta(out.stream(), "frontier", "delta=" + fmt17(fr_delta));
    out.stream() << "delta,branch,m2\n";
    if (fr_branch.empty()) {
      const FrontierPoint p = m2_max(fr_delta);
      out.stream() << fmt17(fr_delta) << ',' << branch_name(p.branch) << ','
                   << fmt17(p.m2) << '\n';
      out.stream() << fmt17(fr_delta) << ",ABC," << fmt17(f_abc(fr_delta)) << '\n';
    } else {
      const Branch b = parse_branch(fr_branch);
      double v = 0.0;
      switch (b) {
        case Branch::ABC: v = f_abc(fr_delta); break;
        case Branch::IHG: v = f_ihg(fr_delta); break;
        case Branch::GFE: v = f_gfe(fr_delta); break;
        case Branch::ED: v = f_ed(fr_delta); break;
      }
      out.stream() << fmt17(fr_delta) << ',' << branch_name(b) << ',' << fmt17(v)
                   << '\n';
    }
    return 0;
  }

  if (catalog->parsed()) {
    const Branch b = parse_branch(cat_branch);
    const auto entries = catalog_for(b, cat_chi);
    Output out(out_path);
    meta(out.stream(), "catalog",
         "branch=" + cat_branch + " chi=" + fmt17(cat_chi) +
             " entries=" + std::to_string(entries.size()));
    write_catalog_csv(out.stream(), entries);
    return 0;
  }

  if (sample->parsed()) {
    const Histogram2D h = build_histogram(n, bins, seed);
    Output out(out_path);
    meta(out.stream(), "sample",
         std::string("rng=") + kRngFamily + " chunk=" + std::to_string(kHaarChunk));
    write_histogram_csv(out.stream(), h);
    return 0;
  }

  if (oracle->parsed()) {
    OracleConfig cfg;
    cfg.coarse_grid_points_per_angle = or_grid;
    cfg.refine_iterations = or_iters;
    cfg.refine_tolerance = or_tol;
    if (or_mode == "max")
      cfg.mode = OracleConfig::Mode::Maximize;
    else if (or_mode == "min")
      cfg.mode = OracleConfig::Mode::Minimize;
    else
      throw DomainError("oracle: --mode must be max or min");
    const OracleResult r = frontier_oracle(or_delta, cfg);
    const double analytic = (cfg.mode == OracleConfig::Mode::Maximize)
                                ? m2_max(or_delta).m2
                                : f_abc(or_delta);
    Output out(out_path);
    meta(out.stream(), "oracle",
         "delta=" + fmt17(or_delta) + " mode=" + or_mode +
             " grid=" + std::to_string(or_grid));
    out.stream() << "delta,mode,m2_oracle,m2_analytic,abs_err,theta1,theta2,phi1,"
                    "phi2,gamma\n";
    out.stream() << fmt17(or_delta) << ',' << or_mode << ',' << fmt17(r.m2) << ','
                 << fmt17(analytic) << ',' << fmt17(std::abs(r.m2 - analytic)) << ','
                 << fmt17(r.angles.theta1) << ',' << fmt17(r.angles.theta2) << ','
                 << fmt17(r.angles.phi1) << ',' << fmt17(r.angles.phi2) << ','
                 << fmt17(r.angles.gamma) << '\n';
    return 0;
  }

  if (orbit->parsed()) {
    const Branch b = parse_branch(orb_branch);
    const auto entries = catalog_for(b, orb_chi);
    const CatalogEntry* seed_entry = nullptr;
    for (const CatalogEntry& e : entries)
      if (e.row == orb_row) {
        seed_entry = &e;
        break;
      }
    if (!seed_entry) throw DomainError("orbit: no catalog entry with that row");
    const auto states = clifford_orbit(state_of(*seed_entry), clifford_group());
    Output out(out_path);
    meta(out.stream(), "orbit",
         "branch=" + orb_branch + " chi=" + fmt17(orb_chi) +
             " row=" + std::to_string(orb_row) +
             " orbit_size=" + std::to_string(states.size()));
    write_state_csv(out.stream(), states, b, orb_row);
    return 0;
  }

  if (verify->parsed()) {
    VerifyOptions opts;
    opts.fast = fast;
    opts.seed = vseed;
    const auto results = run_acceptance(opts);
    for (const CheckResult& r : results) {
      std::printf("[%s] %s (residual %.3g) %s\n", r.pass ? "PASS" : "FAIL",
                  r.name.c_str(), r.residual, r.detail.c_str());
    }
    if (!all_passed(results)) {
      std::fprintf(stderr, "verify-all: FAILED\n");
      return 1;
    }
    std::printf("verify-all: all checks passed\n");
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qmagic: %s\n", e.what());
    return 1;
  }
}
