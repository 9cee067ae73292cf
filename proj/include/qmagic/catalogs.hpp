#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "qmagic/frontiers.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/wharton.hpp"

namespace qmagic {

// One extremal state as an explicit angle assignment. Entries store angles,
// not amplitudes; amplitudes come from angles_to_state on demand.
struct CatalogEntry {
  Branch branch{};
  int row{};               // source-table row (ABC 0..17, GFE/ED 0..8, IHG pattern 0..5)
  std::string case_label;  // IHG appendix case ("0a".."5d"), else empty
  WhartonAngles angles{};
  std::string mnemonic;    // 5-char s/c code where the source table has one
};

struct CatalogReport {
  Branch branch{};
  double chi{};
  int count_generated{};
  int count_distinct{};               // fidelity-deduplicated (threshold 1 - 1e-9)
  std::set<std::uint16_t> patterns_seen;  // zero-pattern bitmasks at this chi
  double frontier_residual_max{};     // max |m2(entry) - f_branch(sin chi)|
};

// Minimal-magic family, 18 rows x 8 = 144 entries. Rows with free angles use
// canonical representative 0, with gamma tied by the row formula. chi must
// lie strictly inside (0, pi/2); throws DomainError at the endpoints.
std::vector<CatalogEntry> abc_catalog(double chi);

// Maximal-magic middle-branch family, 9 rows x 32 = 288 entries.
// Requires sin(chi) in [delta_g, sqrt(3/4)].
std::vector<CatalogEntry> gfe_catalog(double chi);

// Maximal-magic left-branch family, 192 entries. Returns the expanded
// labeling (pattern rows 0..5, cases a..d) after cross-checking that it
// matches the compact 4-row enumeration as a physical-state set.
// Requires sin(chi) in [0, delta_g].
std::vector<CatalogEntry> ihg_catalog(double chi);

// The compact 4-row enumeration (4 x 48 = 192 entries, rows 0..3).
std::vector<CatalogEntry> ihg_catalog_compact(double chi);

// Maximal-magic right-branch family, 9 rows x 64 = 576 entries: the GFE
// angle sets with gamma displaced by +-gamma_shift(sin chi) around each
// nominal value. Requires sin(chi) in [sqrt(3/4), 1]. At sin(chi) =
// sqrt(3/4) the shift is 0 and deduplication collapses onto the GFE set.
std::vector<CatalogEntry> ed_catalog(double chi);

// Counts, zero-pattern census and worst frontier residual for one branch.
CatalogReport verify_catalog(Branch branch, double chi);

StateVector state_of(const CatalogEntry& e);

// Deduplicate by physical state (pairwise fidelity below 1 - 1e-9 kept).
std::vector<StateVector> distinct_states(const std::vector<CatalogEntry>& entries);

inline constexpr double kFidelityDedupThreshold = 1.0 - 1e-9;

struct CollapseOptions {
  int samples = 20;
  std::uint64_t seed = 1;
  bool break_gamma_tie = false;  // negative control: ignore the row formula
};

// For an ABC row with free angles: draws random values for the free
// angle(s), ties gamma by the row formula, and reports whether every draw
// reproduces the canonical representative states (fidelity > 1 - 1e-9).
// Throws DomainError for rows without free angles.
bool free_angle_collapse_check(int abc_row, double chi,
                               const CollapseOptions& opts = {});

// CSV with columns branch,row,case_label,theta1,theta2,phi1,phi2,chi,gamma,
// re_a,im_a,re_b,im_b,re_c,im_c,re_d,im_d,delta,m2 (17 significant digits).
void write_catalog_csv(std::ostream& os, const std::vector<CatalogEntry>& entries,
                       bool with_header = true);

// Same schema for bare states (orbit output): angle columns left empty,
// case_label = "orbit".
void write_state_csv(std::ostream& os, const std::vector<StateVector>& states,
                     Branch branch, int row, bool with_header = true);

}  // namespace qmagic
