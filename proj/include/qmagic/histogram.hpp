#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace qmagic {

// 2D (Delta, M2) occupancy grid over Delta in [0,1], M2 in [0, ln(16/7)]
// (the global maximum of the magic over all two-qubit states).
struct Histogram2D {
  int bins_x{};
  int bins_y{};
  double ymax{};
  std::uint64_t n_samples{};
  std::uint64_t seed{};
  std::vector<std::uint64_t> counts;  // row-major, ix * bins_y + iy

  std::uint64_t at(int ix, int iy) const {
    return counts[std::size_t(ix) * std::size_t(bins_y) + std::size_t(iy)];
  }
  std::uint64_t total() const;
};

double histogram_ymax();  // ln(16/7)

// Deterministic for fixed (n, bins, seed): sampling runs on the fixed
// partition plan of haar_measure_scan.
Histogram2D build_histogram(std::uint64_t n, int bins, std::uint64_t seed);

// Header line "# n=<n> bins=<b> seed=<s> ymax=<y>" followed by one
// "ix,iy,count" row per nonzero cell in row-major order.
void write_histogram_csv(std::ostream& os, const Histogram2D& h);

}  // namespace qmagic
