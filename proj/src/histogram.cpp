#include "qmagic/histogram.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qmagic/haar.hpp"

namespace qmagic {

double histogram_ymax() { return std::log(16.0 / 7.0); }

std::uint64_t Histogram2D::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts) t += c;
  return t;
}

Histogram2D build_histogram(std::uint64_t n, int bins, std::uint64_t seed) {
  if (bins < 1) throw std::invalid_argument("build_histogram: bins must be >= 1");
  Histogram2D h;
  h.bins_x = bins;
  h.bins_y = bins;
  h.ymax = histogram_ymax();
  h.n_samples = n;
  h.seed = seed;
  h.counts.assign(std::size_t(bins) * std::size_t(bins), 0);

  const double sx = double(bins);            // Delta range is [0, 1]
  const double sy = double(bins) / h.ymax;
  auto bin = [bins](double v) {
    int k = int(v);
    if (k < 0) k = 0;
    if (k >= bins) k = bins - 1;
    return k;
  };
  haar_measure_scan(n, seed,
                    [&](const double* delta, const double* m2, const double*,
                        std::uint64_t len) {
                      for (std::uint64_t i = 0; i < len; ++i) {
                        const int ix = bin(delta[i] * sx);
                        const int iy = bin(m2[i] * sy);
                        ++h.counts[std::size_t(ix) * std::size_t(bins) + std::size_t(iy)];
                      }
                    });
  return h;
}

void write_histogram_csv(std::ostream& os, const Histogram2D& h) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "# n=%llu bins=%d seed=%llu ymax=%.17g\n",
                static_cast<unsigned long long>(h.n_samples), h.bins_x,
                static_cast<unsigned long long>(h.seed), h.ymax);
  os << buf;
  for (int ix = 0; ix < h.bins_x; ++ix)
    for (int iy = 0; iy < h.bins_y; ++iy) {
      const std::uint64_t c = h.at(ix, iy);
      if (c == 0) continue;
      os << ix << ',' << iy << ',' << c << '\n';
    }
}

}  // namespace qmagic
