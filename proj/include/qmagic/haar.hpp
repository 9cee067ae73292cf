#pragma once

#include <cstdint>
#include <functional>

#include "qmagic/rng.hpp"
#include "qmagic/state.hpp"
#include "qmagic/wharton.hpp"

namespace qmagic {

// Haar-uniform pure two-qubit state: four i.i.d. standard complex Gaussian
// amplitudes, normalized.
StateVector haar_sample(SplitMix64& rng);

// Uniform draw over the angle box: theta in [0,pi], phi/gamma in [0,2pi),
// chi in [0,pi/2]. (Not the Haar measure; used for property sweeps.)
WhartonAngles sample_angles(SplitMix64& rng);

// Haar-random single-qubit unitary (for local-unitary invariance checks).
Mat2 random_su2(SplitMix64& rng);

// Streams n Haar samples in fixed-size partitions, each on its own RNG
// substream, and hands per-partition (delta, m2, sumsq) arrays to the sink.
// The partition plan is part of the determinism contract: identical
// (n, seed) always produce the identical sample stream.
inline constexpr std::uint64_t kHaarChunk = 65536;

using MeasureSink = std::function<void(const double* delta, const double* m2,
                                       const double* sumsq, std::uint64_t len)>;

void haar_measure_scan(std::uint64_t n, std::uint64_t seed, const MeasureSink& sink);

}  // namespace qmagic
