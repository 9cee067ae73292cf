#pragma once

#include <array>
#include <vector>

#include "qmagic/state.hpp"

namespace qmagic {

// The two-qubit Clifford group modulo global phase: 11520 elements, built
// as the closure of {H(x)I, I(x)H, S(x)I, I(x)S, CNOT} under multiplication.
// Elements are deduplicated by their conjugation action on the Pauli
// generators {XI, ZI, IX, IZ} (image string + sign), which identifies a
// Clifford uniquely up to phase without floating-point phase comparisons.
struct CliffordGroup {
  std::vector<Unitary4> elements;

  std::size_t size() const { return elements.size(); }
};

inline constexpr std::size_t kCliffordOrder = 11520;
inline constexpr std::size_t kClosureCap = 20000;  // overflow => canonicalization bug

std::array<Unitary4, 5> clifford_generators();

// BFS closure. Throws ClosureOverflow past kClosureCap.
CliffordGroup build_clifford_group();

// Cached singleton (construction is cheap but not free; run once).
const CliffordGroup& clifford_group();

// Full physical-state orbit: applies every element to s and deduplicates
// by fidelity > 1 - 1e-9.
std::vector<StateVector> clifford_orbit(const StateVector& s, const CliffordGroup& g);

}  // namespace qmagic
