#include "qmagic/clifford.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "qmagic/errors.hpp"
#include "qmagic/measures.hpp"

namespace qmagic {

namespace {

// Conjugation image of one Pauli generator: (string index, sign). For a
// Clifford U the image U P U^dag is exactly +-(Pauli string); classification
// tolerance 1e-6 with a 1e-9 residual assertion keeps fp drift visible.
std::uint32_t image_code(const Unitary4& u, const Unitary4& udag, PauliString gen) {
  const Unitary4 m = u * (pauli_string_matrix(gen) * udag);
  for (int k = 0; k < kNumPauliStrings; ++k) {
    const Unitary4& P = pauli_string_matrix(PauliString::from_index(k));
    cplx t{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) t += P.at(r, c) * m.at(c, r);
    t /= 4.0;
    if (std::abs(std::abs(t) - 1.0) < 1e-6) {
      if (std::abs(t.imag()) > 1e-9 || std::abs(std::abs(t.real()) - 1.0) > 1e-9)
        throw std::logic_error("clifford: conjugated Pauli image drifted off +-P");
      return std::uint32_t(2 * k + (t.real() > 0.0 ? 1 : 0));
    }
  }
  throw std::logic_error("clifford: conjugation image is not a signed Pauli string");
}

// Phase-insensitive canonical key: images of XI, ZI, IX, IZ (5 bits each).
std::uint32_t canonical_key(const Unitary4& u) {
  static const std::array<PauliString, 4> gens = {
      PauliString{Pauli::X, Pauli::I}, PauliString{Pauli::Z, Pauli::I},
      PauliString{Pauli::I, Pauli::X}, PauliString{Pauli::I, Pauli::Z}};
  const Unitary4 udag = adjoint(u);
  std::uint32_t key = 0;
  for (const PauliString& g : gens) key = (key << 5) | image_code(u, udag, g);
  return key;
}

StateVector matvec(const Unitary4& u, const StateVector& s) {
  StateVector out;
  for (int r = 0; r < 4; ++r) {
    cplx acc{};
    for (int c = 0; c < 4; ++c) acc += u.at(r, c) * s.amp[c];
    out.amp[r] = acc;
  }
  return out;
}

}  // namespace

std::array<Unitary4, 5> clifford_generators() {
  return {kron(gate_h(), identity2()), kron(identity2(), gate_h()),
          kron(gate_s(), identity2()), kron(identity2(), gate_s()), gate_cnot()};
}

CliffordGroup build_clifford_group() {
  const auto gens = clifford_generators();
  CliffordGroup group;
  std::unordered_set<std::uint32_t> seen;

  const Unitary4 ident = Unitary4::identity();
  seen.insert(canonical_key(ident));
  group.elements.push_back(ident);

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const Unitary4& g : gens) {
      const Unitary4 v = g * group.elements[idx];
      const std::uint32_t key = canonical_key(v);
      if (seen.insert(key).second) {
        if (group.elements.size() >= kClosureCap)
          throw ClosureOverflow("build_clifford_group: closure exceeded cap");
        group.elements.push_back(v);
        frontier.push_back(group.elements.size() - 1);
      }
    }
  }
  return group;
}

const CliffordGroup& clifford_group() {
  static const CliffordGroup g = build_clifford_group();
  return g;
}

std::vector<StateVector> clifford_orbit(const StateVector& s, const CliffordGroup& g) {
  std::vector<StateVector> orbit;
  for (const Unitary4& u : g.elements) {
    const StateVector v = matvec(u, s);
    bool known = false;
    for (const StateVector& w : orbit)
      if (fidelity(w, v) > 1.0 - 1e-9) {
        known = true;
        break;
      }
    if (!known) orbit.push_back(v);
  }
  return orbit;
}

}  // namespace qmagic
