#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace qmagic {

using cplx = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// One of the 16 two-qubit Pauli strings P1 (x) P2.
// Linear index = 4*first + second, i.e. II, IX, IY, IZ, XI, XX, ..., ZZ.
struct PauliString {
  Pauli first{Pauli::I};
  Pauli second{Pauli::I};

  constexpr int index() const {
    return 4 * static_cast<int>(first) + static_cast<int>(second);
  }
  static constexpr PauliString from_index(int k) {
    return {static_cast<Pauli>(k / 4), static_cast<Pauli>(k % 4)};
  }
  friend constexpr bool operator==(PauliString, PauliString) = default;
};

inline constexpr int kNumPauliStrings = 16;

inline std::array<PauliString, kNumPauliStrings> all_pauli_strings() {
  std::array<PauliString, kNumPauliStrings> out{};
  for (int k = 0; k < kNumPauliStrings; ++k) out[k] = PauliString::from_index(k);
  return out;
}

inline char pauli_char(Pauli p) {
  constexpr const char* names = "IXYZ";
  return names[static_cast<int>(p)];
}

inline std::string pauli_string_name(PauliString p) {
  return {pauli_char(p.first), pauli_char(p.second)};
}

// Row-major 2x2 complex matrix.
using Mat2 = std::array<cplx, 4>;

// Standard convention: Y = [[0,-i],[i,0]].
const Mat2& pauli_matrix2(Pauli p);

}  // namespace qmagic
