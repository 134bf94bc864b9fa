#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace z22osc {

// A Z2 x Z2 grading label (a, b).  The canonical element order is
// (0,0), (1,1), (0,1), (1,0); sector tables and serialized output follow it.
struct Degree {
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(Degree lhs, Degree rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b;
  }
  friend constexpr bool operator!=(Degree lhs, Degree rhs) { return !(lhs == rhs); }

  // Componentwise addition mod 2; every element is its own inverse.
  friend constexpr Degree operator+(Degree lhs, Degree rhs) {
    return Degree{static_cast<std::uint8_t>((lhs.a + rhs.a) & 1),
                  static_cast<std::uint8_t>((lhs.b + rhs.b) & 1)};
  }
};

inline constexpr std::array<Degree, 4> degree_order = {
    Degree{0, 0}, Degree{1, 1}, Degree{0, 1}, Degree{1, 0}};

// Position of d in the canonical order; used for sector tables.
constexpr int degree_index(Degree d) {
  if (d == Degree{0, 0}) return 0;
  if (d == Degree{1, 1}) return 1;
  if (d == Degree{0, 1}) return 2;
  return 3;
}

// <p|q> = p.a q.a + p.b q.b mod 2.
constexpr int scalar_product(Degree p, Degree q) {
  return (p.a * q.a + p.b * q.b) & 1;
}

// Sign s in x y = s y x (+ correction) for homogeneous x, y.
constexpr int koszul_sign(Degree p, Degree q) {
  return scalar_product(p, q) ? -1 : +1;
}

// 0 = super-even (boson after the Klein construction), 1 = super-odd.
constexpr int total_degree(Degree p) { return (p.a + p.b) & 1; }

// Two-character form "ab" used in all JSON/CSV output.
inline std::string to_string(Degree d) {
  return std::string{static_cast<char>('0' + d.a), static_cast<char>('0' + d.b)};
}

}  // namespace z22osc
