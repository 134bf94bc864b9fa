#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "z22osc/grading.hpp"

namespace z22osc {

// Generator tokens, enumerated in canonical normal-ordering position:
// creation operators, then annihilation operators, then Klein generators.
// A word is normal ordered iff its tokens are non-decreasing in this order,
// no fermionic token repeats, and each Klein token appears at most once.
enum class Gen : std::uint8_t {
  BDag = 0,
  EDag,
  F1Dag,
  F2Dag,
  B,
  E,
  F1,
  F2,
  K1,
  K2,
};

inline constexpr int gen_count = 10;

enum class Mode : std::uint8_t { B = 0, E, F1, F2, K1, K2 };

constexpr int order_index(Gen g) { return static_cast<int>(g); }

constexpr Mode mode_of(Gen g) {
  switch (g) {
    case Gen::BDag:
    case Gen::B:
      return Mode::B;
    case Gen::EDag:
    case Gen::E:
      return Mode::E;
    case Gen::F1Dag:
    case Gen::F1:
      return Mode::F1;
    case Gen::F2Dag:
    case Gen::F2:
      return Mode::F2;
    case Gen::K1:
      return Mode::K1;
    default:
      return Mode::K2;
  }
}

constexpr bool is_dagger(Gen g) { return order_index(g) < 4; }
constexpr bool is_klein(Gen g) { return g == Gen::K1 || g == Gen::K2; }
constexpr bool is_ladder(Gen g) { return !is_klein(g); }

constexpr bool is_fermionic(Gen g) {
  Mode m = mode_of(g);
  return m == Mode::F1 || m == Mode::F2;
}

constexpr bool is_bosonic_ladder(Gen g) {
  Mode m = mode_of(g);
  return m == Mode::B || m == Mode::E;
}

// Klein generators are self-adjoint; ladder operators swap the dagger flag.
constexpr Gen adjoint_of(Gen g) {
  if (is_klein(g)) return g;
  int i = order_index(g);
  return static_cast<Gen>(i < 4 ? i + 4 : i - 4);
}

// b:(0,0)  e:(1,1)  f1:(0,1)  f2:(1,0)  K1,K2:(0,0).
// A generator and its adjoint share the same degree.
constexpr Degree degree_of(Gen g) {
  switch (mode_of(g)) {
    case Mode::B:
      return Degree{0, 0};
    case Mode::E:
      return Degree{1, 1};
    case Mode::F1:
      return Degree{0, 1};
    case Mode::F2:
      return Degree{1, 0};
    default:
      return Degree{0, 0};
  }
}

// Exchange sign when a Klein generator moves past a ladder generator.
// K_i anticommutes with e, e+ and with its own fermion species, commutes
// with everything else; derived from the eigenvalue action
// K_i |..> = (-1)^(n_e + n_f_i) |..> and certified against the Fock matrices.
constexpr int klein_exchange_sign(Gen klein, Gen ladder) {
  Mode m = mode_of(ladder);
  if (m == Mode::E) return -1;
  if (klein == Gen::K1 && m == Mode::F1) return -1;
  if (klein == Gen::K2 && m == Mode::F2) return -1;
  return +1;
}

inline constexpr std::array<const char*, gen_count> gen_tokens = {
    "b+", "e+", "f1+", "f2+", "b", "e", "f1", "f2", "K1", "K2"};

inline std::string token(Gen g) { return gen_tokens[order_index(g)]; }

inline std::optional<Gen> gen_from_token(const std::string& tok) {
  for (int i = 0; i < gen_count; ++i) {
    if (tok == gen_tokens[i]) return static_cast<Gen>(i);
  }
  return std::nullopt;
}

}  // namespace z22osc
