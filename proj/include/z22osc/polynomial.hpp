#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "z22osc/coefficients.hpp"
#include "z22osc/generators.hpp"
#include "z22osc/grading.hpp"

namespace z22osc {

// Ordered product of generators.  std::vector's lexicographic comparison is
// the canonical word order used for term maps and serialized output.
using Word = std::vector<Gen>;

Degree word_degree(const Word& w);
bool is_normal_ordered(const Word& w);

struct NonHomogeneousOperand : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact linear combination of normal-ordered words.  The empty map is the
// zero operator and the empty word is the identity; two polynomials are
// equal iff their term maps are identical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const PhaseCoefficient& scalar) { add_term({}, scalar); }

  static Polynomial zero() { return {}; }
  static Polynomial identity() { return Polynomial(PhaseCoefficient::one()); }
  static Polynomial scalar(const PhaseCoefficient& c) { return Polynomial(c); }
  static Polynomial generator(Gen g);
  // Normal form of c * w for an arbitrary (not yet ordered) word.
  static Polynomial from_word(const Word& w, const PhaseCoefficient& c = PhaseCoefficient::one());

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Word, PhaseCoefficient>& terms() const { return terms_; }

  PhaseCoefficient coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? PhaseCoefficient{} : it->second;
  }

  // Degree of a homogeneous polynomial; nullopt if words mix degrees.
  // The zero polynomial is homogeneous of degree (0,0) by convention.
  std::optional<Degree> homogeneous_degree() const;

  void add_term(const Word& w, const PhaseCoefficient& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator-(const Polynomial& x);
  friend Polynomial operator*(const PhaseCoefficient& c, const Polynomial& x);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend bool operator==(const Polynomial& x, const Polynomial& y) {
    return x.terms_ == y.terms_;
  }

  std::string to_string() const;

 private:
  std::map<Word, PhaseCoefficient> terms_;
};

// Normal form of c * w under the graded CCR/CAR and Klein exchange rules.
Polynomial normal_form(const Word& w, const PhaseCoefficient& c = PhaseCoefficient::one());

Polynomial multiply(const Polynomial& x, const Polynomial& y);

// Antilinear involution: reverse each word, swap dagger flags, conjugate
// coefficients, renormal-order.
Polynomial adjoint(const Polynomial& x);

// x y - koszul_sign(deg x, deg y) y x.  Throws NonHomogeneousOperand if an
// argument mixes degrees.
Polynomial graded_commutator(const Polynomial& x, const Polynomial& y);

Polynomial commutator(const Polynomial& x, const Polynomial& y);
Polynomial anticommutator(const Polynomial& x, const Polynomial& y);

// Bracket fixed by the total (super) degree: x y - (-1)^(td x * td y) y x.
Polynomial super_commutator(const Polynomial& x, const Polynomial& y);

// Linear-multiplicative extension of a generator substitution.
using GeneratorMap = std::function<Polynomial(Gen)>;
Polynomial substitute_generators(const Polynomial& x, const GeneratorMap& map);

// R-symmetry with phase u^k:  b -> u^k e, e -> u^-k b, f1 -> u^k f2,
// f2 -> u^-k f1, adjoint-consistent on daggered generators, K1 <-> K2.
Polynomial substitute_r_symmetry(const Polynomial& x, int phase_power = 1);

// Diagonal phase rotation u^m on b, f1 and u^-m on e, f2 (adjoints get the
// conjugate power); the composite of two R-substitutions.
Polynomial substitute_phase_rotation(const Polynomial& x, int m);

// <0| x |0>: the sum of coefficients of words made of Klein generators only
// (including the empty word); every other normal-form word annihilates the
// vacuum on one side, and K_i |0> = |0>.
PhaseCoefficient vacuum_expectation(const Polynomial& x);

namespace detail {

// Positions where a rewrite applies, and one rewrite step for the canonicity
// test; the strategy picks which applicable position to reduce next.
std::vector<std::size_t> applicable_positions(const Word& w);
using PositionChooser = std::function<std::size_t(const Word&, const std::vector<std::size_t>&)>;
Polynomial normal_form_with_strategy(const Word& w, const PhaseCoefficient& c,
                                     const PositionChooser& choose);

}  // namespace detail

}  // namespace z22osc
