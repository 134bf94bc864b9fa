#include "z22osc/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace z22osc {

Degree word_degree(const Word& w) {
  Degree d{0, 0};
  for (Gen g : w) d = d + degree_of(g);
  return d;
}

namespace {

// A rewrite fires at position i when the adjacent pair (w[i], w[i+1]) either
// inverts the canonical order, squares a fermionic generator, or squares a
// Klein generator.
bool rewrite_applies(Gen x, Gen y) {
  if (order_index(x) > order_index(y)) return true;
  if (x == y && (is_fermionic(x) || is_klein(x))) return true;
  return false;
}

// Sign for x y -> s y x when x stands right of its canonical place.
int exchange_sign(Gen x, Gen y) {
  if (is_klein(x)) {
    return is_klein(y) ? +1 : klein_exchange_sign(x, y);
  }
  return koszul_sign(degree_of(x), degree_of(y));
}

// x y = s y x + 1 exactly for the annihilator/creator pair of one mode.
bool has_scalar_correction(Gen x, Gen y) {
  return is_ladder(x) && is_ladder(y) && !is_dagger(x) && is_dagger(y) &&
         mode_of(x) == mode_of(y);
}

PhaseCoefficient negate_if(const PhaseCoefficient& c, int sign) {
  return sign < 0 ? -c : c;
}

}  // namespace

bool is_normal_ordered(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (rewrite_applies(w[i], w[i + 1])) return false;
  }
  return true;
}

namespace detail {

std::vector<std::size_t> applicable_positions(const Word& w) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (rewrite_applies(w[i], w[i + 1])) positions.push_back(i);
  }
  return positions;
}

Polynomial normal_form_with_strategy(const Word& w, const PhaseCoefficient& c,
                                     const PositionChooser& choose) {
  Polynomial result;
  if (c.is_zero()) return result;

  std::vector<std::pair<Word, PhaseCoefficient>> work;
  work.emplace_back(w, c);

  // Every step strictly decreases (inversions, length) lexicographically,
  // so the loop terminates.
  while (!work.empty()) {
    auto [word, coeff] = std::move(work.back());
    work.pop_back();

    std::vector<std::size_t> positions = applicable_positions(word);
    if (positions.empty()) {
      result.add_term(word, coeff);
      continue;
    }

    std::size_t i = choose(word, positions);
    Gen x = word[i];
    Gen y = word[i + 1];

    if (x == y && is_fermionic(x)) continue;  // fermionic square vanishes

    if (x == y && is_klein(x)) {  // K_i^2 = 1
      Word shorter = word;
      shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i),
                    shorter.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      work.emplace_back(std::move(shorter), coeff);
      continue;
    }

    Word swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    work.emplace_back(std::move(swapped), negate_if(coeff, exchange_sign(x, y)));

    if (has_scalar_correction(x, y)) {
      Word shorter = word;
      shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i),
                    shorter.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      work.emplace_back(std::move(shorter), coeff);
    }
  }
  return result;
}

}  // namespace detail

Polynomial normal_form(const Word& w, const PhaseCoefficient& c) {
  return detail::normal_form_with_strategy(
      w, c, [](const Word&, const std::vector<std::size_t>& positions) {
        return positions.front();
      });
}

Polynomial Polynomial::generator(Gen g) {
  Polynomial p;
  p.add_term(Word{g}, PhaseCoefficient::one());
  return p;
}

Polynomial Polynomial::from_word(const Word& w, const PhaseCoefficient& c) {
  return normal_form(w, c);
}

void Polynomial::add_term(const Word& w, const PhaseCoefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Degree> Polynomial::homogeneous_degree() const {
  Degree d{0, 0};
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Degree wd = word_degree(w);
    if (first) {
      d = wd;
      first = false;
    } else if (wd != d) {
      return std::nullopt;
    }
  }
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Polynomial operator-(const Polynomial& x) {
  Polynomial r;
  for (const auto& [w, c] : x.terms_) r.add_term(w, -c);
  return r;
}

Polynomial operator*(const PhaseCoefficient& c, const Polynomial& x) {
  Polynomial r;
  for (const auto& [w, cw] : x.terms_) r.add_term(w, c * cw);
  return r;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) { return multiply(x, y); }

Polynomial multiply(const Polynomial& x, const Polynomial& y) {
  Polynomial result;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      Word product = wx;
      product.insert(product.end(), wy.begin(), wy.end());
      result += normal_form(product, cx * cy);
    }
  }
  return result;
}

Polynomial adjoint(const Polynomial& x) {
  Polynomial result;
  for (const auto& [w, c] : x.terms()) {
    Word reversed(w.rbegin(), w.rend());
    for (Gen& g : reversed) g = adjoint_of(g);
    result += normal_form(reversed, c.conj());
  }
  return result;
}

Polynomial graded_commutator(const Polynomial& x, const Polynomial& y) {
  auto dx = x.homogeneous_degree();
  auto dy = y.homogeneous_degree();
  if (!dx || !dy) {
    throw NonHomogeneousOperand("graded_commutator requires homogeneous operands");
  }
  Polynomial yx = multiply(y, x);
  return multiply(x, y) - negate_if(PhaseCoefficient::one(), koszul_sign(*dx, *dy)) * yx;
}

Polynomial commutator(const Polynomial& x, const Polynomial& y) {
  return multiply(x, y) - multiply(y, x);
}

Polynomial anticommutator(const Polynomial& x, const Polynomial& y) {
  return multiply(x, y) + multiply(y, x);
}

Polynomial super_commutator(const Polynomial& x, const Polynomial& y) {
  auto dx = x.homogeneous_degree();
  auto dy = y.homogeneous_degree();
  if (!dx || !dy) {
    throw NonHomogeneousOperand("super_commutator requires homogeneous operands");
  }
  if (total_degree(*dx) == 1 && total_degree(*dy) == 1) return anticommutator(x, y);
  return commutator(x, y);
}

Polynomial substitute_generators(const Polynomial& x, const GeneratorMap& map) {
  Polynomial result;
  for (const auto& [w, c] : x.terms()) {
    Polynomial image = Polynomial::scalar(c);
    for (Gen g : w) image = multiply(image, map(g));
    result += image;
  }
  return result;
}

Polynomial substitute_r_symmetry(const Polynomial& x, int phase_power) {
  const int k = phase_power;
  return substitute_generators(x, [k](Gen g) {
    auto phased = [](int power, Gen target) {
      Polynomial p;
      p.add_term(Word{target}, PhaseCoefficient::unit_phase_power(power));
      return p;
    };
    switch (g) {
      case Gen::B:
        return phased(k, Gen::E);
      case Gen::E:
        return phased(-k, Gen::B);
      case Gen::F1:
        return phased(k, Gen::F2);
      case Gen::F2:
        return phased(-k, Gen::F1);
      case Gen::BDag:
        return phased(-k, Gen::EDag);
      case Gen::EDag:
        return phased(k, Gen::BDag);
      case Gen::F1Dag:
        return phased(-k, Gen::F2Dag);
      case Gen::F2Dag:
        return phased(k, Gen::F1Dag);
      case Gen::K1:
        return Polynomial::generator(Gen::K2);
      default:
        return Polynomial::generator(Gen::K1);
    }
  });
}

Polynomial substitute_phase_rotation(const Polynomial& x, int m) {
  return substitute_generators(x, [m](Gen g) {
    if (is_klein(g)) return Polynomial::generator(g);
    Mode mode = mode_of(g);
    int power = (mode == Mode::B || mode == Mode::F1) ? m : -m;
    if (is_dagger(g)) power = -power;
    Polynomial p;
    p.add_term(Word{g}, PhaseCoefficient::unit_phase_power(power));
    return p;
  });
}

PhaseCoefficient vacuum_expectation(const Polynomial& x) {
  PhaseCoefficient acc;
  for (const auto& [w, c] : x.terms()) {
    bool klein_only = std::all_of(w.begin(), w.end(), [](Gen g) { return is_klein(g); });
    if (klein_only) acc += c;
  }
  return acc;
}

namespace {

std::string coefficient_to_string(const PhaseCoefficient& c) {
  auto rat = [](const Rational& r) {
    std::ostringstream oss;
    oss << r.numerator();
    if (r.denominator() != 1) oss << '/' << r.denominator();
    return oss.str();
  };
  std::ostringstream oss;
  bool first = true;
  for (const auto& [k, g] : c.terms()) {
    if (!first) oss << " + ";
    first = false;
    bool pure_re = g.im == Rational(0);
    bool pure_im = g.re == Rational(0);
    if (pure_re) {
      oss << rat(g.re);
    } else if (pure_im) {
      if (g.im == Rational(1)) {
        oss << "i";
      } else if (g.im == Rational(-1)) {
        oss << "-i";
      } else {
        oss << rat(g.im) << "i";
      }
    } else {
      oss << '(' << rat(g.re) << (g.im > Rational(0) ? "+" : "-") << rat(boost::abs(g.im))
          << "i)";
    }
    if (k != 0) oss << " u^" << k;
  }
  return oss.str();
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream oss;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) oss << "  +  ";
    first = false;
    oss << '(' << coefficient_to_string(c) << ')';
    for (Gen g : w) oss << ' ' << token(g);
  }
  return oss.str();
}

}  // namespace z22osc
