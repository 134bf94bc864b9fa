#include "z22osc/model.hpp"

#include <utility>

namespace z22osc {

namespace {

Polynomial gen(Gen g) { return Polynomial::generator(g); }

Polynomial word(std::initializer_list<Gen> gens) { return Polynomial::from_word(Word(gens)); }

}  // namespace

Polynomial number_op(Mode m) {
  switch (m) {
    case Mode::B:
      return word({Gen::BDag, Gen::B});
    case Mode::E:
      return word({Gen::EDag, Gen::E});
    case Mode::F1:
      return word({Gen::F1Dag, Gen::F1});
    case Mode::F2:
      return word({Gen::F2Dag, Gen::F2});
    default:
      return Polynomial::zero();
  }
}

Polynomial hamiltonian_h00() {
  return number_op(Mode::B) + number_op(Mode::E) + number_op(Mode::F1) +
         number_op(Mode::F2);
}

Polynomial charge_q01() {
  return word({Gen::F1Dag, Gen::B}) + word({Gen::BDag, Gen::F1}) +
         word({Gen::F2Dag, Gen::E}) + word({Gen::EDag, Gen::F2});
}

Polynomial charge_q10() {
  return word({Gen::F2Dag, Gen::B}) + word({Gen::BDag, Gen::F2}) +
         word({Gen::F1Dag, Gen::E}) + word({Gen::EDag, Gen::F1});
}

Polynomial witten(int i) { return gen(i == 1 ? Gen::K1 : Gen::K2); }

Polynomial klein_fermion(int i) {
  return word({i == 1 ? Gen::F1 : Gen::F2, Gen::K1});
}

Polynomial hamiltonian_h() {
  Polynomial a1 = klein_fermion(1);
  Polynomial a2 = klein_fermion(2);
  return number_op(Mode::B) + number_op(Mode::E) + adjoint(a1) * a1 + adjoint(a2) * a2;
}

Polynomial charge_q1() {
  return PhaseCoefficient::imaginary_unit() * (gen(Gen::K1) * charge_q01());
}

Polynomial charge_q2() { return gen(Gen::K1) * charge_q10(); }

Polynomial central_z11() {
  // (1/2i) [Q10, Q01] = -(i/2) [Q10, Q01]
  PhaseCoefficient half_over_i(GaussianRational{Rational(0), Rational(-1, 2)});
  return half_over_i * commutator(charge_q10(), charge_q01());
}

namespace {

using Builder = Polynomial (*)();

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"H00", &hamiltonian_h00},
      {"Q01", &charge_q01},
      {"Q10", &charge_q10},
      {"K1", +[] { return witten(1); }},
      {"K2", +[] { return witten(2); }},
      {"a1", +[] { return klein_fermion(1); }},
      {"a2", +[] { return klein_fermion(2); }},
      {"H", &hamiltonian_h},
      {"Q1", &charge_q1},
      {"Q2", &charge_q2},
      {"Z11", &central_z11},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& operator_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    v.reserve(registry().size());
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::optional<Polynomial> named_operator(const std::string& name) {
  for (const auto& [key, fn] : registry()) {
    if (key == name) return fn();
  }
  return std::nullopt;
}

}  // namespace z22osc
