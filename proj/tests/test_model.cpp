#include "doctest.h"
#include "z22osc/model.hpp"

using namespace z22osc;

namespace {
Polynomial w(std::initializer_list<Gen> gens) { return Polynomial::from_word(Word(gens)); }
}  // namespace

TEST_CASE("number operators and the hamiltonian") {
  CHECK(number_op(Mode::B) == w({Gen::BDag, Gen::B}));
  CHECK(number_op(Mode::F2) == w({Gen::F2Dag, Gen::F2}));
  CHECK(hamiltonian_h00() == number_op(Mode::B) + number_op(Mode::E) + number_op(Mode::F1) +
                                 number_op(Mode::F2));
  CHECK(hamiltonian_h00().homogeneous_degree() == std::optional<Degree>(Degree{0, 0}));
  CHECK(adjoint(hamiltonian_h00()) == hamiltonian_h00());
}

TEST_CASE("graded supercharges as frozen word sums") {
  Polynomial q01 = w({Gen::F1Dag, Gen::B}) + w({Gen::BDag, Gen::F1}) + w({Gen::F2Dag, Gen::E}) +
                   w({Gen::EDag, Gen::F2});
  Polynomial q10 = w({Gen::F2Dag, Gen::B}) + w({Gen::BDag, Gen::F2}) + w({Gen::F1Dag, Gen::E}) +
                   w({Gen::EDag, Gen::F1});
  CHECK(charge_q01() == q01);
  CHECK(charge_q10() == q10);
  CHECK(charge_q01().homogeneous_degree() == std::optional<Degree>(Degree{0, 1}));
  CHECK(charge_q10().homogeneous_degree() == std::optional<Degree>(Degree{1, 0}));
  CHECK(adjoint(charge_q01()) == charge_q01());
  CHECK(adjoint(charge_q10()) == charge_q10());
}

TEST_CASE("witten generators and klein-dressed fermions") {
  CHECK(witten(1) == Polynomial::generator(Gen::K1));
  CHECK(witten(2) == Polynomial::generator(Gen::K2));
  CHECK(klein_fermion(1) == w({Gen::F1, Gen::K1}));
  CHECK(klein_fermion(2) == w({Gen::F2, Gen::K1}));
  CHECK(witten(1) * witten(1) == Polynomial::identity());

  // the klein dressing turns colour-commuting fermions into anticommuting ones
  Polynomial a1 = klein_fermion(1);
  Polynomial a2 = klein_fermion(2);
  CHECK(super_commutator(a1, adjoint(a1)) == Polynomial::identity());
  CHECK(super_commutator(a2, adjoint(a2)) == Polynomial::identity());
  CHECK(super_commutator(a1, a2).is_zero());
  CHECK(super_commutator(a1, adjoint(a2)).is_zero());
  CHECK(super_commutator(a1, a1).is_zero());
}

TEST_CASE("rewritten hamiltonian collapses to the original") {
  CHECK(hamiltonian_h() == hamiltonian_h00());
}

TEST_CASE("superised charges as frozen polynomials") {
  PhaseCoefficient mi = -PhaseCoefficient::imaginary_unit();
  Polynomial q1 = Polynomial::from_word({Gen::BDag, Gen::F1, Gen::K1}, mi) +
                  Polynomial::from_word({Gen::F1Dag, Gen::B, Gen::K1}, mi) +
                  Polynomial::from_word({Gen::EDag, Gen::F2, Gen::K1}, mi) +
                  Polynomial::from_word({Gen::F2Dag, Gen::E, Gen::K1}, mi);
  Polynomial q2 = w({Gen::BDag, Gen::F2, Gen::K1}) + w({Gen::F2Dag, Gen::B, Gen::K1}) +
                  w({Gen::EDag, Gen::F1, Gen::K1}) + w({Gen::F1Dag, Gen::E, Gen::K1});
  CHECK(charge_q1() == q1);
  CHECK(charge_q2() == q2);
  CHECK(adjoint(charge_q1()) == charge_q1());
  CHECK(adjoint(charge_q2()) == charge_q2());

  // N=2 closure under the plain super bracket
  Polynomial two_h = PhaseCoefficient(2) * hamiltonian_h();
  CHECK(super_commutator(charge_q1(), charge_q1()) == two_h);
  CHECK(super_commutator(charge_q2(), charge_q2()) == two_h);
  CHECK(super_commutator(charge_q2(), charge_q1()).is_zero());
}

TEST_CASE("central element vanishes identically") {
  CHECK(central_z11().is_zero());
}

TEST_CASE("operator registry") {
  const auto& names = operator_names();
  REQUIRE(names.size() == 11);
  CHECK(names == std::vector<std::string>{"H00", "Q01", "Q10", "K1", "K2", "a1", "a2", "H", "Q1",
                                          "Q2", "Z11"});
  CHECK(named_operator("H00") == hamiltonian_h00());
  CHECK(named_operator("Q01") == charge_q01());
  CHECK(named_operator("a1") == klein_fermion(1));
  CHECK(named_operator("Z11")->is_zero());
  CHECK(named_operator("H") == hamiltonian_h00());
  CHECK(!named_operator("nope").has_value());
  CHECK(!named_operator("h00").has_value());  // names are case-sensitive
  for (const std::string& n : names) CHECK(named_operator(n).has_value());
}
