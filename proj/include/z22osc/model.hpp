#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z22osc/polynomial.hpp"

namespace z22osc {

// Named operators of the Z2xZ2-graded oscillator, returned in normal form.

// N_m = m+ m for a ladder mode.
Polynomial number_op(Mode m);

// H00 = b+ b + e+ e + f1+ f1 + f2+ f2.
Polynomial hamiltonian_h00();

// Q01 = f1+ b + b+ f1 + f2+ e + e+ f2   (degree (0,1), self-adjoint).
Polynomial charge_q01();

// Q10 = f2+ b + b+ f2 + f1+ e + e+ f1   (degree (1,0), self-adjoint).
Polynomial charge_q10();

// K_i as an abstract generator word.
Polynomial witten(int i);

// Klein-dressed fermion a_i = f_i K1.
Polynomial klein_fermion(int i);

// H = b+ b + e+ e + a1+ a1 + a2+ a2; rewrites to H00.
Polynomial hamiltonian_h();

// Q1 = i K1 Q01.
Polynomial charge_q1();

// Q2 = K1 Q10.
Polynomial charge_q2();

// Z11 = (1/2i) [Q10, Q01]; identically zero for the free oscillator.
Polynomial central_z11();

// Registry used by the CLI: names H00, Q01, Q10, K1, K2, a1, a2, H, Q1, Q2,
// Z11 map to their builders.
const std::vector<std::string>& operator_names();
std::optional<Polynomial> named_operator(const std::string& name);

}  // namespace z22osc
