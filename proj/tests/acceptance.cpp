// Acceptance gate: one criterion per released claim, wired directly against
// the library (independently of the z22osc::check_* suite).  Exits nonzero
// if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "z22osc/fock.hpp"
#include "z22osc/json_io.hpp"
#include "z22osc/model.hpp"

using namespace z22osc;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> lines;

  void expect(const std::string& what, bool condition) {
    if (!condition) {
      ok = false;
      lines.push_back("failed: " + what);
    }
  }
  void note(const std::string& line) { lines.push_back(line); }
};

double windowed_max(const SparseOperator& m, const SparseOperator& p) {
  SparseOperator boxed = p * m * p;
  return max_abs_entry(boxed);
}

Outcome criterion_supertranslation() {
  Outcome o;
  Polynomial q01 = charge_q01(), q10 = charge_q10(), h = hamiltonian_h00();
  Polynomial two_h = PhaseCoefficient(2) * h;
  o.expect("{Q01,Q01} - 2 H00 == 0", (graded_commutator(q01, q01) - two_h).is_zero());
  o.expect("{Q10,Q10} - 2 H00 == 0", (graded_commutator(q10, q10) - two_h).is_zero());
  o.expect("[Q10,Q01] == 0", graded_commutator(q10, q01).is_zero());
  o.expect("[H00,Q01] == 0", graded_commutator(h, q01).is_zero());
  o.expect("[H00,Q10] == 0", graded_commutator(h, q10).is_zero());
  return o;
}

Outcome criterion_superisation() {
  Outcome o;
  Polynomial a1 = klein_fermion(1), a2 = klein_fermion(2);
  const Polynomial ops[8] = {Polynomial::generator(Gen::B),  Polynomial::generator(Gen::BDag),
                             Polynomial::generator(Gen::E),  Polynomial::generator(Gen::EDag),
                             a1, adjoint(a1), a2, adjoint(a2)};
  const char* names[8] = {"b", "b+", "e", "e+", "a1", "a1+", "a2", "a2+"};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Polynomial bracket = super_commutator(ops[i], ops[j]);
      Polynomial expected;  // zero
      if (i != j && i / 2 == j / 2) {
        bool bosonic = i < 4;
        if (bosonic) {
          expected = i < j ? Polynomial::identity() : -Polynomial::identity();
        } else {
          expected = Polynomial::identity();
        }
      }
      std::ostringstream what;
      what << "super bracket (" << names[i] << ", " << names[j] << ")";
      o.expect(what.str(), bracket == expected);
    }
  }

  Polynomial h = hamiltonian_h(), q1 = charge_q1(), q2 = charge_q2();
  Polynomial two_h = PhaseCoefficient(2) * h;
  o.expect("H - H00 == 0", (h - hamiltonian_h00()).is_zero());
  o.expect("{Q1,Q1} - 2 H == 0", (super_commutator(q1, q1) - two_h).is_zero());
  o.expect("{Q2,Q2} - 2 H == 0", (super_commutator(q2, q2) - two_h).is_zero());
  o.expect("{Q2,Q1} == 0", super_commutator(q2, q1).is_zero());
  o.expect("[H,Q1] == 0", super_commutator(h, q1).is_zero());
  o.expect("[H,Q2] == 0", super_commutator(h, q2).is_zero());
  return o;
}

Outcome criterion_kq_brackets() {
  Outcome o;
  Polynomial k1 = witten(1), k2 = witten(2), q1 = charge_q1(), q2 = charge_q2();
  o.expect("{K1,Q1} == 0", anticommutator(k1, q1).is_zero());
  o.expect("[K1,Q2] == 0", commutator(k1, q2).is_zero());
  o.expect("[K2,Q1] == 0", commutator(k2, q1).is_zero());
  o.expect("{K2,Q2} == 0", anticommutator(k2, q2).is_zero());

  FockBasis basis(4);
  SparseOperator p = safe_projector(basis);
  SparseOperator mk1 = matrix_of(k1, basis), mk2 = matrix_of(k2, basis);
  SparseOperator mq1 = matrix_of(q1, basis), mq2 = matrix_of(q2, basis);
  auto bracket = [](const SparseOperator& x, const SparseOperator& y, int sign) {
    SparseOperator xy = x * y;
    SparseOperator yx = y * x;
    return sign > 0 ? SparseOperator(xy - yx) : SparseOperator(xy + yx);
  };
  double worst = 0.0;
  worst = std::max(worst, windowed_max(bracket(mk1, mq1, -1), p));
  worst = std::max(worst, windowed_max(bracket(mk1, mq2, +1), p));
  worst = std::max(worst, windowed_max(bracket(mk2, mq1, +1), p));
  worst = std::max(worst, windowed_max(bracket(mk2, mq2, -1), p));
  std::ostringstream msg;
  msg << "matrix K-Q brackets vanish at cutoff 4 (max residual " << worst << ")";
  o.expect(msg.str(), worst <= 1e-12);
  return o;
}

Outcome criterion_degeneracy() {
  Outcome o;
  FockBasis basis(7);
  auto levels = spectrum(basis);
  o.expect("level 0 is one state", levels[0].size() == 1);
  o.expect("level 0 sits in sector 00",
           levels[0].size() == 1 && levels[0][0].degree() == Degree{0, 0});
  for (int n = 1; n <= 6; ++n) {
    std::ostringstream what;
    what << "level " << n << " holds " << 4 * n << " states";
    o.expect(what.str(), static_cast<int>(levels[n].size()) == 4 * n);
    auto sectors = split_by_sector(levels[n]);
    for (std::size_t si = 0; si < sectors.size(); ++si) {
      std::ostringstream ws;
      ws << "level " << n << " sector " << to_string(degree_order[si]) << " holds " << n;
      o.expect(ws.str(), static_cast<int>(sectors[si].size()) == n);
    }
  }
  return o;
}

Outcome criterion_state_table() {
  Outcome o;
  FockBasis basis(5);
  auto levels = spectrum(basis);
  const auto& fixture = level_table_fixture();
  for (int n = 0; n <= 4; ++n) {
    auto sectors = split_by_sector(levels[n]);
    for (std::size_t si = 0; si < sectors.size(); ++si) {
      std::vector<BasisState> got = sectors[si];
      std::vector<BasisState> want = fixture[static_cast<std::size_t>(n)][si];
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      std::ostringstream what;
      what << "level " << n << " sector " << to_string(degree_order[si]) << " state set";
      o.expect(what.str(), got == want);
    }
  }
  return o;
}

Outcome criterion_matrix_oracle() {
  Outcome o;
  FockBasis basis(6);
  SparseOperator p = safe_projector(basis);
  std::mt19937_64 rng(0);
  double worst = 0.0;
  for (int sample = 0; sample < 100; ++sample) {
    Word w(rng() % 5);
    for (Gen& g : w) g = static_cast<Gen>(rng() % gen_count);
    SparseOperator direct = word_matrix(w, basis);
    SparseOperator normal = matrix_of(Polynomial::from_word(w), basis);
    SparseOperator diff = SparseOperator(direct - normal);
    double r = windowed_max(diff, p);
    worst = std::max(worst, r);
    if (r > 1e-10) {
      std::ostringstream what;
      what << "sample " << sample << " word of length " << w.size() << " residual " << r;
      o.expect(what.str(), false);
    }
  }
  std::ostringstream msg;
  msg << "100 random words, worst residual " << worst;
  o.note(msg.str());
  o.expect("worst residual <= 1e-10", worst <= 1e-10);
  return o;
}

Outcome criterion_sector_maps() {
  Outcome o;
  FockBasis basis(4);
  const Degree d00{0, 0}, d11{1, 1}, d01{0, 1}, d10{1, 0};
  struct Case {
    const char* name;
    Polynomial op;
    Degree src, dst;
  };
  const Case cases[] = {
      {"Q01", charge_q01(), d00, d01}, {"Q01", charge_q01(), d11, d10},
      {"Q01", charge_q01(), d01, d00}, {"Q01", charge_q01(), d10, d11},
      {"Q10", charge_q10(), d00, d10}, {"Q10", charge_q10(), d11, d01},
      {"Q10", charge_q10(), d01, d11}, {"Q10", charge_q10(), d10, d00},
      {"Q1", charge_q1(), d00, d01},   {"Q1", charge_q1(), d11, d10},
      {"Q1", charge_q1(), d01, d00},   {"Q1", charge_q1(), d10, d11},
      {"Q2", charge_q2(), d00, d10},   {"Q2", charge_q2(), d11, d01},
      {"Q2", charge_q2(), d01, d11},   {"Q2", charge_q2(), d10, d00},
      {"Q10 Q01", charge_q10() * charge_q01(), d00, d11},
  };
  for (const Case& c : cases) {
    SectorImage image = sector_image(c.op, c.src, basis);
    std::ostringstream what;
    what << c.name << " maps sector " << to_string(c.src) << " into " << to_string(c.dst);
    o.expect(what.str(), image.kind == SectorImage::Kind::Sector && image.sector == c.dst);
  }
  return o;
}

// Stated target: the mode exchange fixes H00 and swaps Q01 <-> Q10 with all
// formal phase powers cancelling.  The criterion is implemented exactly as
// stated; see the analysis block printed on failure.
Outcome criterion_r_symmetry() {
  Outcome o;
  Polynomial h00 = hamiltonian_h00(), q01 = charge_q01(), q10 = charge_q10();
  Polynomial rh = substitute_r_symmetry(h00);
  Polynomial rq01 = substitute_r_symmetry(q01);
  Polynomial rq10 = substitute_r_symmetry(q10);

  auto u_free = [](const Polynomial& x) {
    for (const auto& [w, c] : x.terms())
      if (!c.is_u_free()) return false;
    return true;
  };

  o.expect("R(H00) == H00", rh == h00);
  o.expect("R(H00) has u-degree 0 in every term", u_free(rh));
  o.expect("R(Q01) == Q10", rq01 == q10);
  o.expect("R(Q10) == Q01", rq10 == q01);
  o.expect("R(Q01) has u-degree 0 in every term", u_free(rq01));
  o.expect("R(Q10) has u-degree 0 in every term", u_free(rq10));

  if (!o.ok) {
    o.note("analysis:");
    o.note("  verified: R(H00) == H00 with every coefficient phase-free, R(K1) == K2,");
    o.note("            R(K2) == K1, and R(R(x)) == x on all model operators");
    o.note("  observed: R(Q01) == Q01 -- each of its four words maps back into the same");
    o.note("            charge with phases u^-1 u^+1 cancelling");
    o.note("  observed: R(Q10) == u^2 (f1+ e + b+ f2) + u^-2 (f2+ b + e+ f1) -- support");
    o.note("            preserved, phases do not cancel");
    o.note("  refuted:  the literal swap R(Q01) == Q10, R(Q10) == Q01.  The exchange");
    o.note("            b <-> e, f1 <-> f2 maps the word support of each charge onto");
    o.note("            itself for EVERY phase dressing, so a generator map of this shape");
    o.note("            can rescale the two charges but never interchange them; the u = 1");
    o.note("            specialization also leaves both charges fixed.  A swap would need");
    o.note("            ladder generators mapped to daggered partners (f1 -> c f2+), which");
    o.note("            breaks the pairing of creators with annihilators inside each");
    o.note("            charge and is not adjoint-consistent.  The machine-checked true");
    o.note("            action is asserted in the r-symmetry suite check, which passes.");
  }
  return o;
}

Outcome criterion_ground_state() {
  Outcome o;
  FockBasis basis(3);
  int vac = basis.index(BasisState{0, 0, 0, 0});
  o.expect("vacuum is indexed", vac == 0);
  for (const auto& [name, poly] :
       {std::pair<const char*, Polynomial>{"Q01", charge_q01()}, {"Q10", charge_q10()}}) {
    SparseOperator m = matrix_of(poly, basis);
    double column = 0.0;
    for (SparseOperator::InnerIterator it(m, vac); it; ++it)
      column = std::max(column, std::abs(it.value()));
    std::ostringstream what;
    what << name << " |0,0,0,0> == 0 with residual exactly zero";
    o.expect(what.str(), column == 0.0);
  }
  o.expect("vacuum_expectation(H00) == 0", vacuum_expectation(hamiltonian_h00()).is_zero());
  return o;
}

Outcome criterion_central_term() {
  Outcome o;
  Polynomial z11 = central_z11();
  o.expect("central element normal-forms to zero", z11.is_zero());

  FockBasis basis(4);
  SparseOperator p = safe_projector(basis);
  o.expect("its matrix at cutoff 4 is zero", max_abs_entry(matrix_of(z11, basis)) == 0.0);

  SparseOperator mq01 = matrix_of(charge_q01(), basis);
  SparseOperator mq10 = matrix_of(charge_q10(), basis);
  SparseOperator comm = SparseOperator(SparseOperator(mq10 * mq01) - SparseOperator(mq01 * mq10));
  double r = windowed_max(comm, p);
  std::ostringstream msg;
  msg << "matrix [Q10,Q01] vanishes on the safe subspace (residual " << r << ")";
  o.expect(msg.str(), r <= 1e-12);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"graded supercharge algebra closes on the Hamiltonian (symbolic, exact)",
       criterion_supertranslation},
      {"klein-dressed modes obey standard CCR/CAR and the N=2 algebra (symbolic, exact)",
       criterion_superisation},
      {"witten-parity brackets with both supercharges vanish (symbolic + cutoff-4 matrices)",
       criterion_kq_brackets},
      {"level n is 4n-fold degenerate with n states per sector, levels 1..6", criterion_degeneracy},
      {"levels 0..4 per-sector state sets match the transcribed table", criterion_state_table},
      {"exact word application agrees with normal-form matrices, 100 seeded words",
       criterion_matrix_oracle},
      {"supercharges shift sectors by their degree; the two-step map lands in 11",
       criterion_sector_maps},
      {"mode exchange fixes H00 and swaps the graded supercharges (as stated)",
       criterion_r_symmetry},
      {"both supercharges annihilate the ground state exactly", criterion_ground_state},
      {"the central element vanishes symbolically and as a matrix", criterion_central_term},
  };

  int failures = 0;
  int id = 0;
  for (const Criterion& c : criteria) {
    ++id;
    auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] criterion %2d: %s (%.1f ms)\n", o.ok ? "PASS" : "FAIL", id, c.title, ms);
    for (const std::string& line : o.lines) std::printf("        %s\n", line.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
