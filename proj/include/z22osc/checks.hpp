#pragma once

#include <array>
#include <string>
#include <vector>

#include "z22osc/fock.hpp"
#include "z22osc/model.hpp"

namespace z22osc {

// Outcome of one named verification.  A symbolic-exact pass means every
// asserted normal form was the literal zero polynomial (or an exact term
// map equality); numeric checks carry their worst residual and tolerance.
struct CheckReport {
  std::string name;
  bool passed = false;
  enum class Exactness { SymbolicExact, Numeric } exactness = Exactness::SymbolicExact;
  double residual = 0.0;
  double tolerance = 0.0;  // 0 for exact assertions
  std::string anchor;      // one-line statement of the verified claim
  double elapsed_ms = 0.0;
  std::vector<std::string> notes;  // sub-assertion details, failures first
};

// {Q01,Q01} = {Q10,Q10} = 2 H00, [Q10,Q01] = 0, H00 central; all symbolic.
CheckReport check_supertranslation();

// Z11 = (1/2i)[Q10,Q01] is the zero polynomial; its matrix and the matrix
// commutator of Q10, Q01 vanish on the safe subspace.
CheckReport check_central_term(int cutoff = 4);

// a_i = f_i K1 satisfy the standard super CCR/CAR by total degree, H = H00,
// Q1/Q2 close the N=2 algebra, and the K-Q brackets vanish (symbolic, with
// the K-Q brackets also checked as matrices).
CheckReport check_klein_construction(int cutoff = 4);

// The b<->e, f1<->f2 phase substitution is a *-automorphism that fixes H00
// and Q01 exactly (all phase powers cancelling) and maps Q10 to its
// u^{+/-2}-phased counterpart; it exchanges K1 <-> K2 and composes with
// itself (equal phase parameters) to the identity.  The report also records
// a machine refutation that the substitution does NOT swap Q01 and Q10.
CheckReport check_r_symmetry();

// Level n holds exactly 4n states, n per sector, with fermion-label counts
// n+1, n-1, n, n; level 0 is a one-state sector-00 singlet.
CheckReport check_degeneracy(int max_level);

// Levels 0..4 per-sector state sets equal the transcribed fixture.
CheckReport check_state_table();

// Eigenvalue action (-1)^(n_e + n_f_i), the involution relations, the Q-K
// exchange signs, and the Klein rewrite rules as matrices.
CheckReport check_witten_parity(int cutoff = 4);

// Sector containments for Q01, Q10, Q1, Q2 on all four sectors plus the
// two-step map Q10 Q01: 00 -> 11; notes flag symmetry-completed entries.
CheckReport check_sector_maps(int cutoff = 4);

// Q01 and Q10 annihilate |0,0,0,0> with residual exactly zero;
// vacuum_expectation(H00) = 0 symbolically.
CheckReport check_ground_state(int cutoff = 3);

// Seeded random words: the exact-application matrix of the word equals the
// matrix of its normal form entrywise.
CheckReport check_matrix_oracle(int cutoff = 6, unsigned long long seed = 0,
                                int samples = 100, int max_word_len = 4);

// Fixed registry order; deterministic given the seed.  Requires
// cutoff >= max_level + 1 and cutoff >= 3 (CutoffTooSmall otherwise).
std::vector<CheckReport> run_all(int cutoff = 6, int max_level = 5,
                                 unsigned long long seed = 0);

bool all_passed(const std::vector<CheckReport>& reports);

// Transcription of the level-0..4 state table: states_for(level, sector
// index in canonical degree order).
const std::array<std::array<std::vector<BasisState>, 4>, 5>& level_table_fixture();

}  // namespace z22osc
