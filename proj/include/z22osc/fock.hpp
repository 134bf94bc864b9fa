#pragma once

#include <Eigen/SparseCore>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "z22osc/polynomial.hpp"

namespace z22osc {

struct CutoffTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Occupation record |n_b, n_e, n_f1, n_f2>.
struct BasisState {
  int n_b = 0;
  int n_e = 0;
  int n_f1 = 0;
  int n_f2 = 0;

  int energy() const { return n_b + n_e + n_f1 + n_f2; }

  // n_e (1,1) + n_f1 (0,1) + n_f2 (1,0) in Z2 x Z2; labels the sector.
  Degree degree() const {
    return Degree{static_cast<std::uint8_t>((n_e + n_f2) & 1),
                  static_cast<std::uint8_t>((n_e + n_f1) & 1)};
  }

  friend bool operator==(const BasisState& x, const BasisState& y) {
    return x.n_b == y.n_b && x.n_e == y.n_e && x.n_f1 == y.n_f1 && x.n_f2 == y.n_f2;
  }
  friend bool operator<(const BasisState& x, const BasisState& y) {
    if (x.n_b != y.n_b) return x.n_b < y.n_b;
    if (x.n_e != y.n_e) return x.n_e < y.n_e;
    if (x.n_f1 != y.n_f1) return x.n_f1 < y.n_f1;
    return x.n_f2 < y.n_f2;
  }
};

using SectorLabel = Degree;
using SparseOperator = Eigen::SparseMatrix<std::complex<double>>;

// Truncated Fock basis: bosonic occupations 0..cutoff-1 for b and e, all
// fermionic combinations; 4 cutoff^2 states in lexicographic
// (n_b, n_e, n_f1, n_f2) order.
class FockBasis {
 public:
  explicit FockBasis(int cutoff);  // throws CutoffTooSmall if cutoff < 2

  int cutoff() const { return cutoff_; }
  int dimension() const { return 4 * cutoff_ * cutoff_; }
  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& state(int index) const { return states_[static_cast<std::size_t>(index)]; }

  // Position of the state, or -1 when an occupation exceeds the cutoff.
  int index(const BasisState& s) const;

 private:
  int cutoff_;
  std::vector<BasisState> states_;
};

// One ladder or Klein move with unbounded occupations; nullopt when the
// state is annihilated.  Amplitudes are sqrt factors and graded sign
// strings: f1, f2 and their adjoints carry (-1)^{n_e}.
std::optional<std::pair<double, BasisState>> apply_generator(Gen g, const BasisState& s);

// Word applied right-to-left through apply_generator; intermediate
// occupations are not truncated.
std::optional<std::pair<double, BasisState>> apply_word(const Word& w, const BasisState& s);

SparseOperator generator_matrix(Gen g, const FockBasis& basis);

// Linear extension of generator_matrix over words and coefficients, with
// u specialized to e^{i lambda}.
SparseOperator matrix_of(const Polynomial& x, const FockBasis& basis, double lambda = 0.0);

// Matrix of a single word built column-by-column from apply_word; the free
// product is evaluated without intermediate truncation, so this is an
// oracle independent of the rewrite engine and of sparse products.
SparseOperator word_matrix(const Word& w, const FockBasis& basis);

// Orthogonal projector onto states with n_b, n_e <= cutoff-1-margin.
SparseOperator margin_projector(const FockBasis& basis, int margin);

// margin_projector with margin 1: identities built from words that move
// each boson number by at most one hold exactly here.
SparseOperator safe_projector(const FockBasis& basis);

// Largest |entry|.
double max_abs_entry(const SparseOperator& m);

SparseOperator sparse_identity(int dim);

// States grouped by energy; H00 is diagonal in the occupation basis so the
// grouping is exact.  Levels with energy <= cutoff-1 are complete.
std::map<int, std::vector<BasisState>> spectrum(const FockBasis& basis);

// The level's states split by sector, indexed by degree_index.
std::array<std::vector<BasisState>, 4> split_by_sector(const std::vector<BasisState>& states);

struct SectorImage {
  enum class Kind { Sector, Mixed, Zero } kind = Kind::Zero;
  SectorLabel sector{};  // meaningful when kind == Sector
};

// Applies x to every safe basis state of sector s and reports the unique
// sector containing all nonzero images, Mixed, or Zero.
SectorImage sector_image(const Polynomial& x, SectorLabel s, const FockBasis& basis,
                         double lambda = 0.0);

}  // namespace z22osc
