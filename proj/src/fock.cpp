#include "z22osc/fock.hpp"

#include <array>
#include <cmath>
#include <string>

namespace z22osc {

FockBasis::FockBasis(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 2) {
    throw CutoffTooSmall("cutoff " + std::to_string(cutoff) +
                         " leaves no room for a ladder move; need at least 2");
  }
  states_.reserve(static_cast<std::size_t>(dimension()));
  for (int n_b = 0; n_b < cutoff; ++n_b)
    for (int n_e = 0; n_e < cutoff; ++n_e)
      for (int n_f1 = 0; n_f1 < 2; ++n_f1)
        for (int n_f2 = 0; n_f2 < 2; ++n_f2) states_.push_back({n_b, n_e, n_f1, n_f2});
}

int FockBasis::index(const BasisState& s) const {
  if (s.n_b < 0 || s.n_b >= cutoff_ || s.n_e < 0 || s.n_e >= cutoff_ || s.n_f1 < 0 ||
      s.n_f1 > 1 || s.n_f2 < 0 || s.n_f2 > 1) {
    return -1;
  }
  return ((s.n_b * cutoff_ + s.n_e) * 2 + s.n_f1) * 2 + s.n_f2;
}

std::optional<std::pair<double, BasisState>> apply_generator(Gen g, const BasisState& s) {
  BasisState t = s;
  double fermion_sign = (s.n_e % 2 == 0) ? 1.0 : -1.0;
  switch (g) {
    case Gen::B:
      if (s.n_b == 0) return std::nullopt;
      t.n_b -= 1;
      return std::pair{std::sqrt(static_cast<double>(s.n_b)), t};
    case Gen::BDag:
      t.n_b += 1;
      return std::pair{std::sqrt(static_cast<double>(s.n_b + 1)), t};
    case Gen::E:
      if (s.n_e == 0) return std::nullopt;
      t.n_e -= 1;
      return std::pair{std::sqrt(static_cast<double>(s.n_e)), t};
    case Gen::EDag:
      t.n_e += 1;
      return std::pair{std::sqrt(static_cast<double>(s.n_e + 1)), t};
    case Gen::F1:
      if (s.n_f1 == 0) return std::nullopt;
      t.n_f1 = 0;
      return std::pair{fermion_sign, t};
    case Gen::F1Dag:
      if (s.n_f1 == 1) return std::nullopt;
      t.n_f1 = 1;
      return std::pair{fermion_sign, t};
    case Gen::F2:
      if (s.n_f2 == 0) return std::nullopt;
      t.n_f2 = 0;
      return std::pair{fermion_sign, t};
    case Gen::F2Dag:
      if (s.n_f2 == 1) return std::nullopt;
      t.n_f2 = 1;
      return std::pair{fermion_sign, t};
    case Gen::K1:
      return std::pair{(s.n_e + s.n_f1) % 2 == 0 ? 1.0 : -1.0, t};
    case Gen::K2:
      return std::pair{(s.n_e + s.n_f2) % 2 == 0 ? 1.0 : -1.0, t};
  }
  return std::nullopt;
}

std::optional<std::pair<double, BasisState>> apply_word(const Word& w, const BasisState& s) {
  double amp = 1.0;
  BasisState current = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto step = apply_generator(*it, current);
    if (!step) return std::nullopt;
    amp *= step->first;
    current = step->second;
  }
  return std::pair{amp, current};
}

SparseOperator generator_matrix(Gen g, const FockBasis& basis) {
  const int dim = basis.dimension();
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  entries.reserve(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) {
    auto moved = apply_generator(g, basis.state(j));
    if (!moved) continue;
    int i = basis.index(moved->second);
    if (i < 0) continue;  // truncated away
    entries.emplace_back(i, j, std::complex<double>(moved->first, 0.0));
  }
  SparseOperator m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

SparseOperator matrix_of(const Polynomial& x, const FockBasis& basis, double lambda) {
  const int dim = basis.dimension();
  std::array<std::optional<SparseOperator>, gen_count> cache;
  auto gen_matrix = [&](Gen g) -> const SparseOperator& {
    auto& slot = cache[static_cast<std::size_t>(order_index(g))];
    if (!slot) slot = generator_matrix(g, basis);
    return *slot;
  };

  SparseOperator total(dim, dim);
  for (const auto& [w, c] : x.terms()) {
    SparseOperator m = sparse_identity(dim);
    for (Gen g : w) m = (m * gen_matrix(g)).pruned();
    total += std::complex<double>(c.specialize(lambda)) * m;
  }
  return total.pruned();
}

SparseOperator word_matrix(const Word& w, const FockBasis& basis) {
  const int dim = basis.dimension();
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  for (int j = 0; j < dim; ++j) {
    auto moved = apply_word(w, basis.state(j));
    if (!moved) continue;
    int i = basis.index(moved->second);
    if (i < 0) continue;
    entries.emplace_back(i, j, std::complex<double>(moved->first, 0.0));
  }
  SparseOperator m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

SparseOperator margin_projector(const FockBasis& basis, int margin) {
  if (margin < 0 || basis.cutoff() < margin + 2) {
    throw CutoffTooSmall("margin " + std::to_string(margin) +
                         " needs cutoff at least " + std::to_string(margin + 2));
  }
  const int limit = basis.cutoff() - 1 - margin;
  const int dim = basis.dimension();
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  for (int j = 0; j < dim; ++j) {
    const BasisState& s = basis.state(j);
    if (s.n_b <= limit && s.n_e <= limit) {
      entries.emplace_back(j, j, std::complex<double>(1.0, 0.0));
    }
  }
  SparseOperator m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

SparseOperator safe_projector(const FockBasis& basis) { return margin_projector(basis, 1); }

double max_abs_entry(const SparseOperator& m) {
  double best = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseOperator::InnerIterator it(m, k); it; ++it) {
      best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

SparseOperator sparse_identity(int dim) {
  SparseOperator m(dim, dim);
  m.setIdentity();
  return m;
}

std::map<int, std::vector<BasisState>> spectrum(const FockBasis& basis) {
  std::map<int, std::vector<BasisState>> levels;
  for (const BasisState& s : basis.states()) levels[s.energy()].push_back(s);
  return levels;
}

std::array<std::vector<BasisState>, 4> split_by_sector(const std::vector<BasisState>& states) {
  std::array<std::vector<BasisState>, 4> sectors;
  for (const BasisState& s : states) {
    sectors[static_cast<std::size_t>(degree_index(s.degree()))].push_back(s);
  }
  return sectors;
}

SectorImage sector_image(const Polynomial& x, SectorLabel s, const FockBasis& basis,
                         double lambda) {
  constexpr double tiny = 1e-12;
  SparseOperator m = matrix_of(x, basis, lambda);
  const int limit = basis.cutoff() - 2;

  bool seen = false;
  SectorLabel image{};
  for (int j = 0; j < basis.dimension(); ++j) {
    const BasisState& source = basis.state(j);
    if (source.degree() != s || source.n_b > limit || source.n_e > limit) continue;
    for (SparseOperator::InnerIterator it(m, j); it; ++it) {
      if (std::abs(it.value()) <= tiny) continue;
      SectorLabel target = basis.state(static_cast<int>(it.row())).degree();
      if (!seen) {
        seen = true;
        image = target;
      } else if (target != image) {
        return {SectorImage::Kind::Mixed, {}};
      }
    }
  }
  if (!seen) return {SectorImage::Kind::Zero, {}};
  return {SectorImage::Kind::Sector, image};
}

}  // namespace z22osc
