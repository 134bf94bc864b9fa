#include "z22osc/json_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace z22osc {

std::string rational_to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_string(const std::string& s) {
  std::size_t slash = s.find('/');
  long long num = std::stoll(s.substr(0, slash));
  long long den = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
  return Rational(num, den);
}

ordered_json polynomial_to_json(const Polynomial& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [word, coeff] : x.terms()) {  // map order: word, then u-power
    for (const auto& [upow, c] : coeff.terms()) {
      ordered_json entry;
      ordered_json tokens = ordered_json::array();
      for (Gen g : word) tokens.push_back(token(g));
      entry["word"] = std::move(tokens);
      entry["coeff"] = {{"re", rational_to_string(c.re)},
                        {"im", rational_to_string(c.im)},
                        {"upow", upow}};
      terms.push_back(std::move(entry));
    }
  }
  return terms;
}

Polynomial polynomial_from_json(const ordered_json& j) {
  Polynomial x;
  for (const auto& entry : j) {
    Word w;
    for (const auto& tok : entry.at("word")) {
      auto g = gen_from_token(tok.get<std::string>());
      if (!g) throw std::invalid_argument("unknown generator token " + tok.get<std::string>());
      w.push_back(*g);
    }
    const auto& coeff = entry.at("coeff");
    GaussianRational c{rational_from_string(coeff.at("re").get<std::string>()),
                       rational_from_string(coeff.at("im").get<std::string>())};
    x += Polynomial::from_word(w, PhaseCoefficient::unit_phase_power(coeff.at("upow").get<int>(), c));
  }
  return x;
}

ordered_json sparse_to_json(const SparseOperator& m) {
  std::vector<std::tuple<int, int, double, double>> entries;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseOperator::InnerIterator it(m, k); it; ++it) {
      if (it.value() == std::complex<double>(0.0, 0.0)) continue;
      entries.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                           it.value().real(), it.value().imag());
    }
  }
  std::sort(entries.begin(), entries.end());

  ordered_json j;
  j["dim"] = static_cast<int>(m.rows());
  ordered_json rows = ordered_json::array();
  for (const auto& [r, c, re, im] : entries) rows.push_back({r, c, re, im});
  j["entries"] = std::move(rows);
  return j;
}

SparseOperator sparse_from_json(const ordered_json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  for (const auto& row : j.at("entries")) {
    triplets.emplace_back(row.at(0).get<int>(), row.at(1).get<int>(),
                          std::complex<double>(row.at(2).get<double>(), row.at(3).get<double>()));
  }
  SparseOperator m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

ordered_json report_to_json(const CheckReport& r) {
  ordered_json j;
  j["check"] = r.name;
  j["status"] = r.passed ? "pass" : "fail";
  j["exactness"] =
      r.exactness == CheckReport::Exactness::SymbolicExact ? "symbolic-exact" : "numeric";
  j["residual"] = r.residual;
  j["anchor"] = r.anchor;
  j["ms"] = static_cast<long long>(std::llround(r.elapsed_ms));
  j["notes"] = r.notes;
  return j;
}

ordered_json spectrum_to_json(const FockBasis& basis, int max_level) {
  auto levels = spectrum(basis);
  ordered_json out = ordered_json::array();
  for (int n = 0; n <= max_level; ++n) {
    auto sectors = split_by_sector(levels[n]);
    ordered_json level;
    level["level"] = n;
    level["degeneracy"] = levels[n].size();
    ordered_json by_sector;
    for (std::size_t si = 0; si < sectors.size(); ++si) {
      ordered_json states = ordered_json::array();
      for (const BasisState& s : sectors[si]) states.push_back({s.n_b, s.n_e, s.n_f1, s.n_f2});
      by_sector[to_string(degree_order[si])] = std::move(states);
    }
    level["sectors"] = std::move(by_sector);
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace z22osc
