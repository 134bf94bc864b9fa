#pragma once

#include <string>

#include "z22osc/checks.hpp"
#include "z22osc/fock.hpp"
#include "z22osc/polynomial.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace z22osc {

using ordered_json = nlohmann::ordered_json;

// Stable polynomial form: one entry per (word, u-power), sorted by word
// (lexicographic, prefixes first) then ascending u-power:
//   [{"word": ["b+","f1"], "coeff": {"re": "1/1", "im": "0/1", "upow": 0}}, ...]
ordered_json polynomial_to_json(const Polynomial& x);
Polynomial polynomial_from_json(const ordered_json& j);

// {"dim": d, "entries": [[row, col, re, im], ...]} sorted by (row, col).
ordered_json sparse_to_json(const SparseOperator& m);
SparseOperator sparse_from_json(const ordered_json& j);

// {"check", "status", "exactness", "residual", "anchor", "ms", "notes"}.
// ms holds measured wall time and is the only run-dependent field.
ordered_json report_to_json(const CheckReport& r);

ordered_json spectrum_to_json(const FockBasis& basis, int max_level);

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace z22osc
