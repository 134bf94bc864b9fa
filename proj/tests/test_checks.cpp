#include <algorithm>

#include "doctest.h"
#include "z22osc/checks.hpp"

using namespace z22osc;

TEST_CASE("the full suite passes at default scale") {
  auto reports = run_all(6, 5, 0);
  REQUIRE(reports.size() == 10);
  CHECK(all_passed(reports));

  std::vector<std::string> names;
  for (const auto& r : reports) names.push_back(r.name);
  CHECK(names == std::vector<std::string>{
                     "supertranslation-algebra", "central-term", "klein-construction",
                     "r-symmetry", "degeneracy", "state-table", "witten-parity", "sector-maps",
                     "ground-state", "matrix-oracle"});

  for (const auto& r : reports) {
    CHECK(r.elapsed_ms >= 0.0);
    CHECK(!r.anchor.empty());
    CHECK(r.residual <= std::max(r.tolerance, 0.0));
    if (r.exactness == CheckReport::Exactness::SymbolicExact) {
      CHECK(r.residual == 0.0);
      CHECK(r.tolerance == 0.0);
    }
  }
}

TEST_CASE("cutoff preconditions") {
  CHECK_THROWS_AS(run_all(2, 5, 0), CutoffTooSmall);
  CHECK_THROWS_AS(run_all(4, 5, 0), CutoffTooSmall);  // needs cutoff >= max_level + 1
  CHECK_NOTHROW(run_all(4, 3, 0));
}

TEST_CASE("individual checks pass and carry the right exactness") {
  CHECK(check_supertranslation().passed);
  CHECK(check_supertranslation().exactness == CheckReport::Exactness::SymbolicExact);
  CHECK(check_degeneracy(6).passed);
  CHECK(check_state_table().passed);
  CHECK(check_r_symmetry().passed);

  CheckReport oracle = check_matrix_oracle(5, 7, 60, 4);
  CHECK(oracle.passed);
  CHECK(oracle.exactness == CheckReport::Exactness::Numeric);
  CHECK(oracle.tolerance == 1e-10);
  CHECK(oracle.residual <= 1e-10);
}

TEST_CASE("the randomized oracle is deterministic per seed") {
  CheckReport a = check_matrix_oracle(5, 123, 40, 4);
  CheckReport b = check_matrix_oracle(5, 123, 40, 4);
  CHECK(a.passed == b.passed);
  CHECK(a.residual == b.residual);
  CHECK(a.notes == b.notes);
  CHECK(check_matrix_oracle(5, 999, 40, 4).passed);
}

TEST_CASE("the exchange-symmetry report records the charge-swap refutation") {
  CheckReport r = check_r_symmetry();
  CHECK(r.passed);
  bool mentions_refutation =
      std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
        return n.find("refuted") != std::string::npos;
      });
  CHECK(mentions_refutation);
}

TEST_CASE("sector-map report flags the symmetry-completed rows") {
  CheckReport r = check_sector_maps(4);
  CHECK(r.passed);
  int completed = 0;
  for (const auto& n : r.notes) {
    if (n.find("[symmetry-completed]") != std::string::npos) ++completed;
  }
  CHECK(completed == 2);
}

TEST_CASE("state table fixture spot cells") {
  const auto& fixture = level_table_fixture();
  REQUIRE(fixture.size() == 5);
  CHECK(fixture[0][0] == std::vector<BasisState>{{0, 0, 0, 0}});
  CHECK(fixture[0][1].empty());
  CHECK(fixture[1][2] == std::vector<BasisState>{{0, 0, 1, 0}});

  auto sorted = [](std::vector<BasisState> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(fixture[2][1]) == sorted({{1, 1, 0, 0}, {0, 0, 1, 1}}));
  CHECK(sorted(fixture[3][0]) == sorted({{3, 0, 0, 0}, {1, 2, 0, 0}, {0, 1, 1, 1}}));
  CHECK(sorted(fixture[4][3]) == sorted({{3, 0, 0, 1}, {2, 1, 1, 0}, {1, 2, 0, 1}, {0, 3, 1, 0}}));

  std::size_t total = 0;
  for (const auto& level : fixture)
    for (const auto& cell : level) total += cell.size();
  CHECK(total == 1 + 4 + 8 + 12 + 16);
}
