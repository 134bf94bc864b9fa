#include "z22osc/checks.hpp"

namespace z22osc {

// Hand-transcribed per-sector state lists for energy levels 0..4, sectors in
// canonical degree order 00, 11, 01, 10.  Kept independent of spectrum() and
// split_by_sector() so it can certify them.
const std::array<std::array<std::vector<BasisState>, 4>, 5>& level_table_fixture() {
  static const std::array<std::array<std::vector<BasisState>, 4>, 5> table = {{
      // level 0
      {{{{0, 0, 0, 0}}, {}, {}, {}}},
      // level 1
      {{{{1, 0, 0, 0}}, {{0, 1, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, 0, 1}}}},
      // level 2
      {{{{2, 0, 0, 0}, {0, 2, 0, 0}},
        {{1, 1, 0, 0}, {0, 0, 1, 1}},
        {{1, 0, 1, 0}, {0, 1, 0, 1}},
        {{1, 0, 0, 1}, {0, 1, 1, 0}}}},
      // level 3
      {{{{3, 0, 0, 0}, {1, 2, 0, 0}, {0, 1, 1, 1}},
        {{2, 1, 0, 0}, {1, 0, 1, 1}, {0, 3, 0, 0}},
        {{2, 0, 1, 0}, {1, 1, 0, 1}, {0, 2, 1, 0}},
        {{2, 0, 0, 1}, {1, 1, 1, 0}, {0, 2, 0, 1}}}},
      // level 4
      {{{{4, 0, 0, 0}, {2, 2, 0, 0}, {1, 1, 1, 1}, {0, 4, 0, 0}},
        {{3, 1, 0, 0}, {2, 0, 1, 1}, {1, 3, 0, 0}, {0, 2, 1, 1}},
        {{3, 0, 1, 0}, {2, 1, 0, 1}, {1, 2, 1, 0}, {0, 3, 0, 1}},
        {{3, 0, 0, 1}, {2, 1, 1, 0}, {1, 2, 0, 1}, {0, 3, 1, 0}}}},
  }};
  return table;
}

}  // namespace z22osc
