#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "witting/matrix.hpp"

// Hard-coded reference copies of the published tables.  Computed results are
// diffed against these; nothing in the library derives data from them except
// the ray-table parser used for cross-checking.
namespace witting::golden {

/// The 40-ray table in the layout produced by render_ray_table().
std::string_view ray_table_text();
/// Parsed coordinates of the ray table, indexed by flat (l, n) position.
std::vector<Vec4> ray_table_coords();

struct BasisRow {
  int id = 0;                    ///< 1..40
  std::array<int, 4> members{};  ///< flat ray indices, ascending
  bool underlined = false;
};
/// The 40 orthogonal tetrads, in published order.
const std::vector<BasisRow>& bases();

/// `which` is 'a', '1' or '2'.  Returns opp[flat] = flat index of partner.
std::vector<int> opposite_table(char which);
/// Returns pair[id - 1] = partner basis id.
std::vector<int> basis_pairing(char which);

}  // namespace witting::golden
