#pragma once

#include <string>

#include "witting/matrix.hpp"

namespace witting {

enum class JName { a, post, one, two, generic };

/// Coefficient matrix of a bipartite state sum_jk J_jk |j>|k>.
struct JMatrix {
  Matrix4 matrix;
  JName name = JName::generic;

  std::string label() const;
};

/// Antisymmetric J_a: the state (|03> - |12> + |21> - |30>)/2.
JMatrix j_a();
/// Variant differing from J_a by the basis swap |1> <-> |2>.
JMatrix j_post();
JMatrix j_1();
JMatrix j_2();
/// 'a', '1' or '2'.
JMatrix named_j(char which);

/// The two conjugating transformations published alongside J_1 and J_2.
Matrix4 s_1();
Matrix4 s_2();

}  // namespace witting
