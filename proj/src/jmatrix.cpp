#include "witting/jmatrix.hpp"

#include <stdexcept>

namespace witting {

std::string JMatrix::label() const {
  switch (name) {
    case JName::a: return "Ja";
    case JName::post: return "Jpost";
    case JName::one: return "J1";
    case JName::two: return "J2";
    case JName::generic: break;
  }
  return "J";
}

JMatrix j_a() {
  return {Matrix4{0, 0, 0, 1,
                  0, 0, -1, 0,
                  0, 1, 0, 0,
                  -1, 0, 0, 0},
          JName::a};
}

JMatrix j_post() {
  return {Matrix4{0, 0, 0, 1,
                  0, 0, 1, 0,
                  0, -1, 0, 0,
                  -1, 0, 0, 0},
          JName::post};
}

JMatrix j_1() {
  return {Matrix4{0, 0, 1, 0,
                  0, 0, 0, 1,
                  -1, 0, 0, 0,
                  0, -1, 0, 0},
          JName::one};
}

JMatrix j_2() {
  return {Matrix4{0, 1, 0, 0,
                  -1, 0, 0, 0,
                  0, 0, 0, -1,
                  0, 0, 1, 0},
          JName::two};
}

JMatrix named_j(char which) {
  switch (which) {
    case 'a': return j_a();
    case '1': return j_1();
    case '2': return j_2();
    default: throw std::invalid_argument(std::string("unknown J '") + which + "', expected a, 1 or 2");
  }
}

Matrix4 s_1() {
  return {0, 1, 0, 0,
          1, 0, 0, 0,
          0, 0, 1, 0,
          0, 0, 0, -1};
}

Matrix4 s_2() {
  return {1, 0, 0, 0,
          0, 0, 0, -1,
          0, 0, -1, 0,
          0, -1, 0, 0};
}

}  // namespace witting
