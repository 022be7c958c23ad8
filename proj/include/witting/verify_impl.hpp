#pragma once

#include <sstream>

namespace witting {

namespace detail {
template <class T>
std::string to_text(const T& v) {
  if constexpr (requires { v.str(); }) {
    return v.str();
  } else {
    std::ostringstream os;
    os << std::boolalpha << v;
    return os.str();
  }
}
}  // namespace detail

template <class T, class U>
bool CheckBuilder::expect_eq(const std::string& what, const T& got, const U& want) {
  bool ok = got == want;
  std::string line = what + ": " + detail::to_text(got);
  if (!ok) {
    line += " (expected " + detail::to_text(want) + ")";
    r_.ok = false;
    r_.diffs.push_back("-" + what + ": " + detail::to_text(want));
    r_.diffs.push_back("+" + what + ": " + detail::to_text(got));
  }
  r_.details.push_back(line);
  return ok;
}

}  // namespace witting
