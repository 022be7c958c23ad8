#pragma once

#include <functional>
#include <string>
#include <vector>

namespace witting {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::vector<std::string> details;  ///< one line per measured fact
  std::vector<std::string> diffs;    ///< populated on mismatch
  double seconds = 0;
};

/// Records "what: got (expected want)" and fails the check on mismatch.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name);

  template <class T, class U>
  bool expect_eq(const std::string& what, const T& got, const U& want);
  bool expect(const std::string& what, bool cond);
  void diff(const std::string& line);
  void note(const std::string& line);

  CheckResult finish();

 private:
  CheckResult r_;
  double start_;
};

/// Line-oriented diff: "-" lines from `expected`, "+" lines from `actual`,
/// prefixed with the 1-based line number.
std::vector<std::string> diff_text(const std::string& expected, const std::string& actual);

CheckResult check_configuration();
CheckResult check_overlaps();
CheckResult check_group_orders();
CheckResult check_subgroups();
CheckResult check_gf4_model();
CheckResult check_bases();
CheckResult check_contextuality();
CheckResult check_entanglement();
CheckResult check_conjugate_js();
CheckResult check_measurement();

// Module property suites.
CheckResult check_field_properties();
CheckResult check_ray_properties();
CheckResult check_group_properties();
CheckResult check_gf4_properties();
CheckResult check_contextuality_properties();
CheckResult check_entanglement_properties();
CheckResult check_measurement_properties();

struct NamedCheck {
  std::string topic;
  std::function<CheckResult()> run;
};

/// The ten headline checks, configuration through measurement, in order.
const std::vector<NamedCheck>& acceptance_checks();
const std::vector<NamedCheck>& property_checks();
/// acceptance_checks() followed by property_checks().
std::vector<NamedCheck> all_checks();

}  // namespace witting

#include "witting/verify_impl.hpp"
