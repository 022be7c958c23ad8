#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "witting/matrix.hpp"

namespace witting {

enum class Format { json, csv, text };

/// Output of one CLI verb.  `ok` is false when a requested verification
/// failed; `diffs` then explains the divergence.
struct Report {
  nlohmann::ordered_json data;
  std::string csv;
  std::string text;
  std::vector<std::string> diffs;
  bool ok = true;

  std::string render(Format f) const;
};

/// Thrown for malformed user input (bad descriptor, unknown J, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// With `check`, diffs the rendered table against `reference` (default: the
/// embedded published table).
Report rays_report(bool check, std::optional<std::string> reference = std::nullopt);
Report polytope_report();
Report groups_report(bool all);
Report gf4_report();
Report bases_report();
Report cliques_report();
Report ks_report(bool prove);
Report opposites_report(char j);
Report pairings_report(char j);
Report scan_js_report();
/// Descriptor: {state: "Ja"|"J1"|"J2"|[16 amplitudes]|[[4]x4],
/// bases: [i, j] | "paired", samples, seed}.  `seed` overrides the
/// descriptor's seed when given.
Report measure_report(const nlohmann::json& descriptor, std::optional<std::uint64_t> seed);
Report verify_report();

/// Exact-field text for every entry, row by row.
nlohmann::ordered_json matrix_json(const Matrix4& m);

}  // namespace witting
