// witting: regenerate the configuration tables, run verifications and
// simulate measurements.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

#include "CLI11.hpp"
#include "witting/rational.hpp"
#include "witting/report.hpp"

namespace {

using witting::Format;
using witting::Report;

int emit(const Report& r, Format fmt, const std::string& out_path) {
  const std::string body = r.render(fmt);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << body;
  }
  if (!r.ok) {
    std::cerr << "verification failed:\n";
    for (const auto& d : r.diffs) std::cerr << d << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the 40-ray Witting configuration"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  std::string format = "text";
  std::string out_path;
  std::optional<std::uint64_t> seed;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--seed", seed, "Sampling seed (overrides the descriptor)");

  bool check = false, all = false, prove = false, verify_all = false;
  std::string jname, descriptor, reference_path;

  auto* rays = app.add_subcommand("rays", "The 40 rays in (l, n) order");
  rays->add_flag("--check", check, "Diff against the published table");
  rays->add_option("--against", reference_path, "Diff against this file instead (implies --check)")
      ->check(CLI::ExistingFile);
  auto* polytope = app.add_subcommand("polytope", "The 240 polytope vertices");
  auto* groups = app.add_subcommand("groups", "Group orders by closure");
  groups->add_flag("--all", all, "Include the full reflection group and the special subgroups");
  auto* gf4 = app.add_subcommand("gf4", "Reduction to PG(3,4)");
  auto* bases = app.add_subcommand("bases", "The 40 orthogonal bases");
  auto* cliques = app.add_subcommand("cliques", "Maximal non-orthogonal cliques");
  auto* ks = app.add_subcommand("ks", "Exactly-one colouring instance (DIMACS)");
  ks->add_flag("--prove", prove, "Run the exhaustive search");
  auto* opposites = app.add_subcommand("opposites", "J-opposite ray table");
  opposites->add_option("--j", jname, "a, 1 or 2")->required()->check(CLI::IsMember({"a", "1", "2"}));
  auto* pairings = app.add_subcommand("pairings", "J-opposite basis pairing");
  pairings->add_option("--j", jname, "a, 1 or 2")->required()->check(CLI::IsMember({"a", "1", "2"}));
  auto* scan = app.add_subcommand("scan-js", "Conjugates of J_a over W/W_2H");
  auto* measure = app.add_subcommand("measure", "Run a measurement experiment");
  measure->add_option("descriptor", descriptor, "Experiment descriptor (JSON file)")->required()->check(CLI::ExistingFile);
  auto* verify = app.add_subcommand("verify", "Run every verification");
  verify->add_flag("--all", verify_all, "Run all checks")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  static const std::map<std::string, Format> formats = {
      {"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  const Format fmt = formats.at(format);

  try {
    Report r;
    if (*rays) {
      std::optional<std::string> reference;
      if (!reference_path.empty()) {
        std::ifstream in(reference_path, std::ios::binary);
        reference = std::string(std::istreambuf_iterator<char>(in), {});
      }
      r = witting::rays_report(check || reference, reference);
    }
    else if (*polytope) r = witting::polytope_report();
    else if (*groups) r = witting::groups_report(all);
    else if (*gf4) r = witting::gf4_report();
    else if (*bases) r = witting::bases_report();
    else if (*cliques) r = witting::cliques_report();
    else if (*ks) r = witting::ks_report(prove);
    else if (*opposites) r = witting::opposites_report(jname.at(0));
    else if (*pairings) r = witting::pairings_report(jname.at(0));
    else if (*scan) r = witting::scan_js_report();
    else if (*measure) {
      std::ifstream in(descriptor);
      nlohmann::json d;
      try {
        d = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw witting::InputError(std::string("descriptor is not valid JSON: ") + e.what());
      }
      r = witting::measure_report(d, seed);
    } else if (*verify) r = witting::verify_report();
    return emit(r, fmt, out_path);
  } catch (const witting::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const witting::ArithmeticOverflow& e) {
    std::cerr << "error: arithmetic overflow: " << e.what() << "\n";
    return 1;
  }
}
