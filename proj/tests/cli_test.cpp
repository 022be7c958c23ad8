#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "witting/golden.hpp"
#include "witting/report.hpp"
#include "witting/verify.hpp"

using namespace witting;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  auto tmp = std::filesystem::temp_directory_path() / "witting_cli_test.out";
  std::string cmd = std::string(WITTING_CLI) + " " + args + " > " + tmp.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("diff helper") {
    CHECK(diff_text("a\nb\n", "a\nb\n").empty());
    auto d = diff_text("a\nb\n", "a\nc\n");
    CHECK(d == std::vector<std::string>{"2: -b", "2: +c"});
    CHECK(diff_text("a\n", "a\nz\n") == std::vector<std::string>{"2: +z"});
  }

  TEST_CASE("reports") {
    auto rays = rays_report(true);
    CHECK(rays.ok);
    CHECK(rays.data.size() == 40);
    CHECK(rays.data[1]["coords"] == nlohmann::json({"0", "1", "-1", "1"}));
    CHECK(rays.data[1]["norm_sq"] == 3);
    CHECK(rays.text.rfind(std::string(golden::ray_table_text()), 0) == 0);
    auto bad = rays_report(true, std::string("not the table\n"));
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.diffs.empty());

    auto opp = opposites_report('a');
    CHECK(opp.ok);
    CHECK(opp.data["kind"] == "opposites");
    CHECK(opp.data["pairs"][0] == nlohmann::json::parse("[[0,0],[3,0]]"));
    auto pairs = pairings_report('1');
    CHECK(pairs.ok);
    CHECK(pairs.data["basis_pairs"][0] == nlohmann::json::parse("[1,35]"));
    CHECK_THROWS_AS(opposites_report('q'), InputError);

    auto ks = ks_report(true);
    CHECK(ks.data["ks_satisfiable"] == false);
    CHECK(ks.data["max_clique"] == 7);
    CHECK(ks.text.rfind("UNSAT", 0) == 0);
    CHECK(ks_report(false).text.find("p cnf 40 280") != std::string::npos);
  }

  TEST_CASE("measurement descriptors") {
    auto r = measure_report(nlohmann::json::parse(R"({"state":"Ja","bases":[4,4]})"), std::nullopt);
    CHECK(r.ok);
    const auto& outs = r.data["measurements"][0]["outcomes"];
    REQUIRE(outs.size() == 16);
    CHECK(outs[3]["probability"] == "1/4");
    CHECK(outs[0]["probability"] == "0/1");
    auto paired = measure_report(nlohmann::json::parse(R"({"state":"J2","bases":"paired","samples":100,"seed":5})"), 9);
    CHECK(paired.data["measurements"].size() == 40);
    CHECK(paired.data["seed"] == 9);
    auto again = measure_report(nlohmann::json::parse(R"({"state":"J2","bases":"paired","samples":100,"seed":9})"), std::nullopt);
    CHECK(again.render(Format::json) == paired.render(Format::json));
    auto expl = measure_report(nlohmann::json::parse(R"({"state":[[0,0,0,1],[0,0,"-1",0],[0,1,0,0],[-1,0,0,0]],"bases":[1,38]})"),
                               std::nullopt);
    CHECK(expl.data["norm_sq"] == "4");
    for (const char* bad : {R"({"bases":[1,2]})", R"({"state":"Jz","bases":[1,2]})", R"({"state":"Ja","bases":[0,2]})",
                            R"({"state":"Ja","bases":"all"})", R"({"state":[1,2],"bases":[1,2]})",
                            R"({"state":[[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,"q"]],"bases":[1,2]})",
                            R"({"state":[[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]],"bases":"paired"})", R"([1])"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(measure_report(nlohmann::json::parse(bad), std::nullopt), InputError);
    }
  }

  TEST_CASE("binary exit codes") {
    CHECK(run_cli("rays --check").code == 0);
    auto groups = run_cli("groups --all");
    CHECK(groups.code == 0);
    for (const char* order : {"155520", "51840", "25920", "1920", "1440", "720", "48", "27"})
      CHECK(groups.out.find(order) != std::string::npos);
    auto ks = run_cli("ks --prove");
    CHECK(ks.code == 0);
    CHECK(ks.out.rfind("UNSAT (nodes explored: ", 0) == 0);
    CHECK(run_cli("opposites --j 1 --format csv").out.rfind("l,n,opposite_l,opposite_n\n", 0) == 0);
    CHECK(run_cli("bogus").code == 1);
    CHECK(run_cli("rays --nope").code == 1);
    CHECK(run_cli("opposites --j 7").code == 1);
    CHECK(run_cli("rays --format xml").code == 1);
    CHECK(run_cli("--help").code == 0);

    std::string table(golden::ray_table_text());
    table[table.find("(0,1,-1,1)") + 7] = '+';
    auto mismatch = run_cli("rays --against " + write_temp("witting_bad_table.txt", table).string());
    CHECK(mismatch.code == 2);
    CHECK(mismatch.out.find("verification failed") != std::string::npos);

    auto desc = write_temp("witting_desc.json", R"({"state":"Ja","bases":[1,38],"samples":400,"seed":1})");
    auto m1 = run_cli("measure " + desc.string() + " --format json");
    auto m2 = run_cli("measure " + desc.string() + " --format json");
    CHECK(m1.code == 0);
    CHECK(m1.out == m2.out);
    CHECK(run_cli("measure " + write_temp("witting_bad.json", "{nope").string()).code == 1);
    CHECK(run_cli("measure /nonexistent/descriptor.json").code == 1);

    auto out = std::filesystem::temp_directory_path() / "witting_bases.csv";
    CHECK(run_cli("bases --format csv --out " + out.string()).code == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "id,r0,r1,r2,r3,underlined");
  }
}
