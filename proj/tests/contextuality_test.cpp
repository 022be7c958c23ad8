#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "witting/contextuality.hpp"
#include "witting/golden.hpp"
#include "witting/group.hpp"

using namespace witting;

TEST_SUITE("contextuality") {
  TEST_CASE("graph basics") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(3, 3));
    CHECK(g.complement().edge_count() == 10 - 3);
    auto cliques = g.maximal_cliques();
    std::sort(cliques.begin(), cliques.end());
    CHECK(cliques == std::vector<std::uint64_t>{0b00111, 0b01000, 0b10000});
    CHECK(mask_members(0b10110) == std::vector<int>{1, 2, 4});
  }

  TEST_CASE("orthogonality graph") {
    auto g = orthogonality_graph();
    CHECK(g.size() == 40);
    CHECK(g.edge_count() == 240);
    for (int v = 0; v < 40; ++v) CHECK(g.degree(v) == 12);
  }

  TEST_CASE("bases") {
    const auto& bases = enumerate_bases();
    REQUIRE(bases.size() == 40);
    CHECK(bases[3].members == std::array<int, 4>{0, 10, 20, 30});
    const auto& pub = golden::bases();
    std::vector<int> per_ray(40, 0);
    for (std::size_t i = 0; i < 40; ++i) {
      CHECK(bases[i].id == static_cast<int>(i) + 1);
      CHECK(bases[i].members == pub[i].members);
      CHECK(bases[i].underlined == pub[i].underlined);
      for (int r : bases[i].members) ++per_ray[r];
    }
    for (int c : per_ray) CHECK(c == 4);
    CHECK(find_basis({30, 20, 10, 0}) == 4);
    CHECK_FALSE(find_basis({0, 1, 2, 4}).has_value());
  }

  TEST_CASE("underlined partition") {
    CHECK(underlined_partition_check({4, 5, 10, 12, 16, 18, 20, 24, 26, 31}));
    CHECK_FALSE(underlined_partition_check({1, 4, 5, 10, 12, 16, 18, 20, 24, 26}));
    CHECK_FALSE(underlined_partition_check({4, 5, 10, 12, 16, 18, 20, 24, 26}));
    CHECK_FALSE(underlined_partition_check({0, 5}));
  }

  TEST_CASE("non-orthogonal cliques") {
    auto rep = max_nonorthogonal_cliques();
    CHECK(rep.max_size == 7);
    CHECK(rep.count(7) == 2880);
    CHECK(rep.count(4) == 90);
    CHECK(rep.by_size.size() == 2);
    const auto& fours = rep.by_size.at(4);
    CHECK(std::binary_search(fours.begin(), fours.end(), example_four_clique()));
    const auto& sevens = rep.by_size.at(7);
    CHECK(std::binary_search(sevens.begin(), sevens.end(), example_seven_clique()));
    for (const auto& c : fours) CHECK(spans_projective_line(c));
    CHECK_FALSE(spans_projective_line({0, 10, 20}));
  }

  TEST_CASE("transitivity") {
    std::vector<std::vector<int>> perms;
    for (const auto& g : witting_group().generators()) perms.push_back(ray_permutation(g));
    auto tr = verify_clique_transitivity(perms);
    CHECK(tr.seven_orbit == 2880);
    CHECK(tr.four_orbit == 90);
    CHECK(tr.seven_transitive);
    CHECK(tr.four_transitive);
    auto trivial = verify_clique_transitivity({});
    CHECK(trivial.seven_orbit == 1);
    CHECK_FALSE(trivial.seven_transitive);
  }

  TEST_CASE("exactly-one search") {
    auto ks = ks_colorability();
    CHECK_FALSE(ks.satisfiable);
    CHECK(ks.nodes > 0);
    auto one = solve_exactly_one(40, ks_constraints({1}), true);
    CHECK(one.satisfiable);
    CHECK(one.solutions == 4);
    CHECK_FALSE(underlined_with_orthogonality().satisfiable);
    // Without the orthogonality exclusions the underlined bases are disjoint,
    // so any choice of one ray per basis works.
    CHECK(solve_exactly_one(40, ks_constraints(underlined_ids()), true).solutions == 1048576);
    auto small = solve_exactly_one(3, {{Constraint::Kind::exactly_one, {0, 1}}, {Constraint::Kind::exactly_one, {1, 2}}}, true);
    CHECK(small.solutions == 2);
    auto none = solve_exactly_one(2, {{Constraint::Kind::exactly_one, {0, 1}}, {Constraint::Kind::at_most_one, {0, 1}},
                                      {Constraint::Kind::exactly_one, {0}}, {Constraint::Kind::exactly_one, {1}}},
                                  false);
    CHECK_FALSE(none.satisfiable);
    CHECK_THROWS(solve_exactly_one(2, {{Constraint::Kind::exactly_one, {0, 5}}}, false));
  }

  TEST_CASE("solution assignments satisfy the constraints") {
    std::vector<int> ids = {1, 2, 3, 4, 5, 6, 7, 8};
    auto cons = ks_constraints(ids);
    auto r = solve_exactly_one(40, cons, false);
    REQUIRE(r.satisfiable);
    REQUIRE(r.assignment.has_value());
    for (const auto& c : cons) {
      int ones = 0;
      for (int v : c.vars) ones += (*r.assignment)[v] == 1;
      CHECK(ones == 1);
    }
  }

  TEST_CASE("DIMACS export") {
    auto text = dimacs_export();
    CHECK(text.find("p cnf 40 280\n") != std::string::npos);
    std::istringstream is(text);
    int clauses = 0;
    for (std::string line; std::getline(is, line);)
      if (!line.empty() && line[0] != 'c' && line[0] != 'p') ++clauses;
    CHECK(clauses == 280);
  }
}
