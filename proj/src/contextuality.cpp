#include "witting/contextuality.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "witting/group.hpp"
#include "witting/rays.hpp"

namespace witting {

void Graph::add_edge(int u, int v) {
  if (u == v) return;
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto a : adj_) twice += std::popcount(a);
  return twice / 2;
}

Graph Graph::complement() const {
  Graph g(size());
  const std::uint64_t all = size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  for (int v = 0; v < size(); ++v) g.adj_[v] = ~adj_[v] & all & ~(std::uint64_t{1} << v);
  return g;
}

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P u X with most neighbours in P.
  int pivot = -1, best = -1;
  for (std::uint64_t px = p | x; px; px &= px - 1) {
    int u = std::countr_zero(px);
    int d = std::popcount(p & g.neighbours(u));
    if (d > best) {
      best = d;
      pivot = u;
    }
  }
  for (std::uint64_t cand = p & ~g.neighbours(pivot); cand; cand &= cand - 1) {
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    bron_kerbosch(g, r | bit, p & g.neighbours(v), x & g.neighbours(v), out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<std::uint64_t> Graph::maximal_cliques() const {
  std::vector<std::uint64_t> out;
  const std::uint64_t all = size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  bron_kerbosch(*this, 0, all, 0, out);
  return out;
}

std::vector<int> mask_members(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

Graph orthogonality_graph() {
  const auto& cfg = Configuration::get();
  Graph g(static_cast<int>(cfg.size()));
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (cfg.orthogonal(i, j)) g.add_edge(i, j);
  return g;
}

std::vector<int> underlined_ids() { return {4, 5, 10, 12, 16, 18, 20, 24, 26, 31}; }

const std::vector<Basis>& enumerate_bases() {
  static const std::vector<Basis> bases = [] {
    auto cliques = orthogonality_graph().maximal_cliques();
    std::vector<std::array<int, 4>> tetrads;
    for (auto c : cliques) {
      auto m = mask_members(c);
      if (m.size() != 4) throw std::logic_error("orthogonality graph has a maximal clique of size " +
                                                std::to_string(m.size()));
      tetrads.push_back({m[0], m[1], m[2], m[3]});
    }
    if (tetrads.size() != 40) {
      throw std::logic_error("expected 40 bases, found " + std::to_string(tetrads.size()));
    }
    std::sort(tetrads.begin(), tetrads.end());
    const auto under = underlined_ids();
    std::vector<Basis> out;
    for (std::size_t i = 0; i < tetrads.size(); ++i) {
      int id = static_cast<int>(i) + 1;
      out.push_back({id, tetrads[i], std::find(under.begin(), under.end(), id) != under.end()});
    }
    return out;
  }();
  return bases;
}

std::optional<int> find_basis(std::array<int, 4> members) {
  std::sort(members.begin(), members.end());
  for (const auto& b : enumerate_bases())
    if (b.members == members) return b.id;
  return std::nullopt;
}

bool underlined_partition_check(const std::vector<int>& ids) {
  const auto& bases = enumerate_bases();
  std::vector<int> hits(40, 0);
  for (int id : ids) {
    if (id < 1 || id > 40) return false;
    for (int r : bases[id - 1].members) ++hits[r];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::size_t CliqueReport::count(int size) const {
  auto it = by_size.find(size);
  return it == by_size.end() ? 0 : it->second.size();
}

CliqueReport max_nonorthogonal_cliques() {
  CliqueReport rep;
  for (auto c : orthogonality_graph().complement().maximal_cliques()) {
    auto m = mask_members(c);
    rep.max_size = std::max(rep.max_size, static_cast<int>(m.size()));
    rep.by_size[static_cast<int>(m.size())].push_back(std::move(m));
  }
  for (auto& [size, list] : rep.by_size) std::sort(list.begin(), list.end());
  return rep;
}

std::vector<int> example_seven_clique() {
  // phi^0_0, phi^1_1, phi^1_4, phi^1_7, phi^3_2, phi^3_5, phi^3_8
  return {0, 11, 14, 17, 32, 35, 38};
}

std::vector<int> example_four_clique() {
  // phi^0_0, phi^2_2, phi^2_5, phi^2_8
  return {0, 22, 25, 28};
}

TransitivityReport verify_clique_transitivity(const std::vector<std::vector<int>>& perms) {
  const auto rep = max_nonorthogonal_cliques();
  auto as_set = [](std::vector<std::vector<int>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  TransitivityReport out;
  auto seven = as_set(set_orbit(perms, example_seven_clique()));
  auto four = as_set(set_orbit(perms, example_four_clique()));
  out.seven_orbit = seven.size();
  out.four_orbit = four.size();
  out.seven_transitive = rep.by_size.count(7) && seven == rep.by_size.at(7);
  out.four_transitive = rep.by_size.count(4) && four == rep.by_size.at(4);
  return out;
}

// --- exactly-one search ------------------------------------------------------

namespace {

class Search {
 public:
  Search(int num_vars, const std::vector<Constraint>& cons, bool count_all)
      : cons_(cons), count_all_(count_all), value_(static_cast<std::size_t>(num_vars), -1),
        var_cons_(static_cast<std::size_t>(num_vars)) {
    for (std::size_t c = 0; c < cons_.size(); ++c)
      for (int v : cons_[c].vars) {
        if (v < 0 || v >= num_vars) throw std::out_of_range("constraint variable out of range");
        var_cons_[v].push_back(static_cast<int>(c));
        in_instance_.insert(v);
      }
  }

  SearchResult run() {
    dfs();
    return std::move(result_);
  }

 private:
  // Returns false on conflict.  Trail records assigned variables for undo.
  bool set_one(int v, std::vector<int>& trail) {
    if (value_[v] == 0) return false;
    if (value_[v] == 1) return true;
    value_[v] = 1;
    trail.push_back(v);
    for (int c : var_cons_[v]) {
      for (int u : cons_[c].vars) {
        if (u == v) continue;
        if (value_[u] == 1) return false;
        if (value_[u] == -1) {
          value_[u] = 0;
          trail.push_back(u);
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int v : trail) value_[v] = -1;
    trail.clear();
  }

  void dfs() {
    ++result_.nodes;
    // Pick the open exactly-one constraint with the fewest candidates.
    int best = -1;
    std::size_t best_open = SIZE_MAX;
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      if (cons_[c].kind != Constraint::Kind::exactly_one) continue;
      bool done = false;
      std::size_t open = 0;
      for (int v : cons_[c].vars) {
        if (value_[v] == 1) done = true;
        if (value_[v] == -1) ++open;
      }
      if (done) continue;
      if (open == 0) return;  // every member zeroed
      if (open < best_open) {
        best_open = open;
        best = static_cast<int>(c);
      }
    }
    if (best < 0) {
      record_solution();
      return;
    }
    std::vector<int> open_vars;
    for (int v : cons_[best].vars)
      if (value_[v] == -1) open_vars.push_back(v);
    for (int v : open_vars) {
      std::vector<int> trail;
      if (set_one(v, trail)) dfs();
      undo(trail);
      if (result_.satisfiable && !count_all_) return;
    }
  }

  void record_solution() {
    ++result_.solutions;
    if (!result_.satisfiable) {
      result_.satisfiable = true;
      std::vector<int> a(value_.size(), -1);
      for (int v : in_instance_) a[v] = value_[v] == 1 ? 1 : 0;
      result_.assignment = std::move(a);
    }
  }

  const std::vector<Constraint>& cons_;
  bool count_all_;
  std::vector<int> value_;
  std::vector<std::vector<int>> var_cons_;
  std::set<int> in_instance_;
  SearchResult result_;
};

}  // namespace

SearchResult solve_exactly_one(int num_vars, const std::vector<Constraint>& constraints, bool count_all) {
  SearchResult r = Search(num_vars, constraints, count_all).run();
  if (!count_all && r.satisfiable) r.solutions = 1;
  return r;
}

std::vector<Constraint> ks_constraints(const std::vector<int>& basis_ids) {
  const auto& bases = enumerate_bases();
  std::vector<Constraint> out;
  auto add = [&](const Basis& b) {
    out.push_back({Constraint::Kind::exactly_one, {b.members.begin(), b.members.end()}});
  };
  if (basis_ids.empty()) {
    for (const auto& b : bases) add(b);
  } else {
    for (int id : basis_ids) add(bases.at(static_cast<std::size_t>(id - 1)));
  }
  return out;
}

SearchResult ks_colorability() { return solve_exactly_one(40, ks_constraints(), false); }

SearchResult underlined_with_orthogonality() {
  auto cons = ks_constraints(underlined_ids());
  for (const auto& b : enumerate_bases()) {
    cons.push_back({Constraint::Kind::at_most_one, {b.members.begin(), b.members.end()}});
  }
  return solve_exactly_one(40, cons, false);
}

std::string dimacs_export() {
  const auto& bases = enumerate_bases();
  const auto& cfg = Configuration::get();
  std::ostringstream os;
  os << "c exactly-one-per-basis instance over the 40-ray configuration\n";
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    os << "c var " << i + 1 << " = phi" << cfg.ray(static_cast<int>(i)).index()->label() << "\n";
  }
  os << "p cnf " << cfg.size() << " " << bases.size() * 7 << "\n";
  for (const auto& b : bases) {
    for (int m : b.members) os << m + 1 << " ";
    os << "0\n";
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) os << -(b.members[i] + 1) << " " << -(b.members[j] + 1) << " 0\n";
  }
  return os.str();
}

bool spans_projective_line(const std::vector<int>& rays) {
  const auto& cfg = Configuration::get();
  std::vector<Vec4> rows;
  for (int r : rays) rows.push_back(cfg.ray(r).coords());
  return rank(rows) == 2;
}

}  // namespace witting
