#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace witting {

/// Simple graph on at most 64 vertices, adjacency as bitmasks.
class Graph {
 public:
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n), 0) {}

  int size() const { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint64_t neighbours(int v) const { return adj_[v]; }
  int degree(int v) const;
  int edge_count() const;
  Graph complement() const;

  /// All maximal cliques (pivoting Bron-Kerbosch), each as a vertex mask.
  std::vector<std::uint64_t> maximal_cliques() const;

 private:
  std::vector<std::uint64_t> adj_;
};

std::vector<int> mask_members(std::uint64_t mask);

/// Kochen-Specker graph: configuration rays joined when orthogonal.
Graph orthogonality_graph();

struct Basis {
  int id = 0;                    ///< 1..40
  std::array<int, 4> members{};  ///< flat ray indices, ascending
  bool underlined = false;
};

/// Maximal 4-cliques of the orthogonality graph, sorted lexicographically by
/// (l, n) of their members and numbered from 1.  The underlined flag marks
/// the ten tetrads of the published partition {4,5,10,12,16,18,20,24,26,31}.
/// Throws std::logic_error unless there are exactly 40, all of size 4.
const std::vector<Basis>& enumerate_bases();
/// Id of the basis with exactly these members, if any.
std::optional<int> find_basis(std::array<int, 4> members);

/// True iff the bases named by `ids` are pairwise disjoint and cover all 40 rays.
bool underlined_partition_check(const std::vector<int>& ids);
std::vector<int> underlined_ids();

struct CliqueReport {
  int max_size = 0;
  std::map<int, std::vector<std::vector<int>>> by_size;  ///< maximal cliques grouped by size

  std::size_t count(int size) const;
};

/// Maximal cliques of the non-orthogonality (complement) graph.
CliqueReport max_nonorthogonal_cliques();

/// The published representatives of the two clique families.
std::vector<int> example_seven_clique();
std::vector<int> example_four_clique();

/// Orbits of the two example cliques under the ray permutations `perms`
/// compared with the full families.
struct TransitivityReport {
  std::size_t seven_orbit = 0;
  std::size_t four_orbit = 0;
  bool seven_transitive = false;
  bool four_transitive = false;
};
TransitivityReport verify_clique_transitivity(const std::vector<std::vector<int>>& perms);

// --- exactly-one search ------------------------------------------------------

struct Constraint {
  enum class Kind { exactly_one, at_most_one };
  Kind kind = Kind::exactly_one;
  std::vector<int> vars;
};

struct SearchResult {
  bool satisfiable = false;
  std::optional<std::vector<int>> assignment;  ///< first solution; -1 = not in the instance
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;  ///< only filled when counting
};

/// Depth-first search over 0/1 assignments.  Branches on the exactly-one
/// constraint with the fewest open candidates; setting a variable to 1 zeroes
/// every variable sharing a constraint with it.  Variables that only appear
/// in at-most-one constraints are left at 0.
SearchResult solve_exactly_one(int num_vars, const std::vector<Constraint>& constraints, bool count_all);

/// Exactly-one over the given bases (all 40 by default).
std::vector<Constraint> ks_constraints(const std::vector<int>& basis_ids = {});
SearchResult ks_colorability();

/// Exactly-one on the ten underlined bases plus at-most-one on every basis.
SearchResult underlined_with_orthogonality();

/// DIMACS CNF for the exactly-one instance over all 40 bases.
std::string dimacs_export();

/// True iff the four rays span a 2-dimensional subspace.
bool spans_projective_line(const std::vector<int>& rays);

}  // namespace witting
