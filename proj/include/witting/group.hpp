#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "witting/matrix.hpp"
#include "witting/rays.hpp"

namespace witting {

/// Group elements are exact 4x4 matrices; equality is entrywise.
using GroupElement = Matrix4;

/// Exact serialization of all 16 entries, "e00;e01;...;e33" in the Q(w)
/// text grammar.  Two elements are equal iff their keys are equal.
std::string canonical_key(const GroupElement& g);

class ClosureCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite set of matrices with O(1) membership, kept in insertion order.
class ElementSet {
 public:
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
  /// Returns false if g was already present.
  bool insert(GroupElement g);
  void reserve(std::size_t n);

 private:
  std::size_t probe(const GroupElement& g, std::size_t h) const;
  void grow();

  std::vector<GroupElement> elements_;
  std::vector<std::size_t> hashes_;
  std::vector<std::uint32_t> slots_;  // 0 = empty, else index + 1
};

class MatrixGroup {
 public:
  /// Breadth-first closure from the identity under left multiplication by
  /// the generators.  Throws ClosureCapExceeded past `cap` elements.
  static MatrixGroup closure(std::vector<GroupElement> generators, std::size_t cap);
  /// Wraps an explicit element list (assumed closed) with optional generators.
  static MatrixGroup from_elements(std::vector<GroupElement> elements,
                                   std::vector<GroupElement> generators = {});

  std::size_t order() const { return set_.size(); }
  const std::vector<GroupElement>& elements() const { return set_.elements(); }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const GroupElement& operator[](std::size_t i) const { return set_[i]; }
  std::optional<std::size_t> index_of(const GroupElement& g) const { return set_.index_of(g); }
  bool contains(const GroupElement& g) const { return set_.contains(g); }

 private:
  ElementSet set_;
  std::vector<GroupElement> generators_;
};

// --- generators ------------------------------------------------------------

/// Triflection R_k, k = 1..4 (each with R_k^3 = 1 and det = w).
GroupElement generator_R(int k);
/// r_k = conj(w) R_k, det 1.
GroupElement generator_r(int k);
/// Complex reflection 1 + (zeta - 1)|phi><phi|/<phi|phi>; zeta must be +-w^k.
GroupElement reflection(const Vec4& phi, const Eisenstein& zeta);
GroupElement reflection(const Ray& phi, const Eisenstein& zeta);
/// The three signed permutation matrices generating the 48-element subgroup.
std::vector<GroupElement> signed_permutation_generators();

// --- groups ----------------------------------------------------------------

/// The 51840-element group <r_1..r_4>; built once, shared.
const MatrixGroup& witting_group();
/// The 155520-element group <R_1..R_4>; built on every call.
MatrixGroup full_symmetry_group();

std::vector<GroupElement> center(const MatrixGroup& g);

struct NamedSubgroup {
  std::string name;
  std::size_t expected_order = 0;
  MatrixGroup group;
};

/// diagonal (27), signed_permutation (48), W_B (1920), W_H (720), W_2H (1440).
/// Throws std::logic_error if any order differs from the expected value.
std::vector<NamedSubgroup> special_subgroups();
MatrixGroup diagonal_subgroup();
MatrixGroup signed_permutation_subgroup();
MatrixGroup subgroup_WB();
MatrixGroup subgroup_WH();
MatrixGroup subgroup_W2H();

/// {S h S^-1 : h in H}.
MatrixGroup conjugate_subgroup(const GroupElement& s, const MatrixGroup& h);

/// Greedy left-coset representatives of H in G, in G's enumeration order.
std::vector<GroupElement> coset_representatives(const MatrixGroup& g, const MatrixGroup& h);

/// Smallest normal subgroup of <group_gens> containing x.
MatrixGroup normal_closure(const std::vector<GroupElement>& group_gens, const GroupElement& x);

/// Conjugacy class id for every element (classes numbered by first
/// appearance in enumeration order).
std::vector<int> conjugacy_classes(const MatrixGroup& g);

// --- action on the configuration -----------------------------------------

Ray act_on_ray(const GroupElement& g, const Ray& r);
/// perm[i] = flat index of g applied to ray i; throws std::logic_error if the
/// image leaves the configuration.
std::vector<int> ray_permutation(const GroupElement& g);

/// Orbit of a set of ray indices under the group generated by `perms`.
/// Sets are returned sorted, in discovery order.
std::vector<std::vector<int>> set_orbit(const std::vector<std::vector<int>>& perms,
                                        std::vector<int> start);

/// Sorted flat indices of the rays through the four columns of g.
std::array<int, 4> column_rays(const GroupElement& g);

}  // namespace witting
