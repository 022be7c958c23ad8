#pragma once

#include <optional>
#include <vector>

#include "witting/group.hpp"
#include "witting/jmatrix.hpp"
#include "witting/state.hpp"

namespace witting {

struct EntangledState {
  JMatrix j;
  BipartiteState state;  ///< amplitudes J_jk, norm_sq = Tr(J J^dagger)
  Rational mu_sq;        ///< squared normalization 1 / Tr(J J^dagger)
};

/// Omega_J = mu_J sum_jk J_jk |j>|k>.  Throws for J = 0.
EntangledState entangled_state(const JMatrix& j);

enum class Invariance { invariant, anti_invariant, neither };
enum class InvarianceMode { strict, signed_ };

/// strict: A J A^T == J.  signed_: additionally reports A J A^T == -J.
Invariance check_invariance(const GroupElement& a, const JMatrix& j, InvarianceMode mode);

/// The unique B with (A (x) B) Omega_J = Omega_J, i.e. A J B^T = J, which
/// gives B = J^T conj(A) (J^T)^-1 for unitary A.  Throws for singular J.
GroupElement partner_transform(const GroupElement& a, const JMatrix& j);

/// canonicalize(J conj(psi)).
Ray j_opposite(const Ray& r, const JMatrix& j);
/// Flat index of the J-opposite configuration ray; throws std::logic_error
/// if the image leaves the configuration.
int j_opposite_index(int flat, const JMatrix& j);

/// opp[i] = j_opposite_index(i); throws std::logic_error if not an involution.
std::vector<int> opposite_table(const JMatrix& j);

struct BasisPairing {
  std::vector<int> partner;  ///< partner[id - 1] = id of the paired basis
  std::vector<int> fixed;    ///< ids paired with themselves, ascending
};

/// Pairs each basis with the basis formed by the J-opposites of its members.
/// Throws std::logic_error if an image is not one of the 40 bases.
BasisPairing opposite_basis_pairing(const JMatrix& j);

struct ConjugatedJ {
  GroupElement s;
  Matrix4 j_s;                   ///< S J S^T
  bool unit_entries = false;     ///< all entries in {0, +1, -1}
  std::optional<JName> matches;  ///< named J equal to +-j_s
};

/// J^S = S J S^T for each coset representative S of W_2H in W.
std::vector<ConjugatedJ> scan_conjugate_j(const std::vector<GroupElement>& coset_reps, const JMatrix& base);

}  // namespace witting
