#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "witting/contextuality.hpp"
#include "witting/group.hpp"
#include "witting/state.hpp"

namespace witting {

/// Exact outcome probabilities; entries sum to exactly 1.
struct OutcomeDistribution {
  struct Entry {
    std::string label;
    Rational probability;
  };
  std::vector<Entry> entries;

  Rational total() const;
  bool normalized() const { return total() == Rational(1); }
};

/// A unitary in W whose k-th column spans the k-th member of the basis
/// (members in ascending flat order).  Among the candidates the one whose
/// column phases are smallest in the order 1, w, wb, -1, -w, -wb wins; for
/// the computational basis this is the identity.
const GroupElement& basis_unitary(int basis_id);

struct PairMeasurement {
  int basis1 = 0;
  int basis2 = 0;
  std::array<int, 4> rays1{};
  std::array<int, 4> rays2{};
  /// prob[i][k]: first side finds rays1[i], second side finds rays2[k].
  std::array<std::array<Rational, 4>, 4> prob{};

  /// Labels "phiXX,phiYY" in row-major order.
  OutcomeDistribution distribution() const;
};

/// Joint measurement of basis1 on the first ququart and basis2 on the second.
PairMeasurement measure_pair(const BipartiteState& state, int basis1, int basis2);

/// Controlled-NOT on a qubit ancilla conditioned on the projector onto phi:
/// CM = P (x) X + (1 - P) (x) 1, an 8x8 matrix indexed by 2*s + a.
struct Matrix8 {
  std::array<Eisenstein, 64> e{};
  Eisenstein& operator()(int r, int c) { return e[8 * r + c]; }
  const Eisenstein& operator()(int r, int c) const { return e[8 * r + c]; }
  friend bool operator==(const Matrix8&, const Matrix8&) = default;
};

Matrix8 cm_operator(const Vec4& phi);
Matrix8 toffoli();
bool is_unitary(const Matrix8& m);

struct SequenceBranch {
  std::vector<int> ancilla;  ///< ancilla readout after each CM stage
  std::array<Eisenstein, 16> amplitudes{};  ///< unnormalized post-measurement state
  Rational probability;
};

/// Applies CM(phi) for each phi in turn to one side (1 or 2), reading and
/// resetting the ancilla after every stage.  Branches with zero amplitude are
/// dropped.  The phis must be pairwise orthogonal.
std::vector<SequenceBranch> contextual_sequence(const BipartiteState& state, int side,
                                                const std::vector<Vec4>& phis);

struct SampleResult {
  std::string algorithm;  ///< PRNG and reduction used
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;  ///< parallel to the distribution entries
};

/// Draws n outcomes.  Exact: uniform integers in [0, L) with L the common
/// denominator, obtained by rejection from 64-bit words.
SampleResult sample_outcomes(const OutcomeDistribution& dist, std::uint64_t seed, std::uint64_t n);

}  // namespace witting
