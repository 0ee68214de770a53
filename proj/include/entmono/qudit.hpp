#pragma once

#include <array>
#include <vector>

#include "entmono/monogamy.hpp"
#include "entmono/qstate.hpp"

namespace entmono {

/// One all-qubit substate selection: an ordered pair of basis labels
/// (lo < hi, 0-based) per party.
struct SubstateIndex {
  std::vector<std::array<int, 2>> pairs;

  void validate(const DimProfile& profile) const;
  std::string to_string() const;  // e.g. "(0,1)(0,2)(1,2)"
};

/// All Prod_i C(d_i, 2) substate selections, lexicographically ordered
/// (party 0 outermost, label pairs (0,1) < (0,2) < ... < (d-2,d-1)).
std::vector<SubstateIndex> enumerate_substates(const DimProfile& profile);

/// Restriction of the amplitudes to the selected labels, order inherited.
/// The result is an unnormalized all-qubit state with squared norm <= 1
/// for normalized input.
StateVector project_substate_pure(const StateVector& psi, const SubstateIndex& idx);

/// Principal submatrix on the selected index set: an unnormalized
/// all-qubit mixed state, Hermitian PSD with trace <= 1 for normalized
/// input.
DensityMatrix project_substate_mixed(const DensityMatrix& rho, const SubstateIndex& idx);

/// Squared concurrence of an amplitude vector across first-party | rest,
/// evaluated as the sum of squared 2x2 minors of the d1 x (rest) matrix.
/// No normalization requirement; degree-4 homogeneous in the amplitudes.
double pairsum_concurrence_sq(const Vector& amplitudes, int d_first);

/// Concurrence of a normalized pure state across first party | rest via
/// the minor pair-sum. Agrees with concurrence_pure on the same cut; the
/// two are kept as independent evaluation routes.
double concurrence_pure_pairsum(const StateVector& psi);

/// Wootters concurrence of the two-qubit reduction (party 0, partner) of
/// the projected substate. Degree-1 homogeneous in rho.
double substate_pair_concurrence(const DensityMatrix& rho, const SubstateIndex& idx, int partner);

/// Substate decomposition lower bound on C^2(A1|A2A3) of a pure
/// tripartite state: the prefactor-weighted sum of squared substate
/// concurrences, each from the pair-sum on the unnormalized subvector.
/// Guaranteed <= C^2; exact equality for an all-qubit profile.
double lemma3_rhs_pure(const StateVector& psi);

struct SubstateContribution {
  SubstateIndex index;
  std::vector<double> pair_concurrence;  // (A1A2, ..., A1An) of the substate
  bool condition_ok = false;             // some hypothesis chain holds
  int branch = -1;                       // tripartite: 0 = A1A2-major, 1 = A1A3-major
  double value = 0.0;                    // weighted sum before the prefactor
};

struct QuditBoundReport {
  double bound = 0.0;
  double prefactor = 0.0;  // (Prod (d_i - 1))^(-alpha/2)
  std::vector<SubstateContribution> contributions;
  int satisfied = 0;  // substates whose hypothesis held
  int flagged = 0;    // substates contributing 0
};

/// Tripartite qudit concurrence bound: per substate the hypothesis
/// C^2(small pair) <= k^omega C^2(large pair) is checked both ways and
/// the matching branch applied; substates satisfying neither contribute
/// 0, which only lowers the bound.
QuditBoundReport theorem3_bound(const DensityMatrix& rho, const BoundParams& p);

/// n-partite qudit concurrence bound. The regime tag selects the formula
/// shape (as in theorem2_bound); its hypothesis chain, built from the
/// suffix sums of squared pairwise substate concurrences, is checked per
/// substate and non-satisfying substates contribute 0.
QuditBoundReport theorem4_bound(const DensityMatrix& rho, const BoundParams& p,
                                const NPartiteRegime& regime);

}  // namespace entmono
