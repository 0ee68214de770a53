#pragma once

#include <vector>

#include "entmono/qstate.hpp"

namespace entmono {

/// Which fidelity-based entanglement measure a computation refers to.
enum class MeasureKind { Bures, Geometric };

/// Split of the parties into a left set and its complement.
struct Bipartition {
  std::vector<int> left;

  /// Sorted complement of `left` in a profile with `parties` parties.
  std::vector<int> right(int parties) const;
  void validate(const DimProfile& profile) const;
};

/// Concurrence of a normalized pure state across a bipartition:
/// sqrt(2 (1 - tr rho_left^2)). Zero iff the state is a product across
/// the cut.
double concurrence_pure(const StateVector& psi, const Bipartition& cut);

/// Two-qubit concurrence, closed form: max(l1 - l2 - l3 - l4, 0) with l_i
/// the descending square roots of the eigenvalues of
/// rho (sy x sy) rho^* (sy x sy). Accepts unnormalized input and is
/// degree-1 homogeneous in rho, which is exactly what the substate
/// machinery needs.
double concurrence_wootters(const DensityMatrix& rho);

/// Bures measure as a function of concurrence:
/// f_B(c) = 2 - 2 sqrt((1 + sqrt(1 - c^2)) / 2), increasing on [0, 1].
double f_bures(double c);

/// Geometric measure as a function of concurrence:
/// f_G(c) = (1 - sqrt(1 - c^2)) / 2, increasing on [0, 1].
double f_geometric(double c);

double apply_f(MeasureKind kind, double c);

/// Exact measure value of a two-qubit (possibly mixed) state.
double measure_two_qubit(const DensityMatrix& rho, MeasureKind kind);

struct MeasureValue {
  double value = 0.0;
  /// True when the closed form is exact (the left side of the cut is a
  /// single dimension-2 party); otherwise the value is a lower bound.
  bool exact = false;
};

/// f_kind(concurrence_pure(psi, cut)) for a normalized pure state.
MeasureValue measure_pure_bipartite(const StateVector& psi, const Bipartition& cut,
                                    MeasureKind kind);

}  // namespace entmono
