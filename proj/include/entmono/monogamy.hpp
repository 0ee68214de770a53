#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entmono/measures.hpp"
#include "entmono/qstate.hpp"

namespace entmono {

/// Which parameter constraint set applies to a set of bound parameters.
enum class ParamMode {
  Qubit,  // k >= 1, omega >= 1, eta >= 1, 0 <= alpha <= eta/2; exponent alpha/eta
  Qudit,  // 0 < k <= 1 (so k^omega <= k), omega >= 1, alpha >= 2; exponent alpha/2
};

/// Scalar knobs of the monogamy bounds.
struct BoundParams {
  double k = 1.0;
  double omega = 1.0;
  double alpha = 0.5;
  double eta = 1.0;
  ParamMode mode = ParamMode::Qubit;

  void validate() const;
  /// The working exponent x: alpha/eta in qubit mode, alpha/2 in qudit mode.
  double exponent() const { return mode == ParamMode::Qubit ? alpha / eta : alpha / 2.0; }
};

/// Which pairwise measure dominates in the tripartite hypothesis.
enum class TripartiteRegime { ACLarge, ABLarge };

/// Regime selector for the n-partite bounds. The tag picks the formula
/// shape; Split carries the paper-style index m with 2 <= m <= n-2.
struct NPartiteRegime {
  enum class Kind { AllSmall, AllLarge, Split };
  Kind kind = Kind::AllSmall;
  int split_m = 2;

  static NPartiteRegime all_small() { return {Kind::AllSmall, 0}; }
  static NPartiteRegime all_large() { return {Kind::AllLarge, 0}; }
  static NPartiteRegime split(int m) { return {Kind::Split, m}; }
};

/// x**e with 0**0 defined as 1 (the alpha -> 0 limit used throughout).
double powx(double base, double expo);

/// mu = ((1 + k^omega)^x - (1/2)^x) / k^(omega x) for the working
/// exponent x of p.
double mu_coeff(double k, double omega, double x);
double mu_coeff(const BoundParams& p);

/// Right-hand side (1/2)^x + mu t^x of the scalar power-split inequality
/// (1 + t)^x >= (1/2)^x + mu t^x. Valid in two regimes:
///   (a) t >= k^omega >= k >= 1, omega >= 1, 0 <= x <= 1/2
///   (b) 0 <= t <= k^omega <= k <= 1, omega >= 1, x >= 1
/// Throws if (t, k, omega, x) lies outside both.
double lemma1_rhs(double t, const BoundParams& p);

/// Right-hand side (1/2)^(alpha/eta) fx + mu fy of the measure split
/// f^alpha(sqrt(x^2+y^2)) >= ... . Inputs are f^alpha values already
/// raised to the power alpha; the caller is responsible for the regime
/// condition f^eta(y) >= k^omega f^eta(x) (see condition_check_tripartite).
double lemma2_rhs(double fx_alpha, double fy_alpha, const BoundParams& p);

/// Tripartite lower bound on M^alpha(A1|A2A3) from the unexponentiated
/// pairwise measures. ACLarge puts the mu weight on m_ac, ABLarge on m_ab.
double theorem1_bound(double m_ab, double m_ac, const BoundParams& p, TripartiteRegime regime);

/// The tightened bound m next to the three comparison bounds, all under
/// the regime M^eta(A1A3) >= k^omega M^eta(A1A2):
///   m1 = m_ab^a + m_ac^a
///   m2 = (1/2)^x m_ab^a + ((1+k)^x - (1/2)^x)/k^x m_ac^a
///   m3 = m_ab^a + ((1+k^omega)^x - 1)/k^(omega x) m_ac^a
/// with x = alpha/eta. Under that regime m >= m2 and m >= m3; the gap to
/// m1 is reported but carries no sign guarantee.
struct Remark2Bounds {
  double m = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
};
Remark2Bounds remark2_bounds(double m_ab, double m_ac, const BoundParams& p);

/// Coefficients of the n-partite weighted sums, one per pairwise term
/// (A1A2 ... A1An), for the requested regime shape.
std::vector<double> regime_coefficients(int n_pairs, double x, double mu,
                                        const NPartiteRegime& regime);

/// n-partite lower bound on M^alpha(A1|A2...An) from the pairwise
/// measures (M_{A1A2}, ..., M_{A1An}), unexponentiated. The regime
/// hypotheses involve measures of mixed multi-party bipartitions and are
/// the caller's responsibility.
double theorem2_bound(std::span<const double> pairwise, const BoundParams& p,
                      const NPartiteRegime& regime);

/// Which tripartite hypothesis holds: ACLarge if m_ac^eta >= k^omega
/// m_ab^eta (checked first, so ties resolve to ACLarge), ABLarge for the
/// mirror, nullopt if neither. Comparisons carry a small slack toward
/// acceptance because the boundary is the equality case of the bound.
std::optional<TripartiteRegime> condition_check_tripartite(double m_ab, double m_ac,
                                                           const BoundParams& p);

/// Squared-concurrence monogamy check for a pure 3-qubit state:
/// lhs = C^2(A1|A2A3), rhs = C^2(A1A2) + C^2(A1A3), margin = lhs - rhs.
struct CkwResult {
  double lhs = 0.0, rhs = 0.0, margin = 0.0;
};
CkwResult verify_ckw(const StateVector& psi);

}  // namespace entmono
