#include "entmono/monogamy.hpp"

#include <cmath>
#include <stdexcept>

namespace entmono {

namespace {
// Boundary cases (t = k^omega, equal measures) are equality cases of the
// bounds, so regime membership is checked with slack toward acceptance.
constexpr double kConditionSlack = tol::algebraic;
}  // namespace

void BoundParams::validate() const {
  if (omega < 1.0) throw std::invalid_argument("BoundParams: omega must be >= 1");
  if (mode == ParamMode::Qubit) {
    if (k < 1.0) throw std::invalid_argument("BoundParams: qubit mode requires k >= 1");
    if (eta < 1.0) throw std::invalid_argument("BoundParams: qubit mode requires eta >= 1");
    if (alpha < 0.0 || alpha > eta / 2.0 + kConditionSlack)
      throw std::invalid_argument("BoundParams: qubit mode requires 0 <= alpha <= eta/2");
  } else {
    if (k <= 0.0 || k > 1.0)
      throw std::invalid_argument("BoundParams: qudit mode requires 0 < k <= 1");
    if (alpha < 2.0) throw std::invalid_argument("BoundParams: qudit mode requires alpha >= 2");
  }
}

double powx(double base, double expo) {
  if (base < 0.0) throw std::invalid_argument("powx: negative base");
  if (expo == 0.0) return 1.0;
  return std::pow(base, expo);
}

double mu_coeff(double k, double omega, double x) {
  const double kw = powx(k, omega);
  return (powx(1.0 + kw, x) - powx(0.5, x)) / powx(kw, x);
}

double mu_coeff(const BoundParams& p) { return mu_coeff(p.k, p.omega, p.exponent()); }

double lemma1_rhs(double t, const BoundParams& p) {
  const double x = p.alpha / p.eta;
  const double kw = powx(p.k, p.omega);
  const bool regime_a = p.k >= 1.0 && p.omega >= 1.0 && t >= kw - kConditionSlack && x >= 0.0 &&
                        x <= 0.5 + kConditionSlack;
  const bool regime_b = p.k > 0.0 && p.k <= 1.0 && p.omega >= 1.0 && t >= -kConditionSlack &&
                        t <= kw + kConditionSlack && x >= 1.0 - kConditionSlack;
  if (!regime_a && !regime_b)
    throw std::invalid_argument("lemma1_rhs: (t, k, omega, x) outside both validity regimes");
  return powx(0.5, x) + mu_coeff(p.k, p.omega, x) * powx(std::max(0.0, t), x);
}

double lemma2_rhs(double fx_alpha, double fy_alpha, const BoundParams& p) {
  if (fx_alpha < 0.0 || fy_alpha < 0.0)
    throw std::invalid_argument("lemma2_rhs: negative measure powers");
  const double x = p.exponent();
  return powx(0.5, x) * fx_alpha + mu_coeff(p) * fy_alpha;
}

double theorem1_bound(double m_ab, double m_ac, const BoundParams& p, TripartiteRegime regime) {
  if (p.mode != ParamMode::Qubit)
    throw std::invalid_argument("theorem1_bound: qubit-mode parameters required");
  p.validate();
  if (m_ab < 0.0 || m_ac < 0.0)
    throw std::invalid_argument("theorem1_bound: negative measure values");
  const double small = regime == TripartiteRegime::ACLarge ? m_ab : m_ac;
  const double large = regime == TripartiteRegime::ACLarge ? m_ac : m_ab;
  return lemma2_rhs(powx(small, p.alpha), powx(large, p.alpha), p);
}

Remark2Bounds remark2_bounds(double m_ab, double m_ac, const BoundParams& p) {
  p.validate();
  if (m_ab < 0.0 || m_ac < 0.0)
    throw std::invalid_argument("remark2_bounds: negative measure values");
  const double x = p.exponent();
  const double a = powx(m_ab, p.alpha);
  const double c = powx(m_ac, p.alpha);
  const double kw = powx(p.k, p.omega);

  Remark2Bounds out;
  out.m = theorem1_bound(m_ab, m_ac, p, TripartiteRegime::ACLarge);
  out.m1 = a + c;
  out.m2 = powx(0.5, x) * a + (powx(1.0 + p.k, x) - powx(0.5, x)) / powx(p.k, x) * c;
  out.m3 = a + (powx(1.0 + kw, x) - 1.0) / powx(kw, x) * c;
  return out;
}

std::vector<double> regime_coefficients(int n_pairs, double x, double mu,
                                        const NPartiteRegime& regime) {
  if (n_pairs < 2) throw std::invalid_argument("regime_coefficients: need at least two pairs");
  const double half_x = powx(0.5, x);
  std::vector<double> coeff(static_cast<std::size_t>(n_pairs), 0.0);
  const int last = n_pairs - 1;

  switch (regime.kind) {
    case NPartiteRegime::Kind::AllSmall:
      for (int i = 0; i < last; ++i) coeff[static_cast<std::size_t>(i)] = half_x * powx(mu, i);
      coeff[static_cast<std::size_t>(last)] = powx(mu, last);
      break;
    case NPartiteRegime::Kind::AllLarge:
      for (int i = 0; i < last; ++i) coeff[static_cast<std::size_t>(i)] = mu * powx(half_x, i);
      coeff[static_cast<std::size_t>(last)] = powx(half_x, last);
      break;
    case NPartiteRegime::Kind::Split: {
      // pairs are indexed by partner j = 2..n; position i = j - 2.
      const int n = n_pairs + 1;
      const int m = regime.split_m;
      if (n < 4 || m < 2 || m > n - 2)
        throw std::invalid_argument("regime_coefficients: split index requires 2 <= m <= n-2");
      for (int i = 0; i <= m - 2; ++i) coeff[static_cast<std::size_t>(i)] = half_x * powx(mu, i);
      for (int i = m - 1; i < last; ++i)
        coeff[static_cast<std::size_t>(i)] = powx(mu, m) * powx(half_x, i - (m - 1));
      coeff[static_cast<std::size_t>(last)] = powx(mu, m - 1) * powx(half_x, n - m - 1);
      break;
    }
  }
  return coeff;
}

double theorem2_bound(std::span<const double> pairwise, const BoundParams& p,
                      const NPartiteRegime& regime) {
  if (p.mode != ParamMode::Qubit)
    throw std::invalid_argument("theorem2_bound: qubit-mode parameters required");
  p.validate();
  if (pairwise.size() < 2)
    throw std::invalid_argument("theorem2_bound: need pairwise measures for at least A1A2, A1A3");
  for (double m : pairwise)
    if (m < 0.0) throw std::invalid_argument("theorem2_bound: negative measure values");
  const auto coeff =
      regime_coefficients(static_cast<int>(pairwise.size()), p.exponent(), mu_coeff(p), regime);
  double sum = 0.0;
  for (std::size_t i = 0; i < pairwise.size(); ++i) sum += coeff[i] * powx(pairwise[i], p.alpha);
  return sum;
}

std::optional<TripartiteRegime> condition_check_tripartite(double m_ab, double m_ac,
                                                           const BoundParams& p) {
  const double kw = powx(p.k, p.omega);
  const double a = powx(m_ab, p.eta);
  const double c = powx(m_ac, p.eta);
  if (c >= kw * a - kConditionSlack) return TripartiteRegime::ACLarge;
  if (a >= kw * c - kConditionSlack) return TripartiteRegime::ABLarge;
  return std::nullopt;
}

CkwResult verify_ckw(const StateVector& psi) {
  if (psi.profile.parties() != 3 || psi.profile.total() != 8)
    throw std::invalid_argument("verify_ckw: state is not a pure 3-qubit state");
  CkwResult out;
  const double c_cut = concurrence_pure(psi, Bipartition{{0}});
  out.lhs = c_cut * c_cut;
  const DensityMatrix rho = outer(psi);
  const double c_ab = concurrence_wootters(partial_trace(rho, {0, 1}));
  const double c_ac = concurrence_wootters(partial_trace(rho, {0, 2}));
  out.rhs = c_ab * c_ab + c_ac * c_ac;
  out.margin = out.lhs - out.rhs;
  return out;
}

}  // namespace entmono
