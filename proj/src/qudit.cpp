#include "entmono/qudit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace entmono {

namespace {
constexpr double kConditionSlack = tol::algebraic;

long substate_count(const DimProfile& profile) {
  long count = 1;
  for (int d : profile.dims()) count *= static_cast<long>(d) * (d - 1) / 2;
  return count;
}

double prefactor_base(const DimProfile& profile) {
  double prod = 1.0;
  for (int d : profile.dims()) prod *= static_cast<double>(d - 1);
  return 1.0 / prod;
}

/// Flat indices of the 2^n selected basis states, in inherited order.
std::vector<long> selected_indices(const DimProfile& profile, const SubstateIndex& idx) {
  const int n = profile.parties();
  const long m = 1L << n;
  std::vector<long> flat(static_cast<std::size_t>(m));
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (long pos = 0; pos < m; ++pos) {
    for (int party = 0; party < n; ++party) {
      const int bit = static_cast<int>((pos >> (n - 1 - party)) & 1L);
      labels[static_cast<std::size_t>(party)] =
          idx.pairs[static_cast<std::size_t>(party)][static_cast<std::size_t>(bit)];
    }
    flat[static_cast<std::size_t>(pos)] = profile.flatten(labels);
  }
  return flat;
}

DimProfile all_qubit_profile(int parties) {
  return DimProfile(std::vector<int>(static_cast<std::size_t>(parties), 2));
}

}  // namespace

void SubstateIndex::validate(const DimProfile& profile) const {
  if (static_cast<int>(pairs.size()) != profile.parties())
    throw std::invalid_argument("SubstateIndex: party count mismatch");
  for (int party = 0; party < profile.parties(); ++party) {
    const auto& pr = pairs[static_cast<std::size_t>(party)];
    if (pr[0] < 0 || pr[1] >= profile.dim(party) || pr[0] >= pr[1])
      throw std::invalid_argument("SubstateIndex: labels must satisfy 0 <= lo < hi < d");
  }
}

std::string SubstateIndex::to_string() const {
  std::ostringstream os;
  for (const auto& pr : pairs) os << '(' << pr[0] << ',' << pr[1] << ')';
  return os.str();
}

std::vector<SubstateIndex> enumerate_substates(const DimProfile& profile) {
  const int n = profile.parties();
  std::vector<std::vector<std::array<int, 2>>> per_party(static_cast<std::size_t>(n));
  for (int party = 0; party < n; ++party) {
    for (int lo = 0; lo < profile.dim(party); ++lo)
      for (int hi = lo + 1; hi < profile.dim(party); ++hi)
        per_party[static_cast<std::size_t>(party)].push_back({lo, hi});
  }

  std::vector<SubstateIndex> out;
  out.reserve(static_cast<std::size_t>(substate_count(profile)));
  SubstateIndex current;
  current.pairs.resize(static_cast<std::size_t>(n));
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int party = 0; party < n; ++party)
      current.pairs[static_cast<std::size_t>(party)] =
          per_party[static_cast<std::size_t>(party)][pos[static_cast<std::size_t>(party)]];
    out.push_back(current);
    int party = n - 1;
    while (party >= 0) {
      if (++pos[static_cast<std::size_t>(party)] <
          per_party[static_cast<std::size_t>(party)].size())
        break;
      pos[static_cast<std::size_t>(party)] = 0;
      --party;
    }
    if (party < 0) break;
  }
  return out;
}

StateVector project_substate_pure(const StateVector& psi, const SubstateIndex& idx) {
  idx.validate(psi.profile);
  const auto flat = selected_indices(psi.profile, idx);
  Vector sub(static_cast<long>(flat.size()));
  for (std::size_t i = 0; i < flat.size(); ++i) sub(static_cast<long>(i)) = psi.amplitudes(flat[i]);
  return StateVector(std::move(sub), all_qubit_profile(psi.profile.parties()), false);
}

DensityMatrix project_substate_mixed(const DensityMatrix& rho, const SubstateIndex& idx) {
  idx.validate(rho.profile);
  const auto flat = selected_indices(rho.profile, idx);
  const long m = static_cast<long>(flat.size());
  Matrix sub(m, m);
  for (long r = 0; r < m; ++r)
    for (long c = 0; c < m; ++c)
      sub(r, c) = rho.entries(flat[static_cast<std::size_t>(r)], flat[static_cast<std::size_t>(c)]);
  return DensityMatrix(std::move(sub), all_qubit_profile(rho.profile.parties()), false);
}

double pairsum_concurrence_sq(const Vector& amplitudes, int d_first) {
  if (d_first < 2 || amplitudes.size() % d_first != 0)
    throw std::invalid_argument("pairsum_concurrence_sq: bad first-party dimension");
  const long rest = amplitudes.size() / d_first;
  // Full ordered pair sum = 4 times the sum over index combinations.
  double sum = 0.0;
  for (long a = 0; a < d_first; ++a)
    for (long e = a + 1; e < d_first; ++e)
      for (long b = 0; b < rest; ++b)
        for (long f = b + 1; f < rest; ++f)
          sum += std::norm(amplitudes(a * rest + b) * amplitudes(e * rest + f) -
                           amplitudes(e * rest + b) * amplitudes(a * rest + f));
  return 4.0 * sum;
}

double concurrence_pure_pairsum(const StateVector& psi) {
  if (std::abs(psi.norm2() - 1.0) > tol::structural)
    throw std::invalid_argument("concurrence_pure_pairsum: state is not normalized");
  return std::sqrt(pairsum_concurrence_sq(psi.amplitudes, psi.profile.dim(0)));
}

double substate_pair_concurrence(const DensityMatrix& rho, const SubstateIndex& idx, int partner) {
  if (partner < 1 || partner >= rho.profile.parties())
    throw std::invalid_argument("substate_pair_concurrence: partner must pair with party 0");
  const DensityMatrix sub = project_substate_mixed(rho, idx);
  return concurrence_wootters(partial_trace(sub, {0, partner}));
}

double lemma3_rhs_pure(const StateVector& psi) {
  if (psi.profile.parties() != 3)
    throw std::invalid_argument("lemma3_rhs_pure: tripartite profile required");
  if (std::abs(psi.norm2() - 1.0) > tol::structural)
    throw std::invalid_argument("lemma3_rhs_pure: state is not normalized");
  double sum = 0.0;
  for (const auto& idx : enumerate_substates(psi.profile)) {
    const StateVector sub = project_substate_pure(psi, idx);
    sum += pairsum_concurrence_sq(sub.amplitudes, 2);
  }
  return prefactor_base(psi.profile) * sum;
}

QuditBoundReport theorem3_bound(const DensityMatrix& rho, const BoundParams& p) {
  if (rho.profile.parties() != 3)
    throw std::invalid_argument("theorem3_bound: tripartite profile required");
  if (p.mode != ParamMode::Qudit)
    throw std::invalid_argument("theorem3_bound: qudit-mode parameters required");
  p.validate();

  const double x = p.alpha / 2.0;
  const double kw = powx(p.k, p.omega);
  const double half_x = powx(0.5, x);
  const double mu = mu_coeff(p.k, p.omega, x);

  QuditBoundReport rep;
  rep.prefactor = powx(prefactor_base(rho.profile), x);
  double sum = 0.0;
  for (const auto& idx : enumerate_substates(rho.profile)) {
    SubstateContribution contrib;
    contrib.index = idx;
    const double c_ab = substate_pair_concurrence(rho, idx, 1);
    const double c_ac = substate_pair_concurrence(rho, idx, 2);
    contrib.pair_concurrence = {c_ab, c_ac};

    const bool ab_major = c_ac * c_ac <= kw * c_ab * c_ab + kConditionSlack;
    const bool ac_major = c_ab * c_ab <= kw * c_ac * c_ac + kConditionSlack;
    if (ab_major) {
      contrib.branch = 0;
      contrib.value = half_x * powx(c_ab, p.alpha) + mu * powx(c_ac, p.alpha);
    } else if (ac_major) {
      contrib.branch = 1;
      contrib.value = half_x * powx(c_ac, p.alpha) + mu * powx(c_ab, p.alpha);
    }
    contrib.condition_ok = ab_major || ac_major;
    contrib.condition_ok ? ++rep.satisfied : ++rep.flagged;
    sum += contrib.value;
    rep.contributions.push_back(std::move(contrib));
  }
  rep.bound = rep.prefactor * sum;
  return rep;
}

QuditBoundReport theorem4_bound(const DensityMatrix& rho, const BoundParams& p,
                                const NPartiteRegime& regime) {
  const int n = rho.profile.parties();
  if (n < 3) throw std::invalid_argument("theorem4_bound: at least three parties required");
  if (regime.kind == NPartiteRegime::Kind::Split && (n < 4 || regime.split_m < 2 ||
                                                     regime.split_m > n - 2))
    throw std::invalid_argument("theorem4_bound: split index requires 2 <= m <= n-2");
  if (p.mode != ParamMode::Qudit)
    throw std::invalid_argument("theorem4_bound: qudit-mode parameters required");
  p.validate();

  const double x = p.alpha / 2.0;
  const double kw = powx(p.k, p.omega);
  const auto coeff = regime_coefficients(n - 1, x, mu_coeff(p.k, p.omega, x), regime);

  QuditBoundReport rep;
  rep.prefactor = powx(prefactor_base(rho.profile), x);
  double sum = 0.0;
  for (const auto& idx : enumerate_substates(rho.profile)) {
    SubstateContribution contrib;
    contrib.index = idx;
    std::vector<double> c2(static_cast<std::size_t>(n - 1));
    for (int j = 1; j < n; ++j) {
      const double c = substate_pair_concurrence(rho, idx, j);
      contrib.pair_concurrence.push_back(c);
      c2[static_cast<std::size_t>(j - 1)] = c * c;
    }

    // Suffix sums of squared concurrences drive the hypothesis chain:
    // level i (partner j = i+2) compares c2[i] against tail_i = sum of
    // c2 past it. The chain runs over partners 2..n-1.
    bool ok = true;
    double tail = c2[static_cast<std::size_t>(n - 2)];
    for (int i = n - 3; i >= 0 && ok; --i) {
      const bool pair_major = kw * c2[static_cast<std::size_t>(i)] >= tail - kConditionSlack;
      const bool pair_minor = c2[static_cast<std::size_t>(i)] <= kw * tail + kConditionSlack;
      const int partner = i + 2;
      switch (regime.kind) {
        case NPartiteRegime::Kind::AllSmall:
          ok = pair_major;
          break;
        case NPartiteRegime::Kind::AllLarge:
          ok = pair_minor;
          break;
        case NPartiteRegime::Kind::Split:
          ok = partner <= regime.split_m ? pair_major : pair_minor;
          break;
      }
      tail += c2[static_cast<std::size_t>(i)];
    }

    contrib.condition_ok = ok;
    if (ok) {
      ++rep.satisfied;
      for (int i = 0; i < n - 1; ++i)
        contrib.value += coeff[static_cast<std::size_t>(i)] *
                         powx(contrib.pair_concurrence[static_cast<std::size_t>(i)], p.alpha);
    } else {
      ++rep.flagged;
    }
    sum += contrib.value;
    rep.contributions.push_back(std::move(contrib));
  }
  rep.bound = rep.prefactor * sum;
  return rep;
}

}  // namespace entmono
