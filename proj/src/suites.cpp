#include "entmono/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "entmono/measures.hpp"
#include "entmono/monogamy.hpp"
#include "entmono/qudit.hpp"
#include "entmono/states.hpp"

namespace entmono {

namespace {

struct Accumulator {
  long checks = 0;
  long violations = 0;
  double max_violation = 0.0;

  // `excess` is how far the check overshoots its slack; <= 0 passes.
  void record(double excess) {
    ++checks;
    if (excess > 0.0) {
      ++violations;
      max_violation = std::max(max_violation, excess);
    }
  }
  void merge(const Accumulator& other) {
    checks += other.checks;
    violations += other.violations;
    max_violation = std::max(max_violation, other.max_violation);
  }
};

using SampleFn = std::function<void(long, Accumulator&)>;

SuiteReport run_sharded(const std::string& name, long samples, int workers,
                        const SampleFn& per_sample) {
  if (samples < 1) throw std::invalid_argument("run_suite: samples must be positive");
  workers = std::clamp(workers, 1, 64);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Accumulator> acc(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (long i = w; i < samples; i += workers) per_sample(i, acc[static_cast<std::size_t>(w)]);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SuiteReport rep;
  rep.suite = name;
  rep.samples = samples;
  for (const auto& a : acc) {
    rep.checks += a.checks;
    rep.violations += a.violations;
    rep.max_violation = std::max(rep.max_violation, a.max_violation);
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Parameter draws come from a stream disjoint from the state draws.
std::mt19937_64 param_engine(std::uint64_t seed, long i) {
  return detail::seeded_engine({seed ^ 0x6a09e667f3bcc908ULL, static_cast<std::uint64_t>(i)});
}

void lemma1_sample(std::uint64_t seed, long i, Accumulator& acc) {
  auto rng = param_engine(seed, i);
  // Regime t >= k^omega >= k >= 1 with small exponent.
  {
    BoundParams p{uniform(rng, 1.0, 4.0), uniform(rng, 1.0, 3.0), 0.0, 1.0, ParamMode::Qubit};
    p.alpha = uniform(rng, 0.0, 0.5);
    const double kw = std::pow(p.k, p.omega);
    const double t = kw + uniform(rng, 0.0, 10.0);
    acc.record(lemma1_rhs(t, p) - std::pow(1.0 + t, p.alpha) - tol::algebraic);
    acc.record(std::abs(lemma1_rhs(kw, p) - std::pow(1.0 + kw, p.alpha)) - tol::algebraic);
  }
  // Regime 0 <= t <= k^omega <= k <= 1 with exponent >= 1.
  {
    BoundParams p{uniform(rng, 0.05, 1.0), uniform(rng, 1.0, 3.0), 0.0, 1.0, ParamMode::Qubit};
    p.alpha = uniform(rng, 1.0, 5.0);
    const double kw = std::pow(p.k, p.omega);
    const double t = uniform(rng, 0.0, kw);
    acc.record(lemma1_rhs(t, p) - std::pow(1.0 + t, p.alpha) - tol::algebraic);
    acc.record(std::abs(lemma1_rhs(kw, p) - std::pow(1.0 + kw, p.alpha)) - tol::algebraic);
  }
}

void ckw_sample(std::uint64_t seed, long i, Accumulator& acc) {
  const StateVector psi = haar_pure(DimProfile({2, 2, 2}), {seed, static_cast<std::uint64_t>(i)});
  acc.record(-verify_ckw(psi).margin - tol::inequality);
}

void theorem1_sample(std::uint64_t seed, long i, Accumulator& acc) {
  const StateVector psi = haar_pure(DimProfile({2, 2, 2}), {seed, static_cast<std::uint64_t>(i)});
  auto rng = param_engine(seed, i);
  BoundParams p;
  p.k = uniform(rng, 1.0, 3.0);
  p.omega = uniform(rng, 1.0, 3.0);
  p.eta = uniform(rng, 1.0, 4.0);
  p.alpha = uniform(rng, 0.0, p.eta / 2.0);
  const MeasureKind kind = (i % 2 == 0) ? MeasureKind::Bures : MeasureKind::Geometric;

  const DensityMatrix rho = outer(psi);
  const double m_ab = measure_two_qubit(partial_trace(rho, {0, 1}), kind);
  const double m_ac = measure_two_qubit(partial_trace(rho, {0, 2}), kind);
  const double m_cut = measure_pure_bipartite(psi, Bipartition{{0}}, kind).value;

  const auto regime = condition_check_tripartite(m_ab, m_ac, p);
  if (!regime) return;
  const double lhs = powx(m_cut, p.alpha);
  acc.record(theorem1_bound(m_ab, m_ac, p, *regime) - lhs - tol::bound);

  // Comparison-bound ordering under the same hypothesis, in whichever
  // orientation it holds.
  const auto r2 = *regime == TripartiteRegime::ACLarge ? remark2_bounds(m_ab, m_ac, p)
                                                       : remark2_bounds(m_ac, m_ab, p);
  acc.record(r2.m2 - r2.m - tol::algebraic);
  acc.record(r2.m3 - r2.m - tol::algebraic);
}

void eq25_vs_eq22_sample(std::uint64_t seed, long i, Accumulator& acc) {
  static const std::vector<std::vector<int>> profiles = {{2, 2, 2}, {3, 3, 3}, {2, 3, 4}};
  const DimProfile profile(profiles[static_cast<std::size_t>(i % 3)]);
  const StateVector psi = haar_pure(profile, {seed, static_cast<std::uint64_t>(i)});
  const double via_pairsum = concurrence_pure_pairsum(psi);
  const double via_purity = concurrence_pure(psi, Bipartition{{0}});
  acc.record(std::abs(via_pairsum - via_purity) - 1e-10);
}

void lemma3_sample(std::uint64_t seed, long i, Accumulator& acc) {
  static const std::vector<std::vector<int>> profiles = {{2, 2, 2}, {3, 3, 3}, {2, 3, 4}, {4, 4, 2}};
  const bool all_qubit = i % 4 == 0;
  const DimProfile profile(profiles[static_cast<std::size_t>(i % 4)]);
  const StateVector psi = haar_pure(profile, {seed, static_cast<std::uint64_t>(i)});
  const double c = concurrence_pure(psi, Bipartition{{0}});
  const double gap = c * c - lemma3_rhs_pure(psi);
  if (all_qubit)
    acc.record(std::abs(gap) - tol::algebraic);  // prefactor-1 identity
  else
    acc.record(-gap - tol::inequality);
}

void theorem3_sample(std::uint64_t seed, long i, Accumulator& acc) {
  const StateVector psi = haar_pure(DimProfile({3, 3, 3}), {seed, static_cast<std::uint64_t>(i)});
  auto rng = param_engine(seed, i);
  BoundParams p;
  p.mode = ParamMode::Qudit;
  p.k = uniform(rng, 0.1, 1.0);
  p.omega = uniform(rng, 1.0, 3.0);
  p.alpha = uniform(rng, 2.0, 4.0);
  p.eta = 2.0;
  const double lhs = powx(concurrence_pure(psi, Bipartition{{0}}), p.alpha);
  acc.record(theorem3_bound(outer(psi), p).bound - lhs - tol::inequality);
}

void theorem4_sample(std::uint64_t seed, long i, Accumulator& acc) {
  const StateVector psi =
      haar_pure(DimProfile({2, 2, 2, 2}), {seed, static_cast<std::uint64_t>(i)});
  auto rng = param_engine(seed, i);
  BoundParams p;
  p.mode = ParamMode::Qudit;
  p.k = uniform(rng, 0.1, 1.0);
  p.omega = uniform(rng, 1.0, 3.0);
  p.alpha = uniform(rng, 2.0, 4.0);
  p.eta = 2.0;
  const double lhs = powx(concurrence_pure(psi, Bipartition{{0}}), p.alpha);
  const DensityMatrix rho = outer(psi);
  for (const auto& regime :
       {NPartiteRegime::all_small(), NPartiteRegime::all_large(), NPartiteRegime::split(2)}) {
    acc.record(theorem4_bound(rho, p, regime).bound - lhs - tol::inequality);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "lemma1", "ckw", "theorem1", "eq25-vs-eq22", "lemma3-pure", "theorem3", "theorem4"};
  return names;
}

SuiteReport run_suite(const std::string& name, long samples, std::uint64_t seed, int workers) {
  const auto dispatch = [&](const SampleFn& fn) { return run_sharded(name, samples, workers, fn); };
  if (name == "lemma1")
    return dispatch([seed](long i, Accumulator& a) { lemma1_sample(seed, i, a); });
  if (name == "ckw") return dispatch([seed](long i, Accumulator& a) { ckw_sample(seed, i, a); });
  if (name == "theorem1")
    return dispatch([seed](long i, Accumulator& a) { theorem1_sample(seed, i, a); });
  if (name == "eq25-vs-eq22")
    return dispatch([seed](long i, Accumulator& a) { eq25_vs_eq22_sample(seed, i, a); });
  if (name == "lemma3-pure")
    return dispatch([seed](long i, Accumulator& a) { lemma3_sample(seed, i, a); });
  if (name == "theorem3")
    return dispatch([seed](long i, Accumulator& a) { theorem3_sample(seed, i, a); });
  if (name == "theorem4")
    return dispatch([seed](long i, Accumulator& a) { theorem4_sample(seed, i, a); });

  std::string known;
  for (const auto& n : suite_names()) known += " " + n;
  throw std::invalid_argument("unknown suite \"" + name + "\"; known suites:" + known);
}

}  // namespace entmono
