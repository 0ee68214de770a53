// Acceptance suite: runs every published-value regression, figure-grid
// ordering check and randomized property suite at its pinned tolerance,
// printing one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "entmono/example_curves.hpp"
#include "entmono/measures.hpp"
#include "entmono/monogamy.hpp"
#include "entmono/qudit.hpp"
#include "entmono/statefile.hpp"
#include "entmono/states.hpp"
#include "entmono/suites.hpp"

using namespace entmono;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number, what.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) { return format_double(v); }

StateVector example1_state() {
  SchmidtParams p;
  p.l0 = p.l3 = std::sqrt(2.0) / 3.0;
  p.l2 = std::sqrt(5.0) / 3.0;
  return schmidt_state(p);
}

struct Tripartite {
  double cut, m_ab, m_ac;
};

Tripartite bures_triple(const StateVector& psi) {
  const DensityMatrix rho = outer(psi);
  return {measure_pure_bipartite(psi, Bipartition{{0}}, MeasureKind::Bures).value,
          measure_two_qubit(partial_trace(rho, {0, 1}), MeasureKind::Bures),
          measure_two_qubit(partial_trace(rho, {0, 2}), MeasureKind::Bures)};
}

void criterion1() {
  const Tripartite m = bures_triple(example1_state());
  // The 2*l0*l2 coefficient pairs with A1A3 under this basis ordering,
  // so the 0.14989 value sits on m_ac and 0.05279 on m_ab.
  const double d_cut = std::abs(m.cut - 0.23617);
  const double d_ac = std::abs(m.m_ac - 0.14989);
  const double d_ab = std::abs(m.m_ab - 0.05279);
  const bool ok = d_cut <= 5e-5 && d_ac <= 5e-5 && d_ab <= 5e-5;
  report(1, ok, "Schmidt-state Bures regression at 5e-5",
         "cut=" + fmt(m.cut) + " pair values " + fmt(m.m_ac) + ", " + fmt(m.m_ab));
}

void criterion2() {
  const Tripartite m = bures_triple(w_class_example2());
  const bool rounded = std::abs(m.cut - 0.17426) <= 5e-5 && std::abs(m.m_ab - 0.02880) <= 5e-5 &&
                       std::abs(m.m_ac - 0.13166) <= 5e-5;
  // Exact closed forms: 2 - 2 sqrt(5/6), 2 - 2 sqrt((3+2 sqrt 2)/6) and
  // 2 - 2 sqrt((3+sqrt 5)/6); the last is f_B(2/3) written out.
  const double e_cut = 2.0 - 2.0 * std::sqrt(5.0 / 6.0);
  const double e_ab = 2.0 - 2.0 * std::sqrt((3.0 + 2.0 * std::sqrt(2.0)) / 6.0);
  const double e_ac = 2.0 - 2.0 * std::sqrt((3.0 + std::sqrt(5.0)) / 6.0);
  const bool exact = std::abs(m.cut - e_cut) <= 1e-12 && std::abs(m.m_ab - e_ab) <= 1e-12 &&
                     std::abs(m.m_ac - e_ac) <= 1e-12;
  report(2, rounded && exact, "W-class Bures regression at 5e-5 and closed forms at 1e-12",
         "cut=" + fmt(m.cut) + " ab=" + fmt(m.m_ab) + " ac=" + fmt(m.m_ac));
}

void criterion3() {
  const auto rows = example1_grid(51, 51);
  long v_lhs_z1 = 0, v_z1_z2 = 0;
  double worst = 0.0;
  for (const auto& r : rows) {
    if (r.z1 - r.lhs > 1e-12) ++v_lhs_z1;
    if (r.z2 - r.z1 > 1e-12) {
      ++v_z1_z2;
      worst = std::max(worst, r.z2 - r.z1);
    }
  }
  const bool ok = v_lhs_z1 == 0 && v_z1_z2 == 0;
  report(3, ok, "first figure grid ordering lhs >= z1 >= z2 at 1e-12",
         "lhs>=z1 violations " + std::to_string(v_lhs_z1) + "/2601, z1>=z2 violations " +
             std::to_string(v_z1_z2) + "/2601, max z2-z1 " + fmt(worst) +
             "; the plain power-sum comparison bound exceeds the tightened bound and the "
             "measure itself for exponents below 1");
}

void criterion4() {
  const auto rows = example2_grid(101);
  long v = 0;
  for (const auto& r : rows) {
    if (r.y1 - r.lhs > 1e-12) ++v;
    if (r.y2 - r.y1 > 1e-12) ++v;
    if (r.y3 - r.y1 > 1e-12) ++v;
  }
  report(4, v == 0, "second figure grid ordering lhs >= y1 >= {y2, y3} at 1e-12",
         std::to_string(v) + " violations over 101 rows");
}

void criterion5() {
  const SuiteReport r = run_suite("lemma1", 100000, 20240517, 4);
  report(5, r.violations == 0,
         "power-split inequality fuzz, 1e5 samples per regime with saturation at 1e-12",
         std::to_string(r.checks) + " checks, " + std::to_string(r.violations) +
             " violations, max " + fmt(r.max_violation));
}

void criterion6() {
  const SuiteReport r = run_suite("ckw", 10000, 90210, 4);
  const double w_margin = verify_ckw(w_class_example2()).margin;
  const bool ok = r.violations == 0 && std::abs(w_margin) <= 1e-12;
  report(6, ok, "squared-concurrence monogamy fuzz at -1e-9 with W-class saturation at 1e-12",
         std::to_string(r.violations) + " violations, W margin " + fmt(w_margin));
}

void criterion7() {
  const SuiteReport r = run_suite("theorem1", 1000, 5150, 4);
  report(7, r.violations == 0,
         "tripartite bound fuzz at 1e-10 plus comparison-bound ordering at 1e-12",
         std::to_string(r.checks) + " checks, " + std::to_string(r.violations) +
             " violations, max " + fmt(r.max_violation));
}

void criterion8() {
  const SuiteReport r = run_suite("eq25-vs-eq22", 3000, 62832, 4);
  report(8, r.violations == 0, "pair-sum vs reduced-purity concurrence at 1e-10, 1e3 per profile",
         std::to_string(r.checks) + " checks, " + std::to_string(r.violations) + " violations");
}

void criterion9() {
  const SuiteReport r = run_suite("lemma3-pure", 4000, 27183, 4);
  report(9, r.violations == 0,
         "substate decomposition bound at -1e-9 with all-qubit equality at 1e-12",
         std::to_string(r.checks) + " checks, " + std::to_string(r.violations) + " violations");
}

void criterion10() {
  const SuiteReport r3 = run_suite("theorem3", 1000, 16180, 4);
  const SuiteReport r4 = run_suite("theorem4", 1000, 16181, 4);
  report(10, r3.violations == 0 && r4.violations == 0,
         "qudit bound soundness fuzz at 1e-9 (tripartite and four-party)",
         std::to_string(r3.checks + r4.checks) + " checks, " +
             std::to_string(r3.violations + r4.violations) + " violations");
}

void criterion11() {
  const bool counts = enumerate_substates(DimProfile({2, 2, 2})).size() == 1 &&
                      enumerate_substates(DimProfile({3, 3, 3})).size() == 27 &&
                      enumerate_substates(DimProfile({2, 3, 4})).size() == 18;
  bool coverage = true;
  const auto list = enumerate_substates(DimProfile({3, 3, 3}));
  for (int party = 0; party < 3 && coverage; ++party) {
    for (int lo = 0; lo < 3; ++lo) {
      for (int hi = lo + 1; hi < 3; ++hi) {
        int c = 0;
        for (const auto& idx : list)
          if (idx.pairs[static_cast<std::size_t>(party)][0] == lo &&
              idx.pairs[static_cast<std::size_t>(party)][1] == hi)
            ++c;
        if (c != 9) coverage = false;
      }
    }
  }
  report(11, counts && coverage, "substate combinatorics 1/27/18 and 9-fold pair coverage",
         counts ? "counts ok" : "counts wrong");
}

void criterion12() {
  long cross_viol = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const StateVector psi = haar_pure(DimProfile({2, 2}), {8675309, s});
    const double via_w = concurrence_wootters(outer(psi));
    const double via_p = concurrence_pure(psi, Bipartition{{0}});
    if (std::abs(via_w - via_p) > 1e-10) ++cross_viol;
  }

  double worst_proj = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const StateVector psi = haar_pure(DimProfile({3, 3, 3}), {1337, s});
    for (const auto& idx : enumerate_substates(psi.profile)) {
      const Matrix a = project_substate_mixed(outer(psi), idx).entries;
      const Matrix b = outer(project_substate_pure(psi, idx)).entries;
      worst_proj = std::max(worst_proj, (a - b).cwiseAbs().maxCoeff());
    }
  }
  const bool ok = cross_viol == 0 && worst_proj <= 1e-14;
  report(12, ok, "spin-flip vs purity route at 1e-10 and projection consistency at 1e-14",
         std::to_string(cross_viol) + " route mismatches, max projection defect " +
             fmt(worst_proj));
}

}  // namespace

int main() {
  std::printf("entmono acceptance suite\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
