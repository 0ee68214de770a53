#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "entmono/measures.hpp"
#include "entmono/states.hpp"

using namespace entmono;

namespace {

double wootters_pair(const StateVector& psi, int partner) {
  return concurrence_wootters(partial_trace(outer(psi), {0, partner}));
}

}  // namespace

TEST_CASE("schmidt parameter validation") {
  SchmidtParams bad;
  bad.l0 = 1.0;
  bad.l2 = 0.5;
  CHECK_THROWS(schmidt_state(bad));
  bad = SchmidtParams{};
  bad.l0 = -1.0;
  CHECK_THROWS(schmidt_state(bad));
}

TEST_CASE("schmidt corner states") {
  SchmidtParams p;  // l0 = 1
  const StateVector basis = schmidt_state(p);
  CHECK(basis.amplitudes(0) == Complex(1.0, 0.0));
  CHECK(concurrence_pure(basis, Bipartition{{0}}) == 0.0);
  CHECK(wootters_pair(basis, 1) == 0.0);
  CHECK(wootters_pair(basis, 2) == 0.0);

  SchmidtParams ghz;
  ghz.l0 = ghz.l4 = 1.0 / std::sqrt(2.0);
  CHECK(concurrence_pure(schmidt_state(ghz), Bipartition{{0}}) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("first worked example's coefficients") {
  SchmidtParams p;
  p.l0 = p.l3 = std::sqrt(2.0) / 3.0;
  p.l2 = std::sqrt(5.0) / 3.0;
  const StateVector psi = schmidt_state(p);
  // With this library's basis ordering the 2 l0 l3 pair is A1A2 and the
  // 2 l0 l2 pair is A1A3.
  CHECK(wootters_pair(psi, 1) == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(wootters_pair(psi, 2) == doctest::Approx(2.0 * std::sqrt(10.0) / 9.0).epsilon(1e-12));
}

TEST_CASE("schmidt closed forms agree with the matrix routes on the simplex") {
  std::mt19937_64 rng(424242);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 3.14159265358979323846);
  for (int trial = 0; trial < 1000; ++trial) {
    // Flat Dirichlet over the squared coefficients.
    double w[5], sum = 0.0;
    for (double& wi : w) {
      wi = gamma(rng);
      sum += wi;
    }
    SchmidtParams p;
    p.l0 = std::sqrt(w[0] / sum);
    p.l1 = std::sqrt(w[1] / sum);
    p.l2 = std::sqrt(w[2] / sum);
    p.l3 = std::sqrt(w[3] / sum);
    p.l4 = std::sqrt(w[4] / sum);
    p.theta = angle(rng);

    const StateVector psi = schmidt_state(p);
    const double rest = std::sqrt(p.l2 * p.l2 + p.l3 * p.l3 + p.l4 * p.l4);
    CHECK(std::abs(concurrence_pure(psi, Bipartition{{0}}) - 2.0 * p.l0 * rest) <
          tol::algebraic);
    CHECK(std::abs(wootters_pair(psi, 1) - 2.0 * p.l0 * p.l3) < tol::algebraic);
    CHECK(std::abs(wootters_pair(psi, 2) - 2.0 * p.l0 * p.l2) < tol::algebraic);
  }
}

TEST_CASE("theta is inert when l1 vanishes") {
  for (double theta : {0.0, 1.5707963267948966, 3.141592653589793}) {
    SchmidtParams p;
    p.l0 = 0.5;
    p.l2 = 0.5;
    p.l3 = 0.5;
    p.l4 = 0.5;
    p.theta = theta;
    const StateVector psi = schmidt_state(p);
    CHECK(std::abs(concurrence_pure(psi, Bipartition{{0}}) -
                   2.0 * 0.5 * std::sqrt(0.75)) < tol::algebraic);
    CHECK(std::abs(wootters_pair(psi, 1) - 0.5) < tol::algebraic);
    CHECK(std::abs(wootters_pair(psi, 2) - 0.5) < tol::algebraic);
  }
}

TEST_CASE("the W-class state is exactly normalized") {
  const StateVector w = w_class_example2();
  CHECK(w.norm2() == doctest::Approx(1.0).epsilon(1e-15));  // 1/6 + 1/6 + 4/6
  CHECK(concurrence_pure(w, Bipartition{{0}}) ==
        doctest::Approx(std::sqrt(5.0) / 3.0).epsilon(1e-13));
  CHECK(wootters_pair(w, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("haar sampler is reproducible and normalized") {
  const DimProfile p({3, 2, 2});
  const StateVector a = haar_pure(p, {123456789, 7});
  const StateVector b = haar_pure(p, {123456789, 7});
  CHECK((a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() == 0.0);
  const StateVector c = haar_pure(p, {123456789, 8});
  CHECK((a.amplitudes - c.amplitudes).cwiseAbs().maxCoeff() > 1e-3);
  CHECK(std::abs(a.norm2() - 1.0) < tol::algebraic);
}

TEST_CASE("haar purity matches the known two-qubit average") {
  // E[tr rho_A^2] = (dA + dB) / (dA dB + 1) = 4/5 for a 2x2 bipartite
  // Haar state. An independent 2e5-sample reference run gives 0.79975.
  const DimProfile p({2, 2});
  double mean = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const StateVector psi = haar_pure(p, {31415, static_cast<std::uint64_t>(i)});
    const DensityMatrix rho = partial_trace(outer(psi), {0});
    mean += (rho.entries * rho.entries).trace().real();
  }
  mean /= n;
  CHECK(mean == doctest::Approx(0.8).epsilon(0.01));
}

TEST_CASE("random mixed states are valid and reproducible") {
  const DimProfile p({2, 2, 2});
  const DensityMatrix rho = random_mixed(p, 3, {777, 0});
  CHECK(validate_density(rho).ok);
  const DensityMatrix again = random_mixed(p, 3, {777, 0});
  CHECK((rho.entries - again.entries).cwiseAbs().maxCoeff() == 0.0);

  const DensityMatrix pure = random_mixed(p, 1, {777, 1});
  const double purity = (pure.entries * pure.entries).trace().real();
  CHECK(purity == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS(random_mixed(p, 0, {777, 2}));
  CHECK_THROWS(random_mixed(p, 9, {777, 2}));
}

TEST_CASE("purity decreases in expectation with rank") {
  const DimProfile p({2, 2, 2});
  double mean1 = 0.0, mean8 = 0.0;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    const auto r1 = random_mixed(p, 1, {2020, static_cast<std::uint64_t>(i)});
    const auto r8 = random_mixed(p, 8, {2021, static_cast<std::uint64_t>(i)});
    mean1 += (r1.entries * r1.entries).trace().real();
    mean8 += (r8.entries * r8.entries).trace().real();
  }
  CHECK(mean1 / n > mean8 / n + 0.2);
}
