#include "entmono/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace entmono {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Vector gaussian_vector(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (long i = 0; i < n; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

namespace detail {

std::mt19937_64 seeded_engine(const SeedSpec& s) {
  std::uint64_t x = s.seed ^ (0xda3e39cb94b95bdbULL * (s.stream + 1));
  const std::uint64_t w0 = splitmix64(x), w1 = splitmix64(x), w2 = splitmix64(x),
                      w3 = splitmix64(x);
  std::seed_seq seq{static_cast<std::uint32_t>(w0), static_cast<std::uint32_t>(w0 >> 32),
                    static_cast<std::uint32_t>(w1), static_cast<std::uint32_t>(w1 >> 32),
                    static_cast<std::uint32_t>(w2), static_cast<std::uint32_t>(w2 >> 32),
                    static_cast<std::uint32_t>(w3), static_cast<std::uint32_t>(w3 >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace detail

void SchmidtParams::validate() const {
  const double ls[] = {l0, l1, l2, l3, l4};
  double sum = 0.0;
  for (double l : ls) {
    if (l < 0.0) throw std::invalid_argument("SchmidtParams: coefficients must be non-negative");
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > tol::algebraic)
    throw std::invalid_argument("SchmidtParams: squared coefficients must sum to 1");
  if (theta < 0.0 || theta > 3.14159265358979323846 + tol::algebraic)
    throw std::invalid_argument("SchmidtParams: theta outside [0, pi]");
}

StateVector schmidt_state(const SchmidtParams& p) {
  p.validate();
  Vector amps = Vector::Zero(8);
  amps(0) = Complex(p.l0, 0.0);                                       // |000>
  amps(4) = p.l1 * Complex(std::cos(p.theta), std::sin(p.theta));     // |100>
  amps(5) = Complex(p.l2, 0.0);                                       // |101>
  amps(6) = Complex(p.l3, 0.0);                                       // |110>
  amps(7) = Complex(p.l4, 0.0);                                       // |111>
  return StateVector(std::move(amps), DimProfile({2, 2, 2}));
}

StateVector w_class_example2() {
  Vector amps = Vector::Zero(8);
  const double s6 = std::sqrt(6.0);
  amps(4) = Complex(1.0 / s6, 0.0);  // |100>
  amps(2) = Complex(1.0 / s6, 0.0);  // |010>
  amps(1) = Complex(2.0 / s6, 0.0);  // |001>
  return StateVector(std::move(amps), DimProfile({2, 2, 2}));
}

StateVector haar_pure(const DimProfile& profile, const SeedSpec& s) {
  auto rng = detail::seeded_engine(s);
  Vector v = gaussian_vector(profile.total(), rng);
  v /= std::sqrt(v.squaredNorm());
  return StateVector(std::move(v), profile);
}

DensityMatrix random_mixed(const DimProfile& profile, int rank, const SeedSpec& s) {
  if (rank < 1) throw std::invalid_argument("random_mixed: rank must be positive");
  if (rank > profile.total()) throw std::invalid_argument("random_mixed: rank exceeds dimension");
  auto rng = detail::seeded_engine(s);
  std::exponential_distribution<double> expo(1.0);

  // Exponential draws normalized to the simplex are flat-Dirichlet weights.
  std::vector<double> w(static_cast<std::size_t>(rank));
  double wsum = 0.0;
  for (double& wi : w) {
    wi = expo(rng);
    wsum += wi;
  }

  Matrix rho = Matrix::Zero(profile.total(), profile.total());
  for (int i = 0; i < rank; ++i) {
    Vector v = gaussian_vector(profile.total(), rng);
    v /= std::sqrt(v.squaredNorm());
    rho += (w[static_cast<std::size_t>(i)] / wsum) * (v * v.adjoint());
  }
  return DensityMatrix(std::move(rho), profile);
}

}  // namespace entmono
