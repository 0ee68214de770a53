#include "entmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entmono {

namespace {

// sigma_y (x) sigma_y is real; keeping it as a fixed constant makes the
// spin-flip pipeline bit-reproducible.
const Matrix& spin_flip_matrix() {
  static const Matrix y4 = [] {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 3) = Complex(-1.0, 0.0);
    m(1, 2) = Complex(1.0, 0.0);
    m(2, 1) = Complex(1.0, 0.0);
    m(3, 0) = Complex(-1.0, 0.0);
    return m;
  }();
  return y4;
}

double sqrt1mc2(double c) {
  if (c < -tol::inequality || c > 1.0 + tol::inequality)
    throw std::invalid_argument("measure input concurrence outside [0, 1]");
  const double cc = std::clamp(c, 0.0, 1.0);
  return std::sqrt(std::max(0.0, 1.0 - cc * cc));
}

}  // namespace

std::vector<int> Bipartition::right(int parties) const {
  std::vector<bool> in_left(static_cast<std::size_t>(parties), false);
  for (int p : left) in_left[static_cast<std::size_t>(p)] = true;
  std::vector<int> out;
  for (int p = 0; p < parties; ++p)
    if (!in_left[static_cast<std::size_t>(p)]) out.push_back(p);
  return out;
}

void Bipartition::validate(const DimProfile& profile) const {
  if (left.empty()) throw std::invalid_argument("Bipartition: left side is empty");
  std::vector<bool> seen(static_cast<std::size_t>(profile.parties()), false);
  for (int p : left) {
    if (p < 0 || p >= profile.parties())
      throw std::invalid_argument("Bipartition: party index out of range");
    if (seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("Bipartition: duplicate party index");
    seen[static_cast<std::size_t>(p)] = true;
  }
  if (static_cast<int>(left.size()) == profile.parties())
    throw std::invalid_argument("Bipartition: right side is empty");
}

double concurrence_pure(const StateVector& psi, const Bipartition& cut) {
  cut.validate(psi.profile);
  if (std::abs(psi.norm2() - 1.0) > tol::structural)
    throw std::invalid_argument("concurrence_pure: state is not normalized");
  const DensityMatrix rho_left = partial_trace(outer(psi), cut.left);
  const double purity = (rho_left.entries * rho_left.entries).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double concurrence_wootters(const DensityMatrix& rho) {
  if (rho.profile.parties() != 2 || rho.profile.dim(0) != 2 || rho.profile.dim(1) != 2)
    throw std::invalid_argument("concurrence_wootters: state is not two-qubit");
  const double defect = (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol::input_acceptance)
    throw std::invalid_argument("concurrence_wootters: input is not Hermitian within tolerance");

  const Matrix sym = 0.5 * (rho.entries + rho.entries.adjoint());
  const Matrix& y4 = spin_flip_matrix();
  const Matrix flipped = y4 * sym.conjugate() * y4;

  // The l_i are the square roots of the eigenvalues of rho * flipped.
  // Computing them as eigenvalues of the Hermitian sqrt(rho) * flipped *
  // sqrt(rho) keeps zero eigenvalues at roundoff size instead of the
  // sqrt-amplified 1e-8 the raw product would give.
  const Matrix root = detail::sqrt_psd(sym);
  Matrix h = root * flipped * root;
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("concurrence_wootters: eigensolver failed");
  RealVector ev = solver.eigenvalues().reverse();
  const double cutoff = 64.0 * std::numeric_limits<double>::epsilon() * std::max(0.0, ev(0));
  double c = 0.0;
  for (long i = 0; i < 4; ++i) {
    if (ev(i) < -tol::structural)
      throw std::invalid_argument("concurrence_wootters: spin-flip spectrum below the PSD floor");
    const double lambda = ev(i) <= cutoff ? 0.0 : std::sqrt(ev(i));
    c += (i == 0) ? lambda : -lambda;
  }
  return std::max(0.0, c);
}

double f_bures(double c) { return 2.0 - 2.0 * std::sqrt((1.0 + sqrt1mc2(c)) / 2.0); }

double f_geometric(double c) { return (1.0 - sqrt1mc2(c)) / 2.0; }

double apply_f(MeasureKind kind, double c) {
  return kind == MeasureKind::Bures ? f_bures(c) : f_geometric(c);
}

double measure_two_qubit(const DensityMatrix& rho, MeasureKind kind) {
  return apply_f(kind, concurrence_wootters(rho));
}

MeasureValue measure_pure_bipartite(const StateVector& psi, const Bipartition& cut,
                                    MeasureKind kind) {
  MeasureValue out;
  out.value = apply_f(kind, concurrence_pure(psi, cut));
  out.exact = cut.left.size() == 1 && psi.profile.dim(cut.left.front()) == 2;
  return out;
}

}  // namespace entmono
