#include "entmono/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace entmono {

DimProfile::DimProfile(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("DimProfile: empty dimension list");
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("DimProfile: every local dimension must be >= 2");
    total_ *= d;
  }
}

long DimProfile::flatten(std::span<const int> labels) const {
  if (labels.size() != dims_.size())
    throw std::invalid_argument("DimProfile::flatten: label count mismatch");
  long idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const int a = labels[i];
    if (a < 0 || a >= dims_[i]) throw std::out_of_range("DimProfile::flatten: label out of range");
    idx = idx * dims_[i] + a;
  }
  return idx;
}

std::vector<int> DimProfile::unflatten(long index) const {
  if (index < 0 || index >= total_) throw std::out_of_range("DimProfile::unflatten: index out of range");
  std::vector<int> labels(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    labels[i] = static_cast<int>(index % dims_[i]);
    index /= dims_[i];
  }
  return labels;
}

std::string DimProfile::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << 'x';
    os << dims_[i];
  }
  return os.str();
}

StateVector::StateVector(Vector amps, DimProfile prof, bool is_normalized)
    : amplitudes(std::move(amps)), profile(std::move(prof)), normalized(is_normalized) {
  if (amplitudes.size() != profile.total())
    throw std::invalid_argument("StateVector: amplitude count does not match profile");
  if (normalized && std::abs(norm2() - 1.0) > tol::structural)
    throw std::invalid_argument("StateVector: state is not normalized");
}

DensityMatrix::DensityMatrix(Matrix m, DimProfile prof, bool is_normalized)
    : entries(std::move(m)), profile(std::move(prof)), normalized(is_normalized) {
  if (entries.rows() != entries.cols())
    throw std::invalid_argument("DensityMatrix: matrix is not square");
  if (entries.rows() != profile.total())
    throw std::invalid_argument("DensityMatrix: matrix size does not match profile");
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  Vector out(a.amplitudes.size() * b.amplitudes.size());
  for (long i = 0; i < a.amplitudes.size(); ++i)
    out.segment(i * b.amplitudes.size(), b.amplitudes.size()) = a.amplitudes(i) * b.amplitudes;
  std::vector<int> dims = a.profile.dims();
  dims.insert(dims.end(), b.profile.dims().begin(), b.profile.dims().end());
  return StateVector(std::move(out), DimProfile(std::move(dims)), a.normalized && b.normalized);
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  const long na = a.entries.rows(), nb = b.entries.rows();
  Matrix out(na * nb, na * nb);
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a.entries(i, j) * b.entries;
  std::vector<int> dims = a.profile.dims();
  dims.insert(dims.end(), b.profile.dims().begin(), b.profile.dims().end());
  return DensityMatrix(std::move(out), DimProfile(std::move(dims)), a.normalized && b.normalized);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.profile.parties();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int p : keep) {
    if (p < 0 || p >= n) throw std::invalid_argument("partial_trace: party index out of range");
    if (kept[static_cast<std::size_t>(p)])
      throw std::invalid_argument("partial_trace: duplicate party index");
    kept[static_cast<std::size_t>(p)] = true;
  }

  std::vector<int> keep_sorted, traced;
  std::vector<int> keep_dims, traced_dims;
  for (int p = 0; p < n; ++p) {
    if (kept[static_cast<std::size_t>(p)]) {
      keep_sorted.push_back(p);
      keep_dims.push_back(rho.profile.dim(p));
    } else {
      traced.push_back(p);
      traced_dims.push_back(rho.profile.dim(p));
    }
  }

  long keep_total = 1, traced_total = 1;
  for (int d : keep_dims) keep_total *= d;
  for (int d : traced_dims) traced_total *= d;

  std::vector<int> full_row(static_cast<std::size_t>(n)), full_col(static_cast<std::size_t>(n));
  const auto decode = [](long idx, const std::vector<int>& dims, std::vector<int>& out) {
    out.resize(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
      out[i] = static_cast<int>(idx % dims[i]);
      idx /= dims[i];
    }
  };

  Matrix out = Matrix::Zero(keep_total, keep_total);
  std::vector<int> kr, kc, tr;
  for (long r = 0; r < keep_total; ++r) {
    decode(r, keep_dims, kr);
    for (long c = 0; c < keep_total; ++c) {
      decode(c, keep_dims, kc);
      Complex acc(0.0, 0.0);
      for (long t = 0; t < traced_total; ++t) {
        decode(t, traced_dims, tr);
        for (std::size_t i = 0; i < keep_sorted.size(); ++i) {
          full_row[static_cast<std::size_t>(keep_sorted[i])] = kr[i];
          full_col[static_cast<std::size_t>(keep_sorted[i])] = kc[i];
        }
        for (std::size_t i = 0; i < traced.size(); ++i) {
          full_row[static_cast<std::size_t>(traced[i])] = tr[i];
          full_col[static_cast<std::size_t>(traced[i])] = tr[i];
        }
        acc += rho.entries(rho.profile.flatten(full_row), rho.profile.flatten(full_col));
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(out), DimProfile(std::move(keep_dims)), rho.normalized);
}

RealVector hermitian_eigenvalues(const Matrix& m, bool clamp_negative) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol::input_acceptance)
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian within tolerance");
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  RealVector ev = solver.eigenvalues().reverse();
  if (clamp_negative) {
    for (long i = 0; i < ev.size(); ++i) {
      if (ev(i) < -tol::structural)
        throw std::invalid_argument("hermitian_eigenvalues: eigenvalue below the PSD floor");
      if (ev(i) < 0.0) ev(i) = 0.0;
    }
  }
  return ev;
}

DensityMatrix outer(const StateVector& psi) {
  Matrix m = psi.amplitudes * psi.amplitudes.adjoint();
  return DensityMatrix(std::move(m), psi.profile, psi.normalized);
}

DensityReport validate_density(const DensityMatrix& rho) {
  DensityReport rep;
  rep.hermiticity_defect = (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
  rep.trace = rho.trace_real();
  rep.trace_deviation = std::abs(rep.trace - 1.0);

  bool eig_ok = false;
  if (rep.hermiticity_defect <= tol::input_acceptance) {
    const Matrix sym = 0.5 * (rho.entries + rho.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() == Eigen::Success) {
      rep.min_eigenvalue = solver.eigenvalues().minCoeff();
      eig_ok = true;
    }
  }

  const bool trace_ok = rho.normalized ? rep.trace_deviation <= tol::structural
                                       : (rep.trace > 0.0 && rep.trace <= 1.0 + tol::structural);
  rep.ok = rep.hermiticity_defect <= tol::structural && eig_ok &&
           rep.min_eigenvalue >= -tol::structural && trace_ok;
  return rep;
}

namespace detail {

Matrix sqrt_psd(const Matrix& m) {
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("sqrt_psd: eigensolver failed");
  RealVector ev = solver.eigenvalues();
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  // Relative cutoff keeps exact null spaces exact; sqrt would otherwise
  // amplify eigenvalue roundoff into 1e-8 noise.
  const double cutoff = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  RealVector root(ev.size());
  for (long i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol::structural) throw std::invalid_argument("sqrt_psd: matrix is not PSD");
    root(i) = ev(i) <= cutoff ? 0.0 : std::sqrt(ev(i));
  }
  return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace detail

}  // namespace entmono
