#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "entmono/tolerances.hpp"

namespace entmono {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Ordered list of local dimensions (d_1, ..., d_n), each >= 2.
/// Index convention everywhere: row-major, party 0 slowest-varying.
class DimProfile {
 public:
  explicit DimProfile(std::vector<int> dims);

  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  const std::vector<int>& dims() const { return dims_; }
  long total() const { return total_; }

  /// Flat index of a basis label tuple (one label per party).
  long flatten(std::span<const int> labels) const;
  /// Inverse of flatten.
  std::vector<int> unflatten(long index) const;

  bool operator==(const DimProfile& other) const { return dims_ == other.dims_; }
  std::string to_string() const;  // e.g. "2x3x4"

 private:
  std::vector<int> dims_;
  long total_ = 1;
};

/// Pure multipartite state: complex amplitudes over the row-major basis.
/// Projected substates are explicitly unnormalized and carry normalized=false.
struct StateVector {
  Vector amplitudes;
  DimProfile profile;
  bool normalized = true;

  StateVector(Vector amps, DimProfile prof, bool is_normalized = true);

  double norm2() const { return amplitudes.squaredNorm(); }
};

/// Density matrix with a dimension profile. Substate projections are
/// unnormalized (trace in (0, 1]); normalized flags trace-1 states.
struct DensityMatrix {
  Matrix entries;
  DimProfile profile;
  bool normalized = true;

  DensityMatrix(Matrix m, DimProfile prof, bool is_normalized = true);

  double trace_real() const { return entries.trace().real(); }
};

StateVector tensor_product(const StateVector& a, const StateVector& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced density matrix over the kept parties (original order preserved).
/// Trace and Hermiticity are preserved; works on unnormalized input.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Eigenvalues of a Hermitian matrix, sorted descending.
/// Input must be Hermitian within tol::input_acceptance; it is symmetrized
/// as (m + m^dagger)/2 before solving. With clamp_negative, values in
/// [-tol::structural, 0) are clamped to 0 and anything below throws.
RealVector hermitian_eigenvalues(const Matrix& m, bool clamp_negative = false);

/// |psi><psi|; the normalized flag is copied from the input.
DensityMatrix outer(const StateVector& psi);

/// Verdict-carrying density matrix validation.
struct DensityReport {
  double hermiticity_defect = 0.0;  // max entry of |m - m^dagger|
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  double trace_deviation = 0.0;  // |trace - 1| for normalized states
  bool ok = false;
};

/// Checks Hermiticity, positivity and trace against the structural
/// tolerances. Never throws; the verdict carries the defect magnitudes.
DensityReport validate_density(const DensityMatrix& rho);

namespace detail {

/// Hermitian square root via eigendecomposition. Eigenvalues in
/// [-tol::structural, 0) clamp to 0, larger negatives throw, and tiny
/// positives below a relative threshold are treated as exact zeros so
/// that rank-deficient inputs keep an exact null space.
Matrix sqrt_psd(const Matrix& m);

}  // namespace detail

}  // namespace entmono
