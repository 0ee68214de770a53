#pragma once

#include <cstdint>
#include <random>

#include "entmono/qstate.hpp"

namespace entmono {

/// Parameters of the five-amplitude generalized Schmidt family of 3-qubit
/// states: l0|000> + l1 e^{i theta}|100> + l2|101> + l3|110> + l4|111>.
struct SchmidtParams {
  double l0 = 1.0, l1 = 0.0, l2 = 0.0, l3 = 0.0, l4 = 0.0;
  double theta = 0.0;  // inert whenever l1 == 0, which covers both examples

  void validate() const;
};

/// Builds the generalized Schmidt state. Closed forms, with the row-major
/// party-0-slowest basis used throughout this library:
///   C(A1|A2A3) = 2 l0 sqrt(l2^2 + l3^2 + l4^2)
///   C(A1A2)    = 2 l0 l3
///   C(A1A3)    = 2 l0 l2
StateVector schmidt_state(const SchmidtParams& p);

/// The fixed W-class state (|100> + |010> + 2|001>)/sqrt(6).
StateVector w_class_example2();

/// Deterministic seed for the samplers: identical (seed, stream) pairs
/// reproduce identical draws within this implementation.
struct SeedSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Haar-random pure state: i.i.d. standard complex Gaussians, normalized.
StateVector haar_pure(const DimProfile& profile, const SeedSpec& s);

/// Random mixed state: sum of `rank` Haar projectors with flat-Dirichlet
/// weights. Always a valid normalized density matrix.
DensityMatrix random_mixed(const DimProfile& profile, int rank, const SeedSpec& s);

namespace detail {
/// The deterministic engine behind the samplers, exposed so property
/// suites can draw auxiliary parameters from the same substreams.
std::mt19937_64 seeded_engine(const SeedSpec& s);
}  // namespace detail

}  // namespace entmono
