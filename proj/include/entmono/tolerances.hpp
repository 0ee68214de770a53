#pragma once

// Central tolerance knobs for the whole library and its property suites.
// Everything numerical in entmono compares against one of these.

namespace entmono::tol {

// Structural checks: state norms, Hermiticity, PSD floors, trace deviation.
inline constexpr double structural = 1e-10;

// Algebraic identities between two computation routes of the same quantity.
inline constexpr double algebraic = 1e-12;

// Hermiticity gate on raw user input, before symmetrization.
inline constexpr double input_acceptance = 1e-8;

// Inequality slack for eigen-backed quantities (CKW margins, substate sums).
inline constexpr double inequality = 1e-9;

// End-to-end slack for the fidelity-measure monogamy bounds.
inline constexpr double bound = 1e-10;

}  // namespace entmono::tol
