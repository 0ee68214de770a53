#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "entmono/qstate.hpp"

namespace entmono {

/// A state loaded from disk: either a pure vector or a mixed matrix.
using LoadedState = std::variant<StateVector, DensityMatrix>;

/// JSON schema: {"dims": [...], "kind": "pure"|"mixed",
///               "amplitudes"|"entries": [[re, im], ...]} with row-major
/// ordering, party 0 slowest. Pure states must be normalized; mixed
/// states must pass validate_density.
LoadedState read_state_file(const std::filesystem::path& path);

void write_state_file(const std::filesystem::path& path, const StateVector& psi);
void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho);

/// Serializes a double with 17 significant digits ('.' decimal point),
/// enough for a lossless round-trip.
std::string format_double(double v);

/// CSV with a header row and '\n' line endings; byte-deterministic for
/// identical input.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace entmono
