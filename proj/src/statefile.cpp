#include "entmono/statefile.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace entmono {

namespace {

using nlohmann::json;

std::vector<Complex> parse_complex_list(const json& arr, const char* what) {
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw std::invalid_argument(std::string(what) + ": entries must be [re, im] pairs");
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

json complex_list(const Vector& v) {
  json arr = json::array();
  for (long i = 0; i < v.size(); ++i) arr.push_back({v(i).real(), v(i).imag()});
  return arr;
}

json complex_list(const Matrix& m) {
  json arr = json::array();
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) arr.push_back({m(r, c).real(), m(r, c).imag()});
  return arr;
}

}  // namespace

LoadedState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("state file is not valid JSON: " + std::string(e.what()));
  }

  if (!doc.contains("dims") || !doc["dims"].is_array())
    throw std::invalid_argument("state file: missing integer list \"dims\"");
  std::vector<int> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer()) throw std::invalid_argument("state file: dims must be integers");
    dims.push_back(d.get<int>());
  }
  DimProfile profile(dims);

  const std::string kind = doc.value("kind", "");
  if (kind == "pure") {
    if (!doc.contains("amplitudes"))
      throw std::invalid_argument("state file: pure state needs \"amplitudes\"");
    const auto amps = parse_complex_list(doc["amplitudes"], "amplitudes");
    if (static_cast<long>(amps.size()) != profile.total())
      throw std::invalid_argument("state file: amplitude count does not match dims");
    Vector v(profile.total());
    for (long i = 0; i < v.size(); ++i) v(i) = amps[static_cast<std::size_t>(i)];
    return StateVector(std::move(v), std::move(profile));
  }
  if (kind == "mixed") {
    if (!doc.contains("entries"))
      throw std::invalid_argument("state file: mixed state needs \"entries\"");
    const auto ent = parse_complex_list(doc["entries"], "entries");
    const long n = profile.total();
    if (static_cast<long>(ent.size()) != n * n)
      throw std::invalid_argument("state file: entry count does not match dims");
    Matrix m(n, n);
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) m(r, c) = ent[static_cast<std::size_t>(r * n + c)];
    DensityMatrix rho(std::move(m), std::move(profile));
    const DensityReport rep = validate_density(rho);
    if (!rep.ok)
      throw std::invalid_argument("state file: matrix fails density validation (hermiticity " +
                                  format_double(rep.hermiticity_defect) + ", min eigenvalue " +
                                  format_double(rep.min_eigenvalue) + ", trace " +
                                  format_double(rep.trace) + ")");
    return rho;
  }
  throw std::invalid_argument("state file: \"kind\" must be \"pure\" or \"mixed\"");
}

void write_state_file(const std::filesystem::path& path, const StateVector& psi) {
  json doc;
  doc["dims"] = psi.profile.dims();
  doc["kind"] = "pure";
  doc["amplitudes"] = complex_list(psi.amplitudes);
  write_text_file(path, doc.dump(2) + "\n");
}

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho) {
  json doc;
  doc["dims"] = rho.profile.dims();
  doc["kind"] = "mixed";
  doc["entries"] = complex_list(rho.entries);
  write_text_file(path, doc.dump(2) + "\n");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw std::invalid_argument("to_csv: ragged row");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("failed writing output file: " + path.string());
}

}  // namespace entmono
