#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "entmono/example_curves.hpp"
#include "entmono/statefile.hpp"
#include "entmono/states.hpp"

using namespace entmono;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("entmono_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("pure state files round-trip") {
  TempDir tmp;
  const auto file = tmp.path / "pure.json";
  for (std::uint64_t s = 0; s < 10; ++s) {
    const StateVector psi = haar_pure(DimProfile({2, 3, 2}), {1000, s});
    write_state_file(file, psi);
    const LoadedState loaded = read_state_file(file);
    REQUIRE(std::holds_alternative<StateVector>(loaded));
    const StateVector& back = std::get<StateVector>(loaded);
    CHECK(back.profile == psi.profile);
    CHECK((back.amplitudes - psi.amplitudes).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("mixed state files round-trip") {
  TempDir tmp;
  const auto file = tmp.path / "mixed.json";
  const DensityMatrix rho = random_mixed(DimProfile({2, 2}), 3, {2000, 1});
  write_state_file(file, rho);
  const LoadedState loaded = read_state_file(file);
  REQUIRE(std::holds_alternative<DensityMatrix>(loaded));
  CHECK((std::get<DensityMatrix>(loaded).entries - rho.entries).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("state file error paths") {
  TempDir tmp;
  const auto file = tmp.path / "bad.json";

  CHECK_THROWS(read_state_file(tmp.path / "missing.json"));

  write_text_file(file, "not json");
  CHECK_THROWS(read_state_file(file));

  write_text_file(file, R"({"kind": "pure", "amplitudes": [[1, 0]]})");
  CHECK_THROWS(read_state_file(file));  // no dims

  write_text_file(file, R"({"dims": [2], "kind": "pure", "amplitudes": [[1, 0], [0, 0], [0, 0]]})");
  CHECK_THROWS(read_state_file(file));  // length mismatch

  write_text_file(file, R"({"dims": [2], "kind": "elsewise", "amplitudes": [[1, 0], [0, 0]]})");
  CHECK_THROWS(read_state_file(file));  // unknown kind

  // Unnormalized pure state.
  write_text_file(file, R"({"dims": [2], "kind": "pure", "amplitudes": [[0.5, 0], [0, 0]]})");
  CHECK_THROWS(read_state_file(file));

  // Mixed state failing the density validation (negative eigenvalue).
  write_text_file(
      file, R"({"dims": [2], "kind": "mixed", "entries": [[1.5, 0], [0, 0], [0, 0], [-0.5, 0]]})");
  CHECK_THROWS(read_state_file(file));
}

TEST_CASE("doubles render with 17 significant digits") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0 / 3.0) == "0.66666666666666663");
}

TEST_CASE("csv output is byte-deterministic") {
  const auto rows = example2_grid(21);
  std::vector<std::vector<double>> table;
  for (const auto& r : rows) table.push_back({r.x, r.lhs, r.y1, r.y2, r.y3});
  const std::string a = to_csv({"x", "lhs", "y1", "y2", "y3"}, table);
  const std::string b = to_csv({"x", "lhs", "y1", "y2", "y3"}, table);
  CHECK(a == b);
  CHECK(a.substr(0, a.find('\n')) == "x,lhs,y1,y2,y3");
  CHECK(std::count(a.begin(), a.end(), '\n') == 22);  // header + 21 rows

  const auto again = example2_grid(21);
  std::vector<std::vector<double>> table2;
  for (const auto& r : again) table2.push_back({r.x, r.lhs, r.y1, r.y2, r.y3});
  CHECK(to_csv({"x", "lhs", "y1", "y2", "y3"}, table2) == a);
}

TEST_CASE("csv rejects ragged rows") {
  CHECK_THROWS(to_csv({"a", "b"}, {{1.0}}));
}

TEST_CASE("state files written from library constructors parse to equal states") {
  TempDir tmp;
  const auto file = tmp.path / "w.json";
  write_state_file(file, w_class_example2());
  const auto loaded = read_state_file(file);
  const StateVector& w = std::get<StateVector>(loaded);
  CHECK((w.amplitudes - w_class_example2().amplitudes).cwiseAbs().maxCoeff() == 0.0);
}
