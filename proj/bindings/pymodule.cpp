#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>

#include "entmono/example_curves.hpp"
#include "entmono/measures.hpp"
#include "entmono/monogamy.hpp"
#include "entmono/qudit.hpp"
#include "entmono/states.hpp"
#include "entmono/suites.hpp"

namespace py = pybind11;
using namespace entmono;

namespace {

StateVector as_state(const Vector& amps, const std::vector<int>& dims) {
  DimProfile profile(dims);
  const double n2 = amps.squaredNorm();
  return StateVector(amps, std::move(profile), std::abs(n2 - 1.0) <= tol::structural);
}

DensityMatrix as_density(const Matrix& m, const std::vector<int>& dims) {
  DimProfile profile(dims);
  const bool normalized = std::abs(m.trace().real() - 1.0) <= tol::structural;
  return DensityMatrix(m, std::move(profile), normalized);
}

MeasureKind parse_kind(const std::string& kind) {
  if (kind == "bures") return MeasureKind::Bures;
  if (kind == "geometric") return MeasureKind::Geometric;
  throw std::invalid_argument("measure kind must be 'bures' or 'geometric'");
}

TripartiteRegime parse_tripartite_regime(const std::string& regime) {
  if (regime == "AC_large") return TripartiteRegime::ACLarge;
  if (regime == "AB_large") return TripartiteRegime::ABLarge;
  throw std::invalid_argument("regime must be 'AC_large' or 'AB_large'");
}

NPartiteRegime parse_npartite_regime(const std::string& regime, int split_m) {
  if (regime == "AllSmall") return NPartiteRegime::all_small();
  if (regime == "AllLarge") return NPartiteRegime::all_large();
  if (regime == "Split") return NPartiteRegime::split(split_m);
  throw std::invalid_argument("regime must be 'AllSmall', 'AllLarge' or 'Split'");
}

BoundParams qubit_params(double k, double omega, double alpha, double eta) {
  return BoundParams{k, omega, alpha, eta, ParamMode::Qubit};
}

BoundParams qudit_params(double k, double omega, double alpha) {
  return BoundParams{k, omega, alpha, 2.0, ParamMode::Qudit};
}

SubstateIndex parse_substate(const std::vector<std::pair<int, int>>& pairs) {
  SubstateIndex idx;
  for (const auto& [lo, hi] : pairs) idx.pairs.push_back({lo, hi});
  return idx;
}

py::dict qudit_report_dict(const QuditBoundReport& rep) {
  py::dict d;
  d["bound"] = rep.bound;
  d["prefactor"] = rep.prefactor;
  d["substates"] = rep.contributions.size();
  d["satisfied"] = rep.satisfied;
  d["flagged"] = rep.flagged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fidelity-based entanglement measures and monogamy bounds";
  m.attr("__version__") = "0.1.0";

  // State constructors and samplers.
  m.def(
      "schmidt_state",
      [](double l0, double l1, double l2, double l3, double l4, double theta) {
        return schmidt_state(SchmidtParams{l0, l1, l2, l3, l4, theta}).amplitudes;
      },
      py::arg("l0"), py::arg("l1") = 0.0, py::arg("l2") = 0.0, py::arg("l3") = 0.0,
      py::arg("l4") = 0.0, py::arg("theta") = 0.0,
      "Amplitudes of the generalized Schmidt 3-qubit state");
  m.def(
      "w_class_example2", [] { return w_class_example2().amplitudes; },
      "Amplitudes of the fixed W-class state (|100>+|010>+2|001>)/sqrt(6)");
  m.def(
      "haar_pure",
      [](const std::vector<int>& dims, std::uint64_t seed, std::uint64_t stream) {
        return haar_pure(DimProfile(dims), SeedSpec{seed, stream}).amplitudes;
      },
      py::arg("dims"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "random_mixed",
      [](const std::vector<int>& dims, int rank, std::uint64_t seed, std::uint64_t stream) {
        return random_mixed(DimProfile(dims), rank, SeedSpec{seed, stream}).entries;
      },
      py::arg("dims"), py::arg("rank"), py::arg("seed"), py::arg("stream") = 0);

  // Linear-algebra kernel.
  m.def(
      "partial_trace",
      [](const Matrix& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
        return partial_trace(as_density(rho, dims), keep).entries;
      },
      py::arg("rho"), py::arg("dims"), py::arg("keep"),
      "Reduced density matrix over the kept parties (0-based, order preserved)");
  m.def(
      "validate_density",
      [](const Matrix& rho, const std::vector<int>& dims) {
        const DensityReport rep = validate_density(as_density(rho, dims));
        py::dict d;
        d["hermiticity_defect"] = rep.hermiticity_defect;
        d["min_eigenvalue"] = rep.min_eigenvalue;
        d["trace"] = rep.trace;
        d["trace_deviation"] = rep.trace_deviation;
        d["ok"] = rep.ok;
        return d;
      },
      py::arg("rho"), py::arg("dims"));

  // Measures.
  m.def("f_bures", &f_bures, py::arg("c"));
  m.def("f_geometric", &f_geometric, py::arg("c"));
  m.def(
      "concurrence_pure",
      [](const Vector& amps, const std::vector<int>& dims, const std::vector<int>& left) {
        return concurrence_pure(as_state(amps, dims), Bipartition{left});
      },
      py::arg("amplitudes"), py::arg("dims"), py::arg("left"));
  m.def(
      "concurrence_pure_pairsum",
      [](const Vector& amps, const std::vector<int>& dims) {
        return concurrence_pure_pairsum(as_state(amps, dims));
      },
      py::arg("amplitudes"), py::arg("dims"),
      "First party vs rest concurrence via the minor pair-sum route");
  m.def(
      "concurrence_wootters",
      [](const Matrix& rho) { return concurrence_wootters(as_density(rho, {2, 2})); },
      py::arg("rho"), "Two-qubit concurrence; accepts unnormalized input");
  m.def(
      "measure_two_qubit",
      [](const Matrix& rho, const std::string& kind) {
        return measure_two_qubit(as_density(rho, {2, 2}), parse_kind(kind));
      },
      py::arg("rho"), py::arg("kind") = "bures");
  m.def(
      "measure_pure_bipartite",
      [](const Vector& amps, const std::vector<int>& dims, const std::vector<int>& left,
         const std::string& kind) {
        const MeasureValue v =
            measure_pure_bipartite(as_state(amps, dims), Bipartition{left}, parse_kind(kind));
        return py::make_tuple(v.value, v.exact);
      },
      py::arg("amplitudes"), py::arg("dims"), py::arg("left"), py::arg("kind") = "bures",
      "Returns (value, exact); exact means the closed form is an equality");

  // Monogamy scalar engine.
  m.def("mu_coeff", py::overload_cast<double, double, double>(&mu_coeff), py::arg("k"),
        py::arg("omega"), py::arg("x"));
  m.def(
      "lemma1_rhs",
      [](double t, double k, double omega, double x) {
        return lemma1_rhs(t, BoundParams{k, omega, x, 1.0, ParamMode::Qubit});
      },
      py::arg("t"), py::arg("k"), py::arg("omega"), py::arg("x"));
  m.def(
      "theorem1_bound",
      [](double m_ab, double m_ac, double k, double omega, double alpha, double eta,
         const std::string& regime) {
        return theorem1_bound(m_ab, m_ac, qubit_params(k, omega, alpha, eta),
                              parse_tripartite_regime(regime));
      },
      py::arg("m_ab"), py::arg("m_ac"), py::arg("k"), py::arg("omega"), py::arg("alpha"),
      py::arg("eta"), py::arg("regime"));
  m.def(
      "remark2_bounds",
      [](double m_ab, double m_ac, double k, double omega, double alpha, double eta) {
        const Remark2Bounds r = remark2_bounds(m_ab, m_ac, qubit_params(k, omega, alpha, eta));
        py::dict d;
        d["m"] = r.m;
        d["m1"] = r.m1;
        d["m2"] = r.m2;
        d["m3"] = r.m3;
        return d;
      },
      py::arg("m_ab"), py::arg("m_ac"), py::arg("k"), py::arg("omega"), py::arg("alpha"),
      py::arg("eta"));
  m.def(
      "theorem2_bound",
      [](const std::vector<double>& pairwise, double k, double omega, double alpha, double eta,
         const std::string& regime, int split_m) {
        return theorem2_bound(pairwise, qubit_params(k, omega, alpha, eta),
                              parse_npartite_regime(regime, split_m));
      },
      py::arg("pairwise"), py::arg("k"), py::arg("omega"), py::arg("alpha"), py::arg("eta"),
      py::arg("regime"), py::arg("split_m") = 0);
  m.def(
      "condition_check_tripartite",
      [](double m_ab, double m_ac, double k, double omega, double eta) -> std::optional<std::string> {
        const auto r =
            condition_check_tripartite(m_ab, m_ac, qubit_params(k, omega, eta / 2.0, eta));
        if (!r) return std::nullopt;
        return *r == TripartiteRegime::ACLarge ? std::string("AC_large") : std::string("AB_large");
      },
      py::arg("m_ab"), py::arg("m_ac"), py::arg("k"), py::arg("omega"), py::arg("eta"));
  m.def(
      "verify_ckw",
      [](const Vector& amps) {
        const CkwResult r = verify_ckw(as_state(amps, {2, 2, 2}));
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["margin"] = r.margin;
        return d;
      },
      py::arg("amplitudes"), "Squared-concurrence monogamy check for a pure 3-qubit state");

  // Qudit substate machinery.
  m.def(
      "enumerate_substates",
      [](const std::vector<int>& dims) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& idx : enumerate_substates(DimProfile(dims))) {
          std::vector<std::pair<int, int>> pairs;
          for (const auto& pr : idx.pairs) pairs.emplace_back(pr[0], pr[1]);
          out.push_back(std::move(pairs));
        }
        return out;
      },
      py::arg("dims"), "All (lo, hi) label selections, lexicographically ordered");
  m.def(
      "project_substate_pure",
      [](const Vector& amps, const std::vector<int>& dims,
         const std::vector<std::pair<int, int>>& pairs) {
        return project_substate_pure(as_state(amps, dims), parse_substate(pairs)).amplitudes;
      },
      py::arg("amplitudes"), py::arg("dims"), py::arg("pairs"));
  m.def(
      "project_substate_mixed",
      [](const Matrix& rho, const std::vector<int>& dims,
         const std::vector<std::pair<int, int>>& pairs) {
        return project_substate_mixed(as_density(rho, dims), parse_substate(pairs)).entries;
      },
      py::arg("rho"), py::arg("dims"), py::arg("pairs"));
  m.def(
      "substate_pair_concurrence",
      [](const Matrix& rho, const std::vector<int>& dims,
         const std::vector<std::pair<int, int>>& pairs, int partner) {
        return substate_pair_concurrence(as_density(rho, dims), parse_substate(pairs), partner);
      },
      py::arg("rho"), py::arg("dims"), py::arg("pairs"), py::arg("partner"));
  m.def(
      "lemma3_rhs_pure",
      [](const Vector& amps, const std::vector<int>& dims) {
        return lemma3_rhs_pure(as_state(amps, dims));
      },
      py::arg("amplitudes"), py::arg("dims"));
  m.def(
      "theorem3_bound",
      [](const Matrix& rho, const std::vector<int>& dims, double k, double omega, double alpha) {
        return qudit_report_dict(theorem3_bound(as_density(rho, dims), qudit_params(k, omega, alpha)));
      },
      py::arg("rho"), py::arg("dims"), py::arg("k"), py::arg("omega"), py::arg("alpha"));
  m.def(
      "theorem4_bound",
      [](const Matrix& rho, const std::vector<int>& dims, double k, double omega, double alpha,
         const std::string& regime, int split_m) {
        return qudit_report_dict(theorem4_bound(as_density(rho, dims),
                                                qudit_params(k, omega, alpha),
                                                parse_npartite_regime(regime, split_m)));
      },
      py::arg("rho"), py::arg("dims"), py::arg("k"), py::arg("omega"), py::arg("alpha"),
      py::arg("regime"), py::arg("split_m") = 0);

  // Example curves and property suites.
  m.def(
      "example1_grid",
      [](int nx, int ny) {
        std::vector<std::array<double, 5>> out;
        for (const auto& r : example1_grid(nx, ny)) out.push_back({r.x, r.y, r.lhs, r.z1, r.z2});
        return out;
      },
      py::arg("nx") = 51, py::arg("ny") = 51, "Rows of (x, y, lhs, z1, z2)");
  m.def(
      "example2_grid",
      [](int nx) {
        std::vector<std::array<double, 5>> out;
        for (const auto& r : example2_grid(nx)) out.push_back({r.x, r.lhs, r.y1, r.y2, r.y3});
        return out;
      },
      py::arg("nx") = 101, "Rows of (x, lhs, y1, y2, y3)");
  m.def("suite_names", [] { return suite_names(); });
  m.def(
      "run_suite",
      [](const std::string& name, long samples, std::uint64_t seed, int workers) {
        const SuiteReport r = run_suite(name, samples, seed, workers);
        py::dict d;
        d["suite"] = r.suite;
        d["samples"] = r.samples;
        d["checks"] = r.checks;
        d["violations"] = r.violations;
        d["max_violation"] = r.max_violation;
        d["elapsed_seconds"] = r.elapsed_seconds;
        return d;
      },
      py::arg("name"), py::arg("samples"), py::arg("seed") = 2024, py::arg("workers") = 1);
}
