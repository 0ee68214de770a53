#include "entmono/example_curves.hpp"

#include <cmath>
#include <stdexcept>

#include "entmono/states.hpp"

namespace entmono {

namespace {

struct TripartiteMeasures {
  double cut = 0.0;   // M_B(A1|A2A3)
  double m_ab = 0.0;  // M_B(A1A2)
  double m_ac = 0.0;  // M_B(A1A3)
};

TripartiteMeasures bures_measures(const StateVector& psi) {
  TripartiteMeasures out;
  out.cut = measure_pure_bipartite(psi, Bipartition{{0}}, MeasureKind::Bures).value;
  const DensityMatrix rho = outer(psi);
  out.m_ab = measure_two_qubit(partial_trace(rho, {0, 1}), MeasureKind::Bures);
  out.m_ac = measure_two_qubit(partial_trace(rho, {0, 2}), MeasureKind::Bures);
  return out;
}

}  // namespace

std::vector<Example1Row> example1_grid(int nx, int ny) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("example1_grid: grid counts must be >= 2");

  SchmidtParams sp;
  sp.l0 = std::sqrt(2.0) / 3.0;
  sp.l3 = std::sqrt(2.0) / 3.0;
  sp.l2 = std::sqrt(5.0) / 3.0;
  sp.l1 = sp.l4 = 0.0;
  const TripartiteMeasures m = bures_measures(schmidt_state(sp));

  std::vector<Example1Row> rows;
  rows.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int i = 0; i < nx; ++i) {
    const double x = 0.5 * i / (nx - 1);
    for (int j = 0; j < ny; ++j) {
      const double y = 1.0 + 9.0 * j / (ny - 1);
      BoundParams p{2.0, 1.5, x, y, ParamMode::Qubit};
      Example1Row row;
      row.x = x;
      row.y = y;
      row.lhs = powx(m.cut, x);
      const auto regime = condition_check_tripartite(m.m_ab, m.m_ac, p);
      if (!regime) throw std::runtime_error("example1_grid: regime condition unexpectedly empty");
      row.z1 = theorem1_bound(m.m_ab, m.m_ac, p, *regime);
      row.z2 = powx(m.m_ab, x) + powx(m.m_ac, x);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<Example2Row> example2_grid(int nx) {
  if (nx < 2) throw std::invalid_argument("example2_grid: grid count must be >= 2");

  const TripartiteMeasures m = bures_measures(w_class_example2());

  std::vector<Example2Row> rows;
  rows.reserve(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i) {
    const double x = 0.5 * i / (nx - 1);
    BoundParams p{2.0, 2.0, x, 2.0, ParamMode::Qubit};
    Example2Row row;
    row.x = x;
    row.lhs = powx(m.cut, x);
    const auto bounds = remark2_bounds(m.m_ab, m.m_ac, p);
    row.y1 = bounds.m;
    row.y2 = bounds.m3;
    row.y3 = bounds.m2;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace entmono
