#include "boxspec/tables.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "boxspec/eigensolve.hpp"
#include "boxspec/fixtures.hpp"
#include "boxspec/hamiltonian.hpp"
#include "boxspec/nboson.hpp"
#include "boxspec/optimizer.hpp"
#include "boxspec/potentials.hpp"

namespace boxspec::tables {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt_int(int v) { return std::to_string(v); }

template <typename F>
std::vector<ReproRow> parallel_rows(std::size_t count, F&& make_row) {
  std::vector<std::future<ReproRow>> futures;
  futures.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    futures.push_back(std::async(std::launch::async, make_row, i));
  std::vector<ReproRow> rows;
  rows.reserve(count);
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

ReproTable table1(const QuadratureConfig& cfg) {
  const auto& ref = fixtures::harmonic_line_rows();
  const Potential v = catalog("harmonic", {});
  ReproTable t;
  t.name = "table1";
  t.columns = {"n", "E", "eps_paper", "L_paper", "L_opt"};
  t.rows = parallel_rows(ref.size(), [&](std::size_t i) {
    const auto& row = ref[i];
    const OptimizationReport rep =
        minimize_box_size(v, 50, row.state, {5.5, 8.0}, WindowMode::symmetric, cfg);
    ReproRow out;
    out.inputs = {fmt_int(row.state), fmt(row.exact), fmt(row.reference),
                  fmt(row.best_size), fmt(rep.best_window.b)};
    out.reference = row.exact;
    out.computed = rep.best_value;
    out.delta = rep.best_value - row.exact;
    out.gated = row.state <= 9;
    out.gate_ok = !out.gated || std::abs(out.delta) < 1e-8;
    if (!out.gated) out.note = "report only";
    return out;
  });
  return t;
}

ReproTable table2(const QuadratureConfig& cfg) {
  const auto& ref = fixtures::anharmonic_rows();
  const Potential v = catalog("quartic_anharmonic", {});
  ReproTable t;
  t.name = "table2";
  t.columns = {"n", "E_accurate", "L_paper", "L_opt"};
  t.rows = parallel_rows(ref.size(), [&](std::size_t i) {
    const auto& row = ref[i];
    const OptimizationReport rep =
        minimize_box_size(v, 20, row.state, {3.0, 4.0}, WindowMode::symmetric, cfg);
    ReproRow out;
    out.inputs = {fmt_int(row.state), fmt(row.accurate), fmt(row.best_size),
                  fmt(rep.best_window.b)};
    out.reference = row.reference;
    out.computed = rep.best_value;
    out.delta = rep.best_value - row.reference;
    out.gated = true;
    out.gate_ok = std::abs(out.delta) <= (row.state <= 1 ? 1e-8 : 1e-7);
    return out;
  });
  return t;
}

ReproTable table3(const QuadratureConfig& cfg) {
  const auto& ref = fixtures::radial_oscillator_rows();
  ReproTable t;
  t.name = "table3";
  t.columns = {"d", "l", "n", "E", "L_paper", "L_opt"};
  t.rows = parallel_rows(ref.size(), [&](std::size_t i) {
    const auto& row = ref[i];
    const Potential u = effective_radial({row.d, row.ell, catalog("harmonic", {})});
    const OptimizationReport rep =
        minimize_box_size(u, 40, row.n - 1, {3.0, 12.0}, WindowMode::radial, cfg);
    ReproRow out;
    out.inputs = {fmt_int(row.d),    fmt_int(row.ell),    fmt_int(row.n),
                  fmt(row.exact),    fmt(row.best_size),  fmt(rep.best_window.b)};
    out.reference = row.reference;
    out.computed = rep.best_value;
    out.delta = rep.best_value - row.reference;
    out.gated = row.gate_tol.has_value();
    out.gate_ok = !out.gated || std::abs(out.delta) <= *row.gate_tol;
    if (!out.gated) out.note = "report only";
    return out;
  });
  return t;
}

ReproTable table4(const QuadratureConfig& cfg) {
  const auto& ref = fixtures::hydrogen_rows();
  ReproTable t;
  t.name = "table4";
  t.columns = {"l", "n", "E", "b_paper", "b_opt"};
  t.rows = parallel_rows(ref.size(), [&](std::size_t i) {
    const auto& row = ref[i];
    const Potential u = effective_radial({3, row.ell, catalog("hydrogenic", {1.0})});
    const OptimizationReport rep =
        minimize_box_size(u, 250, row.n - 1, {3.0, 190.0}, WindowMode::radial, cfg);
    ReproRow out;
    out.inputs = {fmt_int(row.ell), fmt_int(row.n), fmt(row.exact),
                  fmt(row.best_size), fmt(rep.best_window.b)};
    out.reference = row.reference;
    out.computed = rep.best_value;
    out.delta = rep.best_value - row.reference;
    out.gated = row.gated;
    if (out.gated) {
      // Weak case: assert the bound property and the published error scale.
      out.gate_ok = rep.best_value >= row.exact && rep.best_value <= -0.2499 &&
                    std::abs(out.delta) <= 5e-5;
    } else {
      out.note = "report only";
    }
    return out;
  });
  return t;
}

ReproTable table5(const QuadratureConfig& cfg) {
  const auto& ref = fixtures::confined_oscillator_rows();
  // The published operator is -Delta/2 + x^2/2 in the box [-1/2, 1/2]: solve
  // -Delta + x^2 there and halve the spectrum.
  const Potential v = catalog("harmonic", {}).confined_to({-0.5, 0.5});
  const HamiltonianMatrix h = assemble(v, symmetric_window(0.5, 250), cfg);
  const SpectrumEstimate est = eigenvalues_symmetric(h, static_cast<int>(ref.size()));
  ReproTable t;
  t.name = "table5";
  t.columns = {"n", "E_accurate"};
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const auto& row = ref[i];
    ReproRow out;
    out.inputs = {fmt_int(row.state), fmt(row.accurate)};
    out.reference = row.reference;
    out.computed = 0.5 * est.eigenvalues[i];
    out.delta = out.computed - row.reference;
    out.gated = true;
    if (row.state == 0) {
      out.gate_ok = std::abs(out.computed - fixtures::confined_oscillator_state0_gate_value()) <=
                    fixtures::confined_oscillator_state0_gate_tol();
      out.note = "gate vs " + fmt(fixtures::confined_oscillator_state0_gate_value());
    } else {
      out.gate_ok = std::abs(out.delta) <= 1e-7;
    }
    t.rows.push_back(out);
  }
  return t;
}

ReproTable table6(const QuadratureConfig& cfg) {
  const auto& ref = fixtures::sine_squared_rows();
  ReproTable t;
  t.name = "table6";
  t.columns = {"V0", "n"};
  const double half = std::numbers::pi / 2.0;
  double current_v0 = -1.0;
  SpectrumEstimate est;
  for (const auto& row : ref) {
    if (row.v0 != current_v0) {
      current_v0 = row.v0;
      const Potential v = catalog("sine_squared_confined", {row.v0});
      est = eigenvalues_symmetric(assemble(v, symmetric_window(half, 25), cfg), 6);
    }
    ReproRow out;
    out.inputs = {fmt(row.v0), fmt_int(row.state)};
    out.reference = row.reference;
    out.computed = est.eigenvalues[row.state];
    out.delta = out.computed - row.reference;
    out.gated = true;
    out.gate_ok = std::abs(out.delta) <= 1e-9;
    t.rows.push_back(out);
  }
  return t;
}

ReproTable table7(const QuadratureConfig& cfg) {
  const auto& ref = fixtures::confined_hydrogen_rows();
  ReproTable t;
  t.name = "table7";
  t.columns = {"l", "n", "b", "eps_paper"};
  t.rows = parallel_rows(ref.size(), [&](std::size_t i) {
    const auto& row = ref[i];
    const Potential u = effective_radial({3, row.ell, catalog("hydrogenic", {1.0})});
    const HamiltonianMatrix h = assemble(u, make_window(0.0, row.radius, 250), cfg);
    const SpectrumEstimate est = eigenvalues_symmetric(h, row.n);
    ReproRow out;
    out.inputs = {fmt_int(row.ell), fmt_int(row.n), fmt(row.radius),
                  fmt(row.reference)};
    out.reference = row.exact;
    out.computed = est.eigenvalues[row.n - 1];
    out.delta = out.computed - row.exact;
    out.gated = true;
    out.gate_ok = std::abs(out.delta) < 5e-5 && out.computed >= row.exact - 1e-10;
    return out;
  });
  return t;
}

ReproTable singular_table(const QuadratureConfig& cfg) {
  const auto& ref = fixtures::singular_cases();
  ReproTable t;
  t.name = "singular";
  t.columns = {"A", "B", "C", "eps_paper", "a_paper", "b_paper", "a_opt", "b_opt"};
  t.rows = parallel_rows(ref.size(), [&](std::size_t i) {
    const auto& row = ref[i];
    const Potential v = catalog("singular_ABC", {row.A, row.B, row.C});
    const OptimizationReport rep = minimize_endpoints(
        v, 100, 0, {1e-4, 0.5}, {3.0, 8.0}, cfg, EigenMethod::jacobi);
    ReproRow out;
    out.inputs = {fmt(row.A),      fmt(row.B),      fmt(row.C),
                  fmt(row.reference), fmt(row.best_a), fmt(row.best_b),
                  fmt(rep.best_window.a), fmt(rep.best_window.b)};
    out.reference = row.exact;
    out.computed = rep.best_value;
    out.delta = rep.best_value - row.exact;
    out.gated = true;
    out.gate_ok = rep.best_value >= row.exact &&
                  rep.best_value <= row.exact + row.gate_excess;
    return out;
  });
  return t;
}

ReproTable nboson_table(const QuadratureConfig& cfg) {
  ReproTable t;
  t.name = "nboson";
  t.columns = {"kind", "N", "c", "E_lower", "E_exact"};
  for (PairKind kind : {PairKind::harmonic, PairKind::delta}) {
    for (int n = 2; n <= 10; ++n) {
      BosonSystem sys{n, 1.0, kind, std::nullopt};
      const double lo = lower_bound(sys);
      const double ex = exact_energy(sys);
      const double up = upper_bound(sys);
      ReproRow out;
      out.inputs = {kind == PairKind::harmonic ? "harmonic" : "delta", fmt_int(n),
                    fmt(1.0), fmt(lo), fmt(ex)};
      out.reference = ex;
      out.computed = up;
      out.delta = up - ex;
      out.gated = true;
      const double slack = 1e-12 * std::max(1.0, std::abs(ex));
      out.gate_ok = lo <= ex + slack && ex <= up + slack;
      t.rows.push_back(out);
    }
  }
  // Quadrature route for the general kind against the harmonic closed form.
  {
    BosonSystem gen{2, 1.0, PairKind::general, catalog("harmonic", {})};
    BosonSystem closed{2, 1.0, PairKind::harmonic, std::nullopt};
    const double up = upper_bound(gen, cfg);
    const double want = upper_bound(closed);
    ReproRow out;
    out.inputs = {"general x^2", "2", fmt(1.0), "", ""};
    out.reference = want;
    out.computed = up;
    out.delta = up - want;
    out.gated = true;
    out.gate_ok = std::abs(out.delta) <= 1e-8;
    t.rows.push_back(out);
  }
  return t;
}

} // namespace

bool ReproTable::all_gates_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReproRow& r) { return !r.gated || r.gate_ok; });
}

double ReproTable::max_gated_abs_delta() const {
  double worst = 0.0;
  for (const auto& r : rows)
    if (r.gated) worst = std::max(worst, std::abs(r.delta));
  return worst;
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {
      "table1", "table2", "table3", "table4",  "table5",
      "table6", "table7", "singular", "nboson",
  };
  return names;
}

ReproTable run_table(const std::string& name, const QuadratureConfig& cfg) {
  if (name == "table1") return table1(cfg);
  if (name == "table2") return table2(cfg);
  if (name == "table3") return table3(cfg);
  if (name == "table4") return table4(cfg);
  if (name == "table5") return table5(cfg);
  if (name == "table6") return table6(cfg);
  if (name == "table7") return table7(cfg);
  if (name == "singular") return singular_table(cfg);
  if (name == "nboson") return nboson_table(cfg);
  throw std::domain_error("unknown table '" + name + "'");
}

} // namespace boxspec::tables
