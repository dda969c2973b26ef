#include "boxspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "boxspec/eigensolve.hpp"
#include "boxspec/hamiltonian.hpp"
#include "boxspec/nboson.hpp"
#include "boxspec/optimizer.hpp"
#include "boxspec/tables.hpp"
#include "boxspec/version.hpp"

namespace boxspec::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::solve: return "solve";
    case Command::scan: return "scan";
    case Command::optimize: return "optimize";
    case Command::repro: return "repro";
    case Command::nboson: return "nboson";
  }
  return "?";
}

Potential build_potential(const RunConfig& cfg) {
  Potential v = catalog(cfg.potential, cfg.params);
  if (cfg.d) {
    if (*cfg.d < 2) throw std::domain_error("radial mode requires d >= 2");
    if (cfg.ell < 0) throw std::domain_error("ell must be >= 0");
    v = effective_radial({*cfg.d, cfg.ell, v});
  }
  return v;
}

WindowMode mode_of(const RunConfig& cfg) {
  return cfg.d ? WindowMode::radial : WindowMode::symmetric;
}

BasisWindow resolve_window(const RunConfig& cfg) {
  if (cfg.basis < 1) throw std::domain_error("basis size must be >= 1");
  if (cfg.window)
    return make_window(cfg.window->first, cfg.window->second, cfg.basis);
  if (cfg.box_size) {
    if (cfg.d) return make_window(0.0, *cfg.box_size, cfg.basis);
    return symmetric_window(*cfg.box_size, cfg.basis);
  }
  throw std::domain_error("solve requires --window A B or --box-size L");
}

std::vector<int> resolve_states(const RunConfig& cfg, int default_count) {
  if (!cfg.states.empty()) {
    for (int s : cfg.states)
      if (s < 0 || s >= cfg.basis)
        throw std::domain_error("state index " + std::to_string(s) +
                                " outside 0..N-1");
    return cfg.states;
  }
  const int k = cfg.num_states > 0 ? cfg.num_states
                                   : std::min(default_count, cfg.basis);
  if (k < 1 || k > cfg.basis)
    throw std::domain_error("state count outside 1..N");
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) out[i] = i;
  return out;
}

ordered_json quad_json(const QuadratureConfig& q) {
  return {{"nodes_per_panel", q.nodes_per_panel},
          {"panels", q.panels},
          {"geometric_grading", q.geometric_grading},
          {"target_rel_tol", q.target_rel_tol}};
}

ordered_json base_meta(const RunConfig& cfg, const Potential& v) {
  ordered_json meta;
  meta["version"] = kVersion;
  meta["command"] = command_name(cfg.command);
  meta["potential"] = v.id();
  if (cfg.d) {
    meta["d"] = *cfg.d;
    meta["ell"] = cfg.ell;
  }
  meta["basis"] = cfg.basis;
  meta["quadrature"] = quad_json(cfg.quad);
  return meta;
}

void emit_json(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << "\n";
}

int run_solve(const RunConfig& cfg, std::ostream& out) {
  const Potential v = build_potential(cfg);
  const BasisWindow w = resolve_window(cfg);
  const HamiltonianMatrix h = assemble(v, w, cfg.quad);
  if (cfg.dump_matrix_path) {
    std::ofstream dump(*cfg.dump_matrix_path);
    if (!dump) throw std::domain_error("cannot open dump file " + *cfg.dump_matrix_path);
    h.write_csv(dump);
  }
  const std::vector<int> states = resolve_states(cfg, 10);
  const int k = *std::max_element(states.begin(), states.end()) + 1;
  const SpectrumEstimate est = eigenvalues_symmetric(h, k);

  if (cfg.output == OutputFormat::csv) {
    out << "state,energy\n";
    for (int s : states) out << s << "," << fmt(est.eigenvalues[s]) << "\n";
  } else {
    ordered_json doc;
    doc["meta"] = base_meta(cfg, v);
    doc["meta"]["window"] = {{"a", w.a}, {"b", w.b}};
    doc["meta"]["residual_bound"] = est.residual_bound;
    ordered_json rows = ordered_json::array();
    for (int s : states)
      rows.push_back({{"state", s}, {"energy", est.eigenvalues[s]}});
    doc["rows"] = rows;
    emit_json(out, doc);
  }
  return 0;
}

int run_scan(const RunConfig& cfg, std::ostream& out) {
  const Potential v = build_potential(cfg);
  if (!cfg.size_range) throw std::domain_error("scan requires --range LO HI");
  const int k = cfg.num_states > 0 ? cfg.num_states : 1;
  const ScanResult res = scan_box_size(v, cfg.basis, k, *cfg.size_range,
                                       cfg.scan_step, mode_of(cfg), cfg.quad);
  if (cfg.output == OutputFormat::csv) {
    res.write_csv(out);
  } else {
    ordered_json doc;
    doc["meta"] = base_meta(cfg, v);
    doc["meta"]["range"] = {{"lo", cfg.size_range->lo}, {"hi", cfg.size_range->hi}};
    doc["meta"]["step"] = cfg.scan_step;
    ordered_json minima = ordered_json::array();
    for (std::size_t s = 0; s < res.minima.size(); ++s)
      minima.push_back({{"state", s},
                        {"L", res.minima[s].first},
                        {"eps", res.minima[s].second}});
    doc["meta"]["minima"] = minima;
    ordered_json rows = ordered_json::array();
    for (std::size_t g = 0; g < res.parameter_grid.size(); ++g) {
      ordered_json row;
      row["L"] = res.parameter_grid[g];
      ordered_json eps = ordered_json::array();
      for (const auto& curve : res.eigencurves) eps.push_back(curve[g]);
      row["eps"] = eps;
      rows.push_back(row);
    }
    doc["rows"] = rows;
    emit_json(out, doc);
  }
  return 0;
}

int run_optimize(const RunConfig& cfg, std::ostream& out) {
  const Potential v = build_potential(cfg);
  const std::vector<int> states = resolve_states(cfg, 1);
  const bool endpoint_mode = cfg.a_range && cfg.b_range;
  if (!endpoint_mode && !cfg.size_range)
    throw std::domain_error(
        "optimize requires --range LO HI or both --a-range and --b-range");

  std::vector<OptimizationReport> reports;
  for (int s : states) {
    if (endpoint_mode)
      reports.push_back(minimize_endpoints(v, cfg.basis, s, *cfg.a_range,
                                           *cfg.b_range, cfg.quad));
    else
      reports.push_back(minimize_box_size(v, cfg.basis, s, *cfg.size_range,
                                          mode_of(cfg), cfg.quad));
  }

  if (cfg.output == OutputFormat::csv) {
    out << "state,a,b,value,evaluations\n";
    for (const auto& r : reports)
      out << r.state_index << "," << fmt(r.best_window.a) << ","
          << fmt(r.best_window.b) << "," << fmt(r.best_value) << ","
          << r.evaluations << "\n";
  } else {
    ordered_json doc;
    doc["meta"] = base_meta(cfg, v);
    if (cfg.size_range)
      doc["meta"]["range"] = {{"lo", cfg.size_range->lo}, {"hi", cfg.size_range->hi}};
    if (endpoint_mode) {
      doc["meta"]["a_range"] = {{"lo", cfg.a_range->lo}, {"hi", cfg.a_range->hi}};
      doc["meta"]["b_range"] = {{"lo", cfg.b_range->lo}, {"hi", cfg.b_range->hi}};
    }
    ordered_json rows = ordered_json::array();
    for (const auto& r : reports)
      rows.push_back({{"state", r.state_index},
                      {"a", r.best_window.a},
                      {"b", r.best_window.b},
                      {"value", r.best_value},
                      {"evaluations", r.evaluations}});
    doc["rows"] = rows;
    emit_json(out, doc);
  }
  return 0;
}

int run_repro(const RunConfig& cfg, std::ostream& out) {
  const tables::ReproTable table = tables::run_table(cfg.table, cfg.quad);
  if (cfg.output == OutputFormat::csv) {
    for (const auto& col : table.columns) out << col << ",";
    out << "reference,computed,delta,gate\n";
    for (const auto& row : table.rows) {
      for (const auto& in : row.inputs) out << in << ",";
      out << (row.reference ? fmt(*row.reference) : "") << ","
          << fmt(row.computed) << "," << fmt(row.delta) << ","
          << (row.gated ? (row.gate_ok ? "ok" : "FAIL") : "") << "\n";
    }
    out << "# max_gated_abs_delta=" << fmt(table.max_gated_abs_delta()) << "\n";
    out << "# gates=" << (table.all_gates_ok() ? "ok" : "FAILED") << "\n";
  } else {
    ordered_json doc;
    ordered_json meta;
    meta["version"] = kVersion;
    meta["command"] = "repro";
    meta["table"] = table.name;
    meta["quadrature"] = quad_json(cfg.quad);
    meta["max_gated_abs_delta"] = table.max_gated_abs_delta();
    meta["gates_ok"] = table.all_gates_ok();
    doc["meta"] = meta;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json r;
      for (std::size_t c = 0; c < table.columns.size(); ++c)
        r[table.columns[c]] = row.inputs[c];
      if (row.reference)
        r["reference"] = *row.reference;
      else
        r["reference"] = nullptr;
      r["computed"] = row.computed;
      r["delta"] = row.delta;
      r["gated"] = row.gated;
      r["gate_ok"] = row.gate_ok;
      if (!row.note.empty()) r["note"] = row.note;
      rows.push_back(r);
    }
    doc["rows"] = rows;
    emit_json(out, doc);
  }
  return table.all_gates_ok() ? 0 : 1;
}

int run_nboson(const RunConfig& cfg, std::ostream& out) {
  BosonSystem sys;
  sys.n_particles = cfg.particles;
  sys.coupling = cfg.coupling;
  if (cfg.boson_kind == "harmonic") {
    sys.kind = PairKind::harmonic;
  } else if (cfg.boson_kind == "delta") {
    sys.kind = PairKind::delta;
  } else if (cfg.boson_kind == "general") {
    sys.kind = PairKind::general;
    sys.pair_potential = catalog(cfg.potential, cfg.params);
  } else {
    throw std::domain_error("nboson kind must be harmonic, delta, or general");
  }

  const bool soluble = sys.kind != PairKind::general;
  const double up = upper_bound(sys, cfg.quad);
  std::optional<double> lo, ex;
  if (soluble) {
    lo = lower_bound(sys);
    ex = exact_energy(sys);
  }

  if (cfg.output == OutputFormat::csv) {
    out << "kind,N,c,lower,exact,upper\n";
    out << cfg.boson_kind << "," << sys.n_particles << "," << fmt(sys.coupling)
        << "," << (lo ? fmt(*lo) : "") << "," << (ex ? fmt(*ex) : "") << ","
        << fmt(up) << "\n";
  } else {
    ordered_json doc;
    ordered_json meta;
    meta["version"] = kVersion;
    meta["command"] = "nboson";
    meta["kind"] = cfg.boson_kind;
    meta["quadrature"] = quad_json(cfg.quad);
    doc["meta"] = meta;
    ordered_json row;
    row["kind"] = cfg.boson_kind;
    row["N"] = sys.n_particles;
    row["c"] = sys.coupling;
    row["lower"] = lo ? ordered_json(*lo) : ordered_json(nullptr);
    row["exact"] = ex ? ordered_json(*ex) : ordered_json(nullptr);
    row["upper"] = up;
    doc["rows"] = ordered_json::array({row});
    emit_json(out, doc);
  }
  return 0;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::solve: return run_solve(cfg, out);
      case Command::scan: return run_scan(cfg, out);
      case Command::optimize: return run_optimize(cfg, out);
      case Command::repro: return run_repro(cfg, out);
      case Command::nboson: return run_nboson(cfg, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const integration_error& e) {
    err << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const solver_error& e) {
    err << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numeric error: " << e.what() << "\n";
    return 3;
  }
}

} // namespace boxspec::cli
