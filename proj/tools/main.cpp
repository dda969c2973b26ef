#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxspec/cli.hpp"
#include "boxspec/tables.hpp"
#include "boxspec/version.hpp"

namespace {

using boxspec::cli::Command;
using boxspec::cli::OutputFormat;
using boxspec::cli::RunConfig;

struct FlagState {
  std::vector<double> window;
  std::vector<double> range;
  std::vector<double> a_range;
  std::vector<double> b_range;
  std::string output = "csv";
  double box_size = 0.0;
  bool has_box_size = false;
  int d = 0;
  bool has_d = false;
  std::string dump_matrix;
};

void add_output_options(CLI::App* sub, FlagState& st, RunConfig& cfg) {
  sub->add_option("--output", st.output, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--quad-nodes", cfg.quad.nodes_per_panel,
                  "Gauss-Legendre nodes per panel");
  sub->add_option("--quad-panels", cfg.quad.panels, "Quadrature panels");
  sub->add_option("--quad-grading", cfg.quad.geometric_grading,
                  "Panel grading ratio toward a singular endpoint");
  sub->add_option("--quad-tol", cfg.quad.target_rel_tol,
                  "Quadrature relative tolerance target");
}

void add_potential_options(CLI::App* sub, FlagState& st, RunConfig& cfg) {
  sub->add_option("--potential", cfg.potential,
                  "Catalog potential name (harmonic, quartic_anharmonic, "
                  "hydrogenic, singular_ABC, sine_squared_confined, zero)");
  sub->add_option("--params", cfg.params, "Potential parameters");
  sub->add_option("--d", st.d, "Spatial dimension (enables radial mode)")
      ->each([&st](const std::string&) { st.has_d = true; });
  sub->add_option("--ell", cfg.ell, "Angular momentum quantum number");
}

void finalize(const FlagState& st, RunConfig& cfg) {
  cfg.output = st.output == "json" ? OutputFormat::json : OutputFormat::csv;
  if (st.has_d) cfg.d = st.d;
  if (st.window.size() == 2) cfg.window = std::make_pair(st.window[0], st.window[1]);
  if (st.has_box_size) cfg.box_size = st.box_size;
  if (st.range.size() == 2) cfg.size_range = boxspec::Interval{st.range[0], st.range[1]};
  if (st.a_range.size() == 2) cfg.a_range = boxspec::Interval{st.a_range[0], st.a_range[1]};
  if (st.b_range.size() == 2) cfg.b_range = boxspec::Interval{st.b_range[0], st.b_range[1]};
  if (!st.dump_matrix.empty()) cfg.dump_matrix_path = st.dump_matrix;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational upper bounds for discrete spectra in a scaled "
               "particle-in-a-box sine basis, plus closed-form N-boson bounds"};
  app.set_version_flag("--version", boxspec::kVersion);
  app.set_config("--config", "", "Key-value config file; flags take precedence");
  app.require_subcommand(1);

  RunConfig cfg;
  FlagState st;

  CLI::App* solve = app.add_subcommand("solve", "Eigenvalue bounds on a fixed window");
  add_potential_options(solve, st, cfg);
  solve->add_option("--basis", cfg.basis, "Basis size N");
  solve->add_option("--window", st.window, "Window endpoints a b")->expected(2);
  solve->add_option("--box-size", st.box_size,
                    "Window size L ([-L, L] on the line, [0, L] radial)")
      ->each([&st](const std::string&) { st.has_box_size = true; });
  solve->add_option("--states", cfg.states, "State indices (0-based)");
  solve->add_option("--num-states", cfg.num_states, "First k states");
  solve->add_option("--dump-matrix", st.dump_matrix, "Write the matrix as CSV");
  add_output_options(solve, st, cfg);

  CLI::App* scan = app.add_subcommand("scan", "Eigenvalue curves over window sizes");
  add_potential_options(scan, st, cfg);
  scan->add_option("--basis", cfg.basis, "Basis size N");
  scan->add_option("--range", st.range, "Window size range LO HI")->expected(2);
  scan->add_option("--step", cfg.scan_step, "Grid step");
  scan->add_option("--num-states", cfg.num_states, "States per grid point");
  add_output_options(scan, st, cfg);

  CLI::App* optimize = app.add_subcommand("optimize", "Minimize bounds over the window");
  add_potential_options(optimize, st, cfg);
  optimize->add_option("--basis", cfg.basis, "Basis size N");
  optimize->add_option("--states", cfg.states, "State indices (0-based)");
  optimize->add_option("--num-states", cfg.num_states, "First k states");
  optimize->add_option("--range", st.range, "Window size range LO HI")->expected(2);
  optimize->add_option("--a-range", st.a_range, "Left endpoint range LO HI")->expected(2);
  optimize->add_option("--b-range", st.b_range, "Right endpoint range LO HI")->expected(2);
  add_output_options(optimize, st, cfg);

  CLI::App* repro = app.add_subcommand("repro", "Regenerate a benchmark table");
  repro->add_option("table", cfg.table, "Table name")
      ->required()
      ->check(CLI::IsMember(boxspec::tables::table_names()));
  add_output_options(repro, st, cfg);

  CLI::App* nboson = app.add_subcommand("nboson", "N-boson energy bounds");
  nboson->add_option("--kind", cfg.boson_kind, "harmonic, delta, or general");
  nboson->add_option("--c", cfg.coupling, "Coupling strength");
  nboson->add_option("--n", cfg.particles, "Particle count N");
  nboson->add_option("--potential", cfg.potential, "Pair potential for --kind general");
  nboson->add_option("--params", cfg.params, "Pair potential parameters");
  add_output_options(nboson, st, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (solve->parsed()) cfg.command = Command::solve;
  if (scan->parsed()) cfg.command = Command::scan;
  if (optimize->parsed()) cfg.command = Command::optimize;
  if (repro->parsed()) cfg.command = Command::repro;
  if (nboson->parsed()) cfg.command = Command::nboson;
  finalize(st, cfg);

  return boxspec::cli::run(cfg, std::cout, std::cerr);
}
