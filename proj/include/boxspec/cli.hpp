#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boxspec/potentials.hpp"
#include "boxspec/quadrature.hpp"

namespace boxspec::cli {

enum class Command { solve, scan, optimize, repro, nboson };
enum class OutputFormat { csv, json };

/// Parsed and validated run request. The front end fills this from flags or
/// a key-value config file; everything here is independent of the argv
/// layer so it can be driven from tests.
struct RunConfig {
  Command command = Command::solve;

  // Problem selection.
  std::string potential = "zero";
  std::vector<double> params;
  std::optional<int> d; // radial mode when set, requires d >= 2
  int ell = 0;

  // Trial space.
  int basis = 10;
  std::optional<std::pair<double, double>> window; // explicit [a, b]
  std::optional<double> box_size;                  // [-L, L] line, [0, L] radial
  std::vector<int> states;                         // explicit state indices
  int num_states = 0;                              // or first k (0: default)

  // scan / optimize.
  std::optional<Interval> size_range;
  double scan_step = 0.1;
  std::optional<Interval> a_range;
  std::optional<Interval> b_range;

  // repro.
  std::string table;

  // nboson.
  std::string boson_kind = "harmonic";
  double coupling = 1.0;
  int particles = 2;

  // Output.
  OutputFormat output = OutputFormat::csv;
  std::optional<std::string> dump_matrix_path;
  QuadratureConfig quad;
};

/// Executes the request, writing the artifact to `out` and diagnostics to
/// `err`. Exit codes: 0 success, 1 repro tolerance failure, 2 config error,
/// 3 numeric failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace boxspec::cli
