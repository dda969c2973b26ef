#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxspec/quadrature.hpp"

namespace boxspec::tables {

/// One regenerated benchmark row: formatted input columns, the reference
/// value the gate compares against (when the row is gated), the recomputed
/// value, and their difference.
struct ReproRow {
  std::vector<std::string> inputs;
  std::optional<double> reference;
  double computed = 0.0;
  double delta = 0.0;
  bool gated = false;
  bool gate_ok = true;
  std::string note;
};

struct ReproTable {
  std::string name;
  std::vector<std::string> columns; // input column headers
  std::vector<ReproRow> rows;

  bool all_gates_ok() const;
  double max_gated_abs_delta() const;
};

/// Table names accepted by run_table / the repro command.
const std::vector<std::string>& table_names();

/// Recomputes the named benchmark table (rows evaluated concurrently, output
/// order fixed). Throws std::domain_error for unknown names.
ReproTable run_table(const std::string& name, const QuadratureConfig& cfg = {});

} // namespace boxspec::tables
