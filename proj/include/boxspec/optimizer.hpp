#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "boxspec/eigensolve.hpp"
#include "boxspec/hamiltonian.hpp"
#include "boxspec/potentials.hpp"
#include "boxspec/quadrature.hpp"

namespace boxspec {

/// How a single size parameter L maps to a window: [-L, L] on the line,
/// [0, L] for radial problems.
enum class WindowMode { symmetric, radial };

/// Eigenvalue curves over a grid of window sizes, plus the recorded minimum
/// of each curve.
struct ScanResult {
  std::vector<double> parameter_grid;
  std::vector<std::vector<double>> eigencurves;  // [state][grid point]
  std::vector<std::pair<double, double>> minima; // per state: (L*, eps*)

  /// Columns L, eps0, ..., eps_{k-1}; 10 significant digits.
  void write_csv(std::ostream& os) const;
};

struct OptimizationReport {
  int state_index = 0;
  BasisWindow best_window;
  double best_value = 0.0;
  int evaluations = 0;
};

/// Evaluates eps_0..eps_{num_states-1} on the grid range.lo, lo+step, ...
/// For confined potentials the range is clamped to the confinement box; a
/// range entirely outside it is an error.
ScanResult scan_box_size(const Potential& v, int basis_size, int num_states,
                         Interval range, double step, WindowMode mode,
                         const QuadratureConfig& cfg = {},
                         EigenMethod method = EigenMethod::ql);

/// Minimizes eps_state over the window size: coarse grid (25 points),
/// then golden-section refinement to interval width 1e-3. best_value is the
/// minimum over every evaluation made.
OptimizationReport minimize_box_size(const Potential& v, int basis_size, int state,
                                     Interval range, WindowMode mode,
                                     const QuadratureConfig& cfg = {},
                                     EigenMethod method = EigenMethod::ql);

/// Minimizes eps_state over both endpoints of the window [a, b]:
/// coordinate descent alternating golden-section searches in a and b until
/// a full sweep improves by less than 1e-12 relative. For singular
/// potentials a is floored at 1e-4. Requires a_range.hi < b_range.lo.
/// Degenerate ranges (lo == hi) pin that coordinate.
OptimizationReport minimize_endpoints(const Potential& v, int basis_size, int state,
                                      Interval a_range, Interval b_range,
                                      const QuadratureConfig& cfg = {},
                                      EigenMethod method = EigenMethod::jacobi);

} // namespace boxspec
