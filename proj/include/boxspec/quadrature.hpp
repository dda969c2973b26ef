#pragma once

#include <functional>
#include <vector>

#include "boxspec/basis.hpp"
#include "boxspec/errors.hpp"
#include "boxspec/potentials.hpp"

namespace boxspec {

/// Composite Gauss-Legendre configuration.
struct QuadratureConfig {
  int nodes_per_panel = 64;
  int panels = 8;
  double geometric_grading = 0.5; // panel-width ratio toward a singular endpoint
  double target_rel_tol = 1e-12;
};

struct IntegrationResult {
  double value = 0.0;
  double err_estimate = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1]. Cached per order;
/// thread-safe.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Composite Gauss-Legendre integral of f over [a, b]. err_estimate is
/// |value - value_refined| where value_refined doubles nodes_per_panel on the
/// same panels. With singular_left the panels are geometrically graded
/// toward a. Throws integration_error naming the abscissa if f evaluates
/// non-finite at a node.
IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg, bool singular_left = false);

/// Validates that the window sits inside the potential's domain and
/// confinement box. Windows may start exactly at the domain boundary for
/// singularity orders <= 2 (the matrix elements stay finite there); stronger
/// singularities require strict clearance.
void check_window_compat(const Potential& v, const BasisWindow& w);

/// (phi_i, V phi_j) over the window, 1-based i, j. Uses the product-to-sum
/// identity phi_i phi_j = [cos((i-j) pi chi) - cos((i+j) pi chi)] / (b-a) so
/// only smooth oscillatory moments of V are ever integrated; polynomial
/// potentials dispatch to closed-form antiderivatives. Symmetric in (i, j)
/// by construction.
double potential_matrix_element(const Potential& v, int i, int j,
                                const BasisWindow& w, const QuadratureConfig& cfg);

/// Moment table backing a full matrix assembly: the 2N+1 window moments of V
/// are integrated once and every element is a scaled difference of two of
/// them. Produces values identical to potential_matrix_element.
class PotentialElementTable {
public:
  PotentialElementTable(const Potential& v, const BasisWindow& w,
                        const QuadratureConfig& cfg);

  /// (phi_i, V phi_j), 1-based.
  double element(int i, int j) const;

private:
  const BasisWindow window_;
  bool parity_zero_ = false;   // even potential on a symmetric window
  bool difference_form_ = false; // singular potentials: 1-cos moments
  std::vector<double> moments_; // m = 0 .. 2N
};

} // namespace boxspec
