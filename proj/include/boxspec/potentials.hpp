#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace boxspec {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A one-dimensional potential plus the metadata assembly needs:
///  - domain_left: left boundary of the open domain (0 for radial problems,
///    -infinity for problems on the whole line);
///  - singularity_order: smallest p >= 0 such that V(r) * r^p stays bounded
///    near domain_left (0 for regular potentials);
///  - confinement_box: interval outside which the potential is an infinite
///    wall; any basis window must stay inside it;
///  - even: V(-x) = V(x), enabling exact parity zeros on symmetric windows;
///  - monomial: coefficients c0..c4 when V(x) = sum c_k x^k, enabling the
///    closed-form matrix-element path.
class Potential {
public:
  Potential() = default;

  double operator()(double x) const { return eval_(x); }

  double domain_left() const { return domain_left_; }
  int singularity_order() const { return singularity_order_; }
  const std::optional<Interval>& confinement_box() const { return confinement_; }
  bool even() const { return even_; }
  const std::optional<std::array<double, 5>>& monomial() const { return monomial_; }
  const std::string& id() const { return id_; }

  /// Copy of this potential with a hard confinement box attached.
  Potential confined_to(Interval box) const;

  /// General potential on the line (domain_left = -inf, regular).
  static Potential from_function(std::function<double(double)> f, std::string id,
                                 bool even = false);

  /// General radial potential on (0, inf) with a power singularity at 0.
  static Potential radial_function(std::function<double(double)> f, std::string id,
                                   int singularity_order);

  /// Polynomial potential sum c_k x^k, k = 0..4, carrying the exact
  /// matrix-element path.
  static Potential polynomial(const std::array<double, 5>& coeffs, std::string id);

  /// Polynomial restricted to the radial domain (0, inf). Keeps the exact
  /// matrix-element path; the singularity order is metadata only.
  static Potential radial_polynomial(const std::array<double, 5>& coeffs,
                                     std::string id, int singularity_order);

private:
  std::function<double(double)> eval_ = [](double) { return 0.0; };
  double domain_left_ = 0.0;
  int singularity_order_ = 0;
  std::optional<Interval> confinement_;
  bool even_ = false;
  std::optional<std::array<double, 5>> monomial_;
  std::string id_ = "zero";
};

/// Named potentials used by the CLI config format. Stable names:
///   harmonic []                    V(x) = x^2
///   quartic_anharmonic []          V(x) = x^2 + x^4
///   hydrogenic [e]                 V(r) = -e^2 / r
///   singular_ABC [A, B, C]         V(r) = A r^2 + B r^-4 + C r^-6
///   sine_squared_confined [V0]     V0 sin^2(x) on [-pi/2, pi/2], wall outside
///   zero []                        V = 0
Potential catalog(const std::string& name, const std::vector<double>& params);

/// Radial reduction input: dimension d >= 2, angular momentum ell >= 0,
/// spherically symmetric potential V(r). The pair (d=2, ell=0) is not
/// representable (see effective_radial).
struct RadialProblem {
  int d = 3;
  int ell = 0;
  Potential v;
};

/// (2 ell + d - 1)(2 ell + d - 3) / 4, invariant under (d, ell) -> (d-2, ell+1).
double centrifugal_coefficient(int d, int ell);

/// Effective 1D potential U(r) = V(r) + centrifugal_coefficient / r^2 of the
/// reduced radial equation. Rejects d = 2, ell = 0, where the coefficient is
/// -1/4 and the reduced operator is unbounded below near r = 0.
Potential effective_radial(const RadialProblem& p);

/// Exact d-dimensional oscillator level 4n + 2 ell + d - 4, n >= 1.
double oscillator_exact_energy(int n, int ell, int d);

/// Exact hydrogenic level -e^4 / (4 (n + ell)^2), n >= 1.
double hydrogen_exact_energy(int n, int ell, double e);

/// Ground state of -d^2/dr^2 + r^2 + B r^-4 + C r^-6, known in closed form
/// only on the parameter manifold (2 sqrt(C) + B)^2 = C (1 + 8 sqrt(C)).
/// on_manifold reports whether the constraint holds to 1e-12 relative;
/// energy = 4 + B / sqrt(C) is only meaningful when it does. residual is the
/// relative constraint defect either way.
struct QesGroundState {
  bool on_manifold = false;
  double energy = 0.0;
  double residual = 0.0;
};
QesGroundState singular_ground_state(double B, double C);

/// The twelve exactly solvable confined-hydrogen configurations (A = 1):
/// quantum numbers, confinement radius, and exact energy.
struct ConfinedHydrogenCase {
  int ell;
  int n; // 1 + number of radial nodes
  double radius;
  double energy;
};
std::vector<ConfinedHydrogenCase> confined_hydrogen_cases();

} // namespace boxspec
