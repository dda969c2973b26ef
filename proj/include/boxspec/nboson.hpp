#pragma once

#include <optional>

#include "boxspec/potentials.hpp"
#include "boxspec/quadrature.hpp"

namespace boxspec {

/// N identical bosons on the line bound by attractive pair potentials, with
/// the centre-of-mass motion removed. The two soluble pair interactions are
/// built in; `general` carries an arbitrary evaluatable pair potential
/// c * V(x_i - x_j). The delta interaction -c delta(x) is representable only
/// through its own kind: it has no pointwise evaluator, so the quadrature
/// path can never receive it and requests for it always take the closed
/// form.
enum class PairKind { harmonic, delta, general };

struct BosonSystem {
  int n_particles = 2;  // N >= 2
  double coupling = 1.0; // c > 0
  PairKind kind = PairKind::harmonic;
  std::optional<Potential> pair_potential; // required for PairKind::general
};

/// Reduction of the ground-state expectation to a one-body operator whose
/// spectral bottom bounds E from below:
///   harmonic: sqrt(c) (N-1) sqrt(N)
///   delta:    -c^2 (N-1) N^2 / 32
/// The general kind is unsupported: it would need the exact reduced ground
/// state.
double lower_bound(const BosonSystem& sys);

/// Known exact ground-state energies:
///   harmonic: sqrt(c) (N-1) sqrt(N)
///   delta:    -c^2 N (N^2 - 1) / 48
double exact_energy(const BosonSystem& sys);

/// Product-trial upper bound (N-1) min_a [ (pi/a)^2 + (N/2) W(a) ] where
/// W(a) is the pair expectation in the box-ground-state product trial.
/// Closed forms:
///   harmonic: sqrt(c) A (N-1) sqrt(N),  A = sqrt(pi^2/3 - 2) ~ 1.13572
///   delta:    -9 c^2 (N-1) N^2 / (64 pi^2)
/// The general kind minimizes numerically over the box size.
double upper_bound(const BosonSystem& sys, const QuadratureConfig& cfg = {});

/// sqrt(pi^2/3 - 2), the harmonic upper/exact ratio.
double harmonic_bound_ratio();

/// Autocorrelation weight of the squared box ground state:
///   w_a(u) = Int phi^2(x) phi^2(x - u) dx,  phi(x) = sqrt(2/a) cos(pi x / a)
/// supported on |u| <= a. Reduces the two-body pair expectation
/// Int Int phi^2(x1) phi^2(x2) V(x1 - x2) dx1 dx2 to Int V(u) w_a(u) du:
/// substitute u = x1 - x2 and integrate x2 out at fixed u.
double trial_autocorrelation_weight(double u, double a);

/// The reduced 1D pair expectation Int V(u) w_a(u) du by quadrature.
double product_trial_pair_expectation(const Potential& v, double a,
                                      const QuadratureConfig& cfg = {});

/// The bracket of the upper bound at fixed box size a (before the (N-1)
/// factor), for the general kind.
double product_trial_energy(const BosonSystem& sys, double a,
                            const QuadratureConfig& cfg = {});

} // namespace boxspec
