#include "boxspec/nboson.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boxspec {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const BosonSystem& sys) {
  if (sys.n_particles < 2) throw std::domain_error("boson system requires N >= 2");
  if (!(sys.coupling > 0.0)) throw std::domain_error("boson coupling must be > 0");
  if (sys.kind == PairKind::general && !sys.pair_potential)
    throw std::domain_error("general boson kind requires a pair potential");
}

double nm1_sqrt_n(const BosonSystem& sys) {
  const double n = sys.n_particles;
  return (n - 1.0) * std::sqrt(n);
}

} // namespace

double harmonic_bound_ratio() { return std::sqrt(kPi * kPi / 3.0 - 2.0); }

double lower_bound(const BosonSystem& sys) {
  validate(sys);
  const double n = sys.n_particles;
  const double c = sys.coupling;
  switch (sys.kind) {
    case PairKind::harmonic:
      return std::sqrt(c) * nm1_sqrt_n(sys);
    case PairKind::delta:
      return -c * c * (n - 1.0) * n * n / 32.0;
    case PairKind::general:
      throw std::domain_error(
          "lower bound for a general pair potential needs the exact reduced "
          "ground state and is not supported");
  }
  throw std::domain_error("unknown pair kind");
}

double exact_energy(const BosonSystem& sys) {
  validate(sys);
  const double n = sys.n_particles;
  const double c = sys.coupling;
  switch (sys.kind) {
    case PairKind::harmonic:
      return std::sqrt(c) * nm1_sqrt_n(sys);
    case PairKind::delta:
      return -c * c * n * (n * n - 1.0) / 48.0;
    case PairKind::general:
      throw std::domain_error("no exact energy is known for a general pair potential");
  }
  throw std::domain_error("unknown pair kind");
}

double trial_autocorrelation_weight(double u, double a) {
  if (!(a > 0.0)) throw std::domain_error("box size must be > 0");
  const double t = std::abs(u);
  if (t >= a) return 0.0;
  const double arg = 2.0 * kPi * t / a;
  return ((a - t) * (1.0 + 0.5 * std::cos(arg)) +
          3.0 * a / (4.0 * kPi) * std::sin(arg)) /
         (a * a);
}

double product_trial_pair_expectation(const Potential& v, double a,
                                      const QuadratureConfig& cfg) {
  auto f = [&](double u) { return v(u) * trial_autocorrelation_weight(u, a); };
  // Split at the |u| kink of the weight.
  return integrate(f, -a, 0.0, cfg).value + integrate(f, 0.0, a, cfg).value;
}

double product_trial_energy(const BosonSystem& sys, double a,
                            const QuadratureConfig& cfg) {
  validate(sys);
  if (sys.kind != PairKind::general)
    throw std::domain_error("product_trial_energy applies to the general kind");
  const double kinetic = kPi * kPi / (a * a);
  const double pair = sys.coupling *
                      product_trial_pair_expectation(*sys.pair_potential, a, cfg);
  return kinetic + 0.5 * sys.n_particles * pair;
}

double upper_bound(const BosonSystem& sys, const QuadratureConfig& cfg) {
  validate(sys);
  const double n = sys.n_particles;
  const double c = sys.coupling;
  switch (sys.kind) {
    case PairKind::harmonic:
      return std::sqrt(c) * harmonic_bound_ratio() * nm1_sqrt_n(sys);
    case PairKind::delta:
      return -9.0 * c * c * (n - 1.0) * n * n / (64.0 * kPi * kPi);
    case PairKind::general:
      break;
  }

  // Golden-section on log a, after a coarse logarithmic scan.
  auto objective = [&](double log_a) {
    return product_trial_energy(sys, std::exp(log_a), cfg);
  };
  const double lo = std::log(5e-2), hi = std::log(1e3);
  const int coarse = 33;
  double best_x = lo, best_f = objective(lo);
  for (int i = 1; i < coarse; ++i) {
    const double x = lo + (hi - lo) * i / (coarse - 1);
    const double f = objective(x);
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
  }
  const double span = (hi - lo) / (coarse - 1);
  double xl = best_x - span, xh = best_x + span;
  constexpr double kGolden = 0.6180339887498949;
  double x1 = xh - kGolden * (xh - xl), x2 = xl + kGolden * (xh - xl);
  double f1 = objective(x1), f2 = objective(x2);
  while (xh - xl > 1e-9) {
    if (f1 <= f2) {
      xh = x2;
      x2 = x1;
      f2 = f1;
      x1 = xh - kGolden * (xh - xl);
      f1 = objective(x1);
    } else {
      xl = x1;
      x1 = x2;
      f1 = f2;
      x2 = xl + kGolden * (xh - xl);
      f2 = objective(x2);
    }
  }
  return (n - 1.0) * std::min(std::min(f1, f2), best_f);
}

} // namespace boxspec
