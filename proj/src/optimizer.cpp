#include "boxspec/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace boxspec {

namespace {

constexpr double kGolden = 0.6180339887498949; // 1/phi
constexpr double kSingularFloor = 1e-4;

void write_sig(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  os << buf;
}

double clamp_to_confinement(const Potential& v, WindowMode mode, double hi) {
  if (!v.confinement_box()) return hi;
  const Interval box = *v.confinement_box();
  const double limit = mode == WindowMode::symmetric ? std::min(-box.lo, box.hi) : box.hi;
  return std::min(hi, limit);
}

BasisWindow window_for(WindowMode mode, double size_param, int basis_size) {
  return mode == WindowMode::symmetric ? symmetric_window(size_param, basis_size)
                                       : make_window(0.0, size_param, basis_size);
}

double eigenvalue_at(const Potential& v, const BasisWindow& w, int state,
                     const QuadratureConfig& cfg, EigenMethod method) {
  const HamiltonianMatrix h = assemble(v, w, cfg);
  return eigenvalues_symmetric(h, state + 1, method).eigenvalues[state];
}

// Golden-section minimization of f on [lo, hi] down to width `tol`, keeping
// the globally best point seen. Assumes the coarse scan already bracketed
// the basin.
struct GoldenState {
  double best_x;
  double best_f;
  int evals = 0;
};

GoldenState golden_section(const std::function<double(double)>& f, double lo, double hi,
                           double tol, double seed_x, double seed_f) {
  GoldenState st{seed_x, seed_f, 0};
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  st.evals += 2;
  auto consider = [&](double x, double fx) {
    if (fx < st.best_f) {
      st.best_f = fx;
      st.best_x = x;
    }
  };
  consider(x1, f1);
  consider(x2, f2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
      consider(x1, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
      consider(x2, f2);
    }
    ++st.evals;
  }
  return st;
}

// Coarse grid scan plus golden-section refinement around the best grid cell.
GoldenState scan_then_refine(const std::function<double(double)>& f, double lo,
                             double hi, int coarse_points, double tol,
                             bool log_spaced) {
  GoldenState st{lo, 0.0, 0};
  if (hi <= lo) {
    st.best_f = f(lo);
    st.evals = 1;
    return st;
  }
  std::vector<double> grid(coarse_points);
  for (int i = 0; i < coarse_points; ++i) {
    const double t = static_cast<double>(i) / (coarse_points - 1);
    grid[i] = log_spaced ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
  }
  int best_i = 0;
  double best_f = f(grid[0]);
  ++st.evals;
  for (int i = 1; i < coarse_points; ++i) {
    const double fi = f(grid[i]);
    ++st.evals;
    if (fi < best_f) {
      best_f = fi;
      best_i = i;
    }
  }
  const double blo = grid[std::max(0, best_i - 1)];
  const double bhi = grid[std::min(coarse_points - 1, best_i + 1)];
  GoldenState ref = golden_section(f, blo, bhi, tol, grid[best_i], best_f);
  ref.evals += st.evals;
  return ref;
}

} // namespace

void ScanResult::write_csv(std::ostream& os) const {
  os << "L";
  for (std::size_t s = 0; s < eigencurves.size(); ++s) os << ",eps" << s;
  os << "\n";
  for (std::size_t g = 0; g < parameter_grid.size(); ++g) {
    write_sig(os, parameter_grid[g]);
    for (const auto& curve : eigencurves) {
      os << ",";
      write_sig(os, curve[g]);
    }
    os << "\n";
  }
}

ScanResult scan_box_size(const Potential& v, int basis_size, int num_states,
                         Interval range, double step, WindowMode mode,
                         const QuadratureConfig& cfg, EigenMethod method) {
  if (!(step > 0.0)) throw std::domain_error("scan step must be > 0");
  if (!(range.lo > 0.0)) throw std::domain_error("scan range must be positive");
  if (num_states < 1 || num_states > basis_size)
    throw std::domain_error("scan state count outside 1..N");
  const double hi = clamp_to_confinement(v, mode, range.hi);
  if (hi < range.lo)
    throw std::domain_error("scan range lies outside the confinement box");

  ScanResult out;
  for (double L = range.lo; L <= hi + 1e-12 * (1.0 + std::abs(hi)); L += step)
    out.parameter_grid.push_back(std::min(L, hi));
  out.eigencurves.assign(num_states, std::vector<double>(out.parameter_grid.size()));

  for (std::size_t g = 0; g < out.parameter_grid.size(); ++g) {
    const BasisWindow w = window_for(mode, out.parameter_grid[g], basis_size);
    const HamiltonianMatrix h = assemble(v, w, cfg);
    const SpectrumEstimate est = eigenvalues_symmetric(h, num_states, method);
    for (int s = 0; s < num_states; ++s) out.eigencurves[s][g] = est.eigenvalues[s];
  }

  out.minima.reserve(num_states);
  for (int s = 0; s < num_states; ++s) {
    const auto& curve = out.eigencurves[s];
    const std::size_t arg =
        std::min_element(curve.begin(), curve.end()) - curve.begin();
    out.minima.emplace_back(out.parameter_grid[arg], curve[arg]);
  }
  return out;
}

OptimizationReport minimize_box_size(const Potential& v, int basis_size, int state,
                                     Interval range, WindowMode mode,
                                     const QuadratureConfig& cfg, EigenMethod method) {
  if (state < 0 || state >= basis_size)
    throw std::domain_error("state index outside 0..N-1");
  if (!(range.lo > 0.0)) throw std::domain_error("window size range must be positive");
  const double hi = clamp_to_confinement(v, mode, range.hi);
  if (hi < range.lo)
    throw std::domain_error("window size range lies outside the confinement box");

  auto objective = [&](double L) {
    return eigenvalue_at(v, window_for(mode, L, basis_size), state, cfg, method);
  };
  const GoldenState st = scan_then_refine(objective, range.lo, hi, 25, 1e-3, false);

  OptimizationReport rep;
  rep.state_index = state;
  rep.best_window = window_for(mode, st.best_x, basis_size);
  rep.best_value = st.best_f;
  rep.evaluations = st.evals;
  return rep;
}

OptimizationReport minimize_endpoints(const Potential& v, int basis_size, int state,
                                      Interval a_range, Interval b_range,
                                      const QuadratureConfig& cfg, EigenMethod method) {
  if (state < 0 || state >= basis_size)
    throw std::domain_error("state index outside 0..N-1");
  if (!(a_range.lo <= a_range.hi) || !(b_range.lo <= b_range.hi))
    throw std::domain_error("endpoint ranges must be ordered");
  if (!(a_range.hi < b_range.lo))
    throw std::domain_error("endpoint ranges must satisfy a_range.hi < b_range.lo");
  if (v.singularity_order() > 0) {
    a_range.lo = std::max(a_range.lo, kSingularFloor);
    a_range.hi = std::max(a_range.hi, a_range.lo);
  }

  double a = 0.5 * (a_range.lo + a_range.hi);
  double b = 0.5 * (b_range.lo + b_range.hi);
  int evals = 0;
  auto objective = [&](double aa, double bb) {
    ++evals;
    return eigenvalue_at(v, make_window(aa, bb, basis_size), state, cfg, method);
  };

  double best = objective(a, b);
  const bool log_a = v.singularity_order() > 0 && a_range.lo > 0.0;
  for (int sweep = 0; sweep < 40; ++sweep) {
    const double before = best;
    if (a_range.lo < a_range.hi) {
      auto fa = [&](double aa) { return objective(aa, b); };
      GoldenState st = scan_then_refine(fa, a_range.lo, a_range.hi, 15,
                                        1e-6 * (a_range.hi - a_range.lo), log_a);
      if (st.best_f < best) {
        best = st.best_f;
        a = st.best_x;
      }
    }
    if (b_range.lo < b_range.hi) {
      auto fb = [&](double bb) { return objective(a, bb); };
      GoldenState st = scan_then_refine(fb, b_range.lo, b_range.hi, 15,
                                        1e-6 * (b_range.hi - b_range.lo), false);
      if (st.best_f < best) {
        best = st.best_f;
        b = st.best_x;
      }
    }
    const double rel = std::abs(before - best) / std::max(1.0, std::abs(best));
    if (rel <= 1e-12) break;
  }

  OptimizationReport rep;
  rep.state_index = state;
  rep.best_window = make_window(a, b, basis_size);
  rep.best_value = best;
  rep.evaluations = evals;
  return rep;
}

} // namespace boxspec
