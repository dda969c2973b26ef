#include "boxspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace boxspec {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_abscissa(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

GaussRule compute_gauss_legendre(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int k = 0; k < half; ++k) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(kPi * (k + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= order; ++n) {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[k] = -x;
    rule.nodes[order - 1 - k] = x;
    rule.weights[k] = w;
    rule.weights[order - 1 - k] = w;
  }
  return rule;
}

} // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 2) throw std::domain_error("Gauss-Legendre order must be >= 2");
  static std::mutex mtx;
  static std::map<int, GaussRule> cache;
  std::scoped_lock lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

namespace {

// Panel boundaries for a composite rule: `count` uniform panels, optionally
// geometrically graded toward a (smallest panel first).
std::vector<double> graded_boundaries(double a, double b, int count, double ratio) {
  std::vector<double> bounds;
  bounds.reserve(count + 1);
  bounds.push_back(a);
  const double width = b - a;
  const double scale = width * (1.0 - ratio) / (1.0 - std::pow(ratio, count));
  double x = a;
  for (int i = 0; i < count - 1; ++i) {
    x += scale * std::pow(ratio, count - 1 - i);
    bounds.push_back(x);
  }
  bounds.push_back(b);
  return bounds;
}

std::vector<double> uniform_boundaries(double a, double b, int count) {
  std::vector<double> bounds;
  bounds.reserve(count + 1);
  for (int i = 0; i < count; ++i) bounds.push_back(a + (b - a) * i / count);
  bounds.push_back(b);
  return bounds;
}

double panel_sum(const std::function<double(double)>& f,
                 const std::vector<double>& bounds, int order) {
  const GaussRule& rule = gauss_legendre(order);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
    const double mid = 0.5 * (bounds[p] + bounds[p + 1]);
    const double hw = 0.5 * (bounds[p + 1] - bounds[p]);
    double acc = 0.0;
    for (int q = 0; q < order; ++q) {
      const double x = mid + hw * rule.nodes[q];
      const double fx = f(x);
      if (!std::isfinite(fx))
        throw integration_error("integrand evaluated non-finite at x = " +
                                fmt_abscissa(x));
      acc += rule.weights[q] * fx;
    }
    total += acc * hw;
  }
  return total;
}

} // namespace

IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const QuadratureConfig& cfg, bool singular_left) {
  if (!(a < b)) throw integration_error("integration interval requires a < b");
  if (cfg.nodes_per_panel < 2 || cfg.panels < 1)
    throw std::domain_error("quadrature config requires nodes_per_panel >= 2, panels >= 1");
  const std::vector<double> bounds =
      singular_left ? graded_boundaries(a, b, cfg.panels, cfg.geometric_grading)
                    : uniform_boundaries(a, b, cfg.panels);
  IntegrationResult out;
  out.value = panel_sum(f, bounds, cfg.nodes_per_panel);
  const double refined = panel_sum(f, bounds, 2 * cfg.nodes_per_panel);
  out.err_estimate = std::abs(out.value - refined);
  return out;
}

void check_window_compat(const Potential& v, const BasisWindow& w) {
  const double left = v.domain_left();
  if (std::isfinite(left)) {
    if (w.a < left)
      throw std::domain_error("window [" + std::to_string(w.a) + ", " +
                              std::to_string(w.b) +
                              "] extends past the potential domain boundary");
    if (v.singularity_order() >= 3 && !(w.a > left))
      throw std::domain_error(
          "potential '" + v.id() + "' (singularity order " +
          std::to_string(v.singularity_order()) +
          ") requires the window to start strictly inside the domain");
  }
  if (v.confinement_box()) {
    const Interval box = *v.confinement_box();
    const double slack = 1e-12 * (1.0 + std::abs(box.hi - box.lo));
    if (w.a < box.lo - slack || w.b > box.hi + slack)
      throw std::domain_error("window exceeds the confinement box of '" + v.id() + "'");
  }
}

namespace {

// ---------------------------------------------------------------------------
// Window moments.
//
// With chi = (x-a)/(b-a) the basis product is
//   phi_i phi_j = [cos((i-j) pi chi) - cos((i+j) pi chi)] / (b-a),
// so every matrix element is a difference of two moments of V:
//   regular V:   P_ij = [I(|i-j|) - I(i+j)] / (b-a),  I(m) = Int V cos(m pi chi)
//   singular V:  P_ij = [J(i+j) - J(|i-j|)] / (b-a),  J(m) = Int V (1-cos(m pi chi))
// The J form keeps the integrand finite at a singular left endpoint:
// 1 - cos(m pi chi) = 2 sin^2(m pi chi / 2) vanishes like chi^2 there, which
// is exactly the suppression the basis product itself has. Computing the I
// form and subtracting would cancel catastrophically instead.
// ---------------------------------------------------------------------------

int oscillation_panels(int m, const QuadratureConfig& cfg) {
  // Keep each panel under about two cosine periods.
  return std::max(cfg.panels, (m + 3) / 4);
}

std::vector<double> moment_boundaries(const Potential& v, const BasisWindow& w, int m,
                                      const QuadratureConfig& cfg) {
  std::vector<double> bounds =
      uniform_boundaries(w.a, w.b, oscillation_panels(m, cfg));
  if (v.singularity_order() > 0) {
    const double clearance = w.a - v.domain_left();
    if (clearance > 0.0) {
      // Subdivide the leftmost panel geometrically until the first panel is
      // no wider than the distance to the singularity.
      const double w0 = bounds[1] - bounds[0];
      std::vector<double> graded;
      double width = w0;
      int depth = 0;
      while (width > clearance && depth < 80) {
        width *= cfg.geometric_grading;
        graded.push_back(w.a + width);
        ++depth;
      }
      if (!graded.empty()) {
        std::reverse(graded.begin(), graded.end());
        bounds.insert(bounds.begin() + 1, graded.begin(), graded.end());
      }
    }
  }
  return bounds;
}

// Int_0^W u^k cos(omega u) du with omega = m pi / W (so sin(omega W) = 0 and
// cos(omega W) = (-1)^m), for k = 0..4.
double power_cos_integral(int k, double width, int m) {
  if (m == 0) return std::pow(width, k + 1) / (k + 1);
  const double omega = m * kPi / width;
  const double w2 = omega * omega;
  const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
  switch (k) {
    case 0:
      return 0.0;
    case 1:
      return (sgn - 1.0) / w2;
    case 2:
      return 2.0 * width * sgn / w2;
    case 3:
      return (3.0 * width * width / w2 - 6.0 / (w2 * w2)) * sgn + 6.0 / (w2 * w2);
    case 4:
      return (4.0 * width * width * width / w2 - 24.0 * width / (w2 * w2)) * sgn;
    default:
      throw std::domain_error("polynomial moment supports powers 0..4");
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// I(m) for polynomial V, exactly: expand x^k about the left endpoint.
double analytic_cos_moment(const std::array<double, 5>& coeffs, const BasisWindow& w,
                           int m) {
  const double width = w.width();
  double total = 0.0;
  for (int k = 0; k <= 4; ++k) {
    if (coeffs[k] == 0.0) continue;
    double term = 0.0;
    for (int j = 0; j <= k; ++j)
      term += binomial(k, j) * std::pow(w.a, k - j) * power_cos_integral(j, width, m);
    total += coeffs[k] * term;
  }
  return total;
}

double numeric_cos_moment(const Potential& v, const BasisWindow& w, int m,
                          const QuadratureConfig& cfg) {
  const double width = w.width();
  const double freq = m * kPi / width;
  const double a = w.a;
  auto f = [&](double x) { return v(x) * std::cos(freq * (x - a)); };
  return panel_sum(f, moment_boundaries(v, w, m, cfg), cfg.nodes_per_panel);
}

// J(m) = Int V * 2 sin^2(m pi chi / 2); J(0) = 0 identically.
double numeric_one_minus_cos_moment(const Potential& v, const BasisWindow& w, int m,
                                    const QuadratureConfig& cfg) {
  if (m == 0) return 0.0;
  const double width = w.width();
  const double freq = 0.5 * m * kPi / width;
  const double a = w.a;
  auto f = [&](double x) {
    const double s = std::sin(freq * (x - a));
    return v(x) * 2.0 * s * s;
  };
  return panel_sum(f, moment_boundaries(v, w, m, cfg), cfg.nodes_per_panel);
}

bool use_difference_form(const Potential& v) {
  return !v.monomial() && v.singularity_order() > 0;
}

bool parity_zeros(const Potential& v, const BasisWindow& w) {
  return v.even() && w.symmetric();
}

double moment(const Potential& v, const BasisWindow& w, int m,
              const QuadratureConfig& cfg, bool difference_form) {
  if (difference_form) return numeric_one_minus_cos_moment(v, w, m, cfg);
  if (v.monomial()) return analytic_cos_moment(*v.monomial(), w, m);
  return numeric_cos_moment(v, w, m, cfg);
}

void check_pair(int i, int j, const BasisWindow& w) {
  if (i < 1 || i > w.size || j < 1 || j > w.size)
    throw std::out_of_range("matrix element indices outside 1..N");
}

} // namespace

double potential_matrix_element(const Potential& v, int i, int j,
                                const BasisWindow& w, const QuadratureConfig& cfg) {
  check_pair(i, j, w);
  check_window_compat(v, w);
  if (parity_zeros(v, w) && (i + j) % 2 == 1) return 0.0;
  const bool diff = use_difference_form(v);
  const int m_low = std::abs(i - j);
  const int m_high = i + j;
  const double lo = moment(v, w, m_low, cfg, diff);
  const double hi = moment(v, w, m_high, cfg, diff);
  return (diff ? hi - lo : lo - hi) / w.width();
}

PotentialElementTable::PotentialElementTable(const Potential& v, const BasisWindow& w,
                                             const QuadratureConfig& cfg)
    : window_(w) {
  check_window_compat(v, w);
  parity_zero_ = parity_zeros(v, w);
  difference_form_ = use_difference_form(v);
  const int m_max = 2 * w.size;
  moments_.assign(m_max + 1, 0.0);
  for (int m = 0; m <= m_max; ++m) {
    if (parity_zero_ && m % 2 == 1) continue;
    moments_[m] = moment(v, w, m, cfg, difference_form_);
  }
}

double PotentialElementTable::element(int i, int j) const {
  check_pair(i, j, window_);
  if (parity_zero_ && (i + j) % 2 == 1) return 0.0;
  const double lo = moments_[std::abs(i - j)];
  const double hi = moments_[i + j];
  return (difference_form_ ? hi - lo : lo - hi) / window_.width();
}

} // namespace boxspec
