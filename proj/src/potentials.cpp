#include "boxspec/potentials.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace boxspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void require_arity(const std::string& name, const std::vector<double>& params,
                   std::size_t n) {
  if (params.size() != n)
    throw std::domain_error("potential '" + name + "' takes " + std::to_string(n) +
                            " parameter(s), got " + std::to_string(params.size()));
}

} // namespace

Potential Potential::confined_to(Interval box) const {
  if (!(box.lo < box.hi))
    throw std::domain_error("confinement box requires lo < hi");
  Potential p = *this;
  p.confinement_ = box;
  return p;
}

Potential Potential::from_function(std::function<double(double)> f, std::string id,
                                   bool even) {
  Potential p;
  p.eval_ = std::move(f);
  p.domain_left_ = -kInf;
  p.even_ = even;
  p.id_ = std::move(id);
  return p;
}

Potential Potential::radial_function(std::function<double(double)> f, std::string id,
                                     int singularity_order) {
  if (singularity_order < 0)
    throw std::domain_error("singularity order must be >= 0");
  Potential p;
  p.eval_ = std::move(f);
  p.domain_left_ = 0.0;
  p.singularity_order_ = singularity_order;
  p.id_ = std::move(id);
  return p;
}

Potential Potential::polynomial(const std::array<double, 5>& coeffs, std::string id) {
  Potential p;
  p.eval_ = [coeffs](double x) {
    return ((coeffs[4] * x + coeffs[3]) * x + coeffs[2]) * x * x +
           coeffs[1] * x + coeffs[0];
  };
  p.domain_left_ = -kInf;
  p.even_ = coeffs[1] == 0.0 && coeffs[3] == 0.0;
  p.monomial_ = coeffs;
  p.id_ = std::move(id);
  return p;
}

Potential Potential::radial_polynomial(const std::array<double, 5>& coeffs,
                                       std::string id, int singularity_order) {
  Potential p = polynomial(coeffs, std::move(id));
  p.domain_left_ = 0.0;
  p.singularity_order_ = singularity_order;
  p.even_ = false;
  return p;
}

Potential catalog(const std::string& name, const std::vector<double>& params) {
  if (name == "harmonic") {
    require_arity(name, params, 0);
    return Potential::polynomial({0, 0, 1, 0, 0}, "harmonic");
  }
  if (name == "quartic_anharmonic") {
    require_arity(name, params, 0);
    return Potential::polynomial({0, 0, 1, 0, 1}, "quartic_anharmonic");
  }
  if (name == "hydrogenic") {
    require_arity(name, params, 1);
    const double e2 = params[0] * params[0];
    return Potential::radial_function([e2](double r) { return -e2 / r; },
                                      "hydrogenic(e=" + fmt_param(params[0]) + ")", 1);
  }
  if (name == "singular_ABC") {
    require_arity(name, params, 3);
    const double A = params[0], B = params[1], C = params[2];
    return Potential::radial_function(
        [A, B, C](double r) {
          const double r2 = r * r;
          const double ir2 = 1.0 / r2;
          return A * r2 + ir2 * ir2 * (B + C * ir2);
        },
        "singular_ABC(A=" + fmt_param(A) + ",B=" + fmt_param(B) +
            ",C=" + fmt_param(C) + ")",
        6);
  }
  if (name == "sine_squared_confined") {
    require_arity(name, params, 1);
    const double v0 = params[0];
    const double half = std::numbers::pi / 2.0;
    return Potential::from_function(
               [v0](double x) {
                 const double s = std::sin(x);
                 return v0 * s * s;
               },
               "sine_squared(V0=" + fmt_param(v0) + ")", /*even=*/true)
        .confined_to({-half, half});
  }
  if (name == "zero") {
    require_arity(name, params, 0);
    return Potential::polynomial({0, 0, 0, 0, 0}, "zero");
  }
  throw std::domain_error("unknown potential '" + name + "'");
}

double centrifugal_coefficient(int d, int ell) {
  return 0.25 * (2.0 * ell + d - 1.0) * (2.0 * ell + d - 3.0);
}

Potential effective_radial(const RadialProblem& p) {
  if (p.d < 2) throw std::domain_error("radial reduction requires d >= 2");
  if (p.ell < 0) throw std::domain_error("angular momentum ell must be >= 0");
  if (p.d == 2 && p.ell == 0)
    throw std::domain_error(
        "the effective-potential reduction is not valid for d = 2, ell = 0: "
        "the centrifugal coefficient is -1/4 and the reduced operator is "
        "unbounded below near r = 0");

  const double coeff = centrifugal_coefficient(p.d, p.ell);
  const int order = std::max(2, p.v.singularity_order());
  const std::string id = "radial(d=" + std::to_string(p.d) +
                         ",l=" + std::to_string(p.ell) + "):" + p.v.id();

  Potential out;
  if (coeff == 0.0 && p.v.monomial()) {
    // U = V pointwise; keep the exact polynomial matrix-element path.
    out = Potential::radial_polynomial(*p.v.monomial(), id, order);
  } else if (coeff == 0.0) {
    Potential base = p.v;
    out = Potential::radial_function([base](double r) { return base(r); }, id, order);
  } else {
    Potential base = p.v;
    out = Potential::radial_function(
        [base, coeff](double r) { return base(r) + coeff / (r * r); }, id, order);
  }
  if (p.v.confinement_box()) out = out.confined_to(*p.v.confinement_box());
  return out;
}

double oscillator_exact_energy(int n, int ell, int d) {
  if (n < 1 || ell < 0 || d < 2)
    throw std::domain_error("oscillator_exact_energy requires n >= 1, ell >= 0, d >= 2");
  return 4.0 * n + 2.0 * ell + d - 4.0;
}

double hydrogen_exact_energy(int n, int ell, double e) {
  if (n < 1 || ell < 0)
    throw std::domain_error("hydrogen_exact_energy requires n >= 1, ell >= 0");
  const double k = static_cast<double>(n + ell);
  const double e2 = e * e;
  return -e2 * e2 / (4.0 * k * k);
}

QesGroundState singular_ground_state(double B, double C) {
  if (!(C > 0.0)) throw std::domain_error("singular_ground_state requires C > 0");
  const double s = std::sqrt(C);
  const double lhs = (2.0 * s + B) * (2.0 * s + B);
  const double rhs = C * (1.0 + 8.0 * s);
  const double residual = std::abs(lhs - rhs) / rhs;
  QesGroundState out;
  out.residual = residual;
  out.on_manifold = residual <= 1e-12;
  if (out.on_manifold) out.energy = 4.0 + B / s;
  return out;
}

std::vector<ConfinedHydrogenCase> confined_hydrogen_cases() {
  const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s7 = std::sqrt(7.0);
  return {
      {0, 1, 4.0, -1.0 / 16.0},
      {1, 1, 12.0, -1.0 / 36.0},
      {2, 1, 24.0, -1.0 / 64.0},
      {3, 1, 40.0, -1.0 / 100.0},
      {0, 1, 3.0 * (3.0 - s3), -1.0 / 36.0},
      {0, 2, 3.0 * (3.0 + s3), -1.0 / 36.0},
      {1, 1, 4.0 * (5.0 - s5), -1.0 / 64.0},
      {1, 2, 4.0 * (5.0 + s5), -1.0 / 64.0},
      {2, 1, 5.0 * (7.0 - s7), -1.0 / 100.0},
      {2, 2, 5.0 * (7.0 + s7), -1.0 / 100.0},
      {3, 1, 36.0, -1.0 / 144.0},
      {3, 2, 72.0, -1.0 / 144.0},
  };
}

} // namespace boxspec
