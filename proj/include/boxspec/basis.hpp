#pragma once

namespace boxspec {

/// Trial-space window [a, b] carrying the basis size N.
///
/// The trial basis is the orthonormal Dirichlet set
///   phi_n(x) = sqrt(2/(b-a)) * sin(n pi (x-a)/(b-a)),   n = 1..N,
/// extended by zero outside [a, b] so that every phi_n is a valid element
/// of L^2 on the full line. The endpoints a and b are the variational
/// parameters the optimizer moves.
struct BasisWindow {
  double a = 0.0;
  double b = 1.0;
  int size = 1;

  double width() const { return b - a; }
  bool symmetric() const { return a == -b; }
};

/// Validating constructor: requires a < b and size >= 1.
BasisWindow make_window(double a, double b, int size);

/// Window [-half_width, half_width]; requires half_width > 0.
BasisWindow symmetric_window(double half_width, int size);

/// phi_n(x), 1-based n in 1..w.size. Exactly zero at and outside both
/// endpoints.
double basis_function(int n, const BasisWindow& w, double x);

/// (phi_n, -phi_n'') = (n pi / (b-a))^2, the diagonal kinetic element.
double kinetic_diagonal(int n, const BasisWindow& w);

} // namespace boxspec
