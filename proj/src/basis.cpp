#include "boxspec/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace boxspec {

namespace {

void check_index(int n, const BasisWindow& w) {
  if (n < 1 || n > w.size)
    throw std::out_of_range("basis index n = " + std::to_string(n) +
                            " outside 1.." + std::to_string(w.size));
}

} // namespace

BasisWindow make_window(double a, double b, int size) {
  if (!(a < b)) throw std::domain_error("basis window requires a < b");
  if (size < 1) throw std::domain_error("basis size must be >= 1");
  return BasisWindow{a, b, size};
}

BasisWindow symmetric_window(double half_width, int size) {
  if (!(half_width > 0.0))
    throw std::domain_error("symmetric window requires half_width > 0");
  return make_window(-half_width, half_width, size);
}

double basis_function(int n, const BasisWindow& w, double x) {
  check_index(n, w);
  if (x <= w.a || x >= w.b) return 0.0;
  const double chi = (x - w.a) / w.width();
  return std::sqrt(2.0 / w.width()) * std::sin(n * std::numbers::pi * chi);
}

double kinetic_diagonal(int n, const BasisWindow& w) {
  check_index(n, w);
  const double k = n * std::numbers::pi / w.width();
  return k * k;
}

} // namespace boxspec
