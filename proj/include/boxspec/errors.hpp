#pragma once

#include <stdexcept>
#include <string>

namespace boxspec {

/// Quadrature failure (non-finite integrand, bad interval).
class integration_error : public std::runtime_error {
public:
  explicit integration_error(const std::string& what) : std::runtime_error(what) {}
};

/// Eigensolver failure (iteration cap exceeded).
class solver_error : public std::runtime_error {
public:
  solver_error(const std::string& what, int iterations)
      : std::runtime_error(what), iterations_(iterations) {}
  int iterations() const { return iterations_; }

private:
  int iterations_;
};

} // namespace boxspec
