#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "boxspec/basis.hpp"
#include "boxspec/potentials.hpp"
#include "boxspec/quadrature.hpp"

namespace boxspec {

/// Dense symmetric variational matrix H = K + P on a window. K is the exact
/// diagonal kinetic part; P holds the potential matrix elements. Entries are
/// mirrored from the upper triangle, so entry(i, j) == entry(j, i) bitwise.
class HamiltonianMatrix {
public:
  HamiltonianMatrix(BasisWindow window, std::string potential_id,
                    std::vector<double> entries_row_major);

  int size() const { return window_.size; }
  const BasisWindow& window() const { return window_; }
  const std::string& potential_id() const { return potential_id_; }

  /// 1-based element access, i, j in 1..N.
  double entry(int i, int j) const;

  /// Row-major storage, N*N.
  const std::vector<double>& data() const { return entries_; }

  /// Debug dump: header line with N, a, b, then row-major CSV rows.
  void write_csv(std::ostream& os) const;

private:
  BasisWindow window_;
  std::string potential_id_;
  std::vector<double> entries_;
};

/// Builds H for the potential on the window. Only the upper triangle is
/// computed; the mirror copy guarantees exact symmetry. For even potentials
/// on symmetric windows the odd (i+j) elements are exact zeros without any
/// quadrature.
HamiltonianMatrix assemble(const Potential& v, const BasisWindow& w,
                           const QuadratureConfig& cfg = {});

} // namespace boxspec
