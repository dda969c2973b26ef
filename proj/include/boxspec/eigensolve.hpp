#pragma once

#include <vector>

#include "boxspec/basis.hpp"
#include "boxspec/errors.hpp"
#include "boxspec/hamiltonian.hpp"

namespace boxspec {

/// Dense symmetric algorithms. ql is Householder tridiagonalization followed
/// by implicit-shift QL; jacobi is cyclic Jacobi with threshold sweeps, which
/// retains high relative accuracy on strongly graded positive definite
/// matrices (the singular-potential assemblies).
enum class EigenMethod { ql, jacobi };

/// Full eigensystem of a symmetric matrix given as row-major storage.
/// values ascend; vectors[k] is the unit eigenvector of values[k]. Ties keep
/// index order; repeated calls on identical input are bitwise identical.
struct EigenSystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
EigenSystem eigensystem_symmetric(const std::vector<double>& a_row_major, int n,
                                  EigenMethod method = EigenMethod::ql);

/// Ascending variational eigenvalues with the window that produced them.
/// residual_bound = max_k |H v_k - e_k v_k| / |H|_F over the returned pairs.
struct SpectrumEstimate {
  std::vector<double> eigenvalues;
  BasisWindow window;
  int basis_size = 0;
  double residual_bound = 0.0;
};

/// First k eigenvalues of H, 1 <= k <= N. Throws solver_error with the
/// iteration count on convergence failure, or if the residual bound exceeds
/// 1e-10.
SpectrumEstimate eigenvalues_symmetric(const HamiltonianMatrix& m, int k,
                                       EigenMethod method = EigenMethod::ql);

} // namespace boxspec
