#include "boxspec/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace boxspec {

namespace {

using Matrix = std::vector<std::vector<double>>;

double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Householder reduction to tridiagonal form, accumulating the orthogonal
// transformation in z. On exit d holds the diagonal, e the subdiagonal in
// e[1..n-1].
void tred2(Matrix& z, std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(z[i][k]);
      if (scale == 0.0) {
        e[i] = z[i][l];
      } else {
        for (int k = 0; k <= l; ++k) {
          z[i][k] /= scale;
          h += z[i][k] * z[i][k];
        }
        double f = z[i][l];
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        z[i][l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          z[j][i] = z[i][j] / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += z[j][k] * z[i][k];
          for (int k = j + 1; k <= l; ++k) g += z[k][j] * z[i][k];
          e[j] = g / h;
          f += e[j] * z[i][j];
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = z[i][j];
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) z[j][k] -= f * e[k] + g * z[i][k];
        }
      }
    } else {
      e[i] = z[i][l];
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += z[i][k] * z[k][j];
        for (int k = 0; k <= l; ++k) z[k][j] -= g * z[k][i];
      }
    }
    d[i] = z[i][i];
    z[i][i] = 1.0;
    for (int j = 0; j <= l; ++j) z[j][i] = z[i][j] = 0.0;
  }
}

// Implicit-shift QL on the tridiagonal (d, e), updating the eigenvector
// columns of z. QL rather than QR: the assembled matrices are graded with
// the large elements in the lower-right corner.
void tql2(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
  const int n = static_cast<int>(d.size());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw solver_error("QL eigensolver failed to converge", iter);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z[k][i + 1];
            z[k][i + 1] = s * z[k][i] + c * f;
            z[k][i] = c * z[k][i] - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// Cyclic Jacobi with the usual threshold schedule. Slower than QL but keeps
// high relative accuracy on strongly graded positive definite matrices.
void jacobi_eigen(Matrix& a, std::vector<double>& d, Matrix& v) {
  const int n = static_cast<int>(d.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) v[i][j] = 0.0;
    v[i][i] = 1.0;
    d[i] = a[i][i];
  }
  std::vector<double> b = d, zacc(n, 0.0);
  for (int sweep = 1; sweep <= 100; ++sweep) {
    double sm = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) sm += std::abs(a[p][q]);
    if (sm == 0.0) return;
    const double thresh = sweep < 4 ? 0.2 * sm / (n * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::abs(a[p][q]);
        if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) &&
            std::abs(d[q]) + g == std::abs(d[q])) {
          a[p][q] = 0.0;
        } else if (std::abs(a[p][q]) > thresh) {
          double h = d[q] - d[p];
          double t;
          if (std::abs(h) + g == std::abs(h)) {
            t = a[p][q] / h;
          } else {
            const double theta = 0.5 * h / a[p][q];
            t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double tau = s / (1.0 + c);
          h = t * a[p][q];
          zacc[p] -= h;
          zacc[q] += h;
          d[p] -= h;
          d[q] += h;
          a[p][q] = 0.0;
          auto rotate = [&](Matrix& m, int i1, int j1, int i2, int j2) {
            const double g1 = m[i1][j1];
            const double h1 = m[i2][j2];
            m[i1][j1] = g1 - s * (h1 + g1 * tau);
            m[i2][j2] = h1 + s * (g1 - h1 * tau);
          };
          for (int j = 0; j < p; ++j) rotate(a, j, p, j, q);
          for (int j = p + 1; j < q; ++j) rotate(a, p, j, j, q);
          for (int j = q + 1; j < n; ++j) rotate(a, p, j, q, j);
          for (int j = 0; j < n; ++j) rotate(v, j, p, j, q);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      b[i] += zacc[i];
      d[i] = b[i];
      zacc[i] = 0.0;
    }
  }
  throw solver_error("Jacobi eigensolver failed to converge", 100);
}

} // namespace

EigenSystem eigensystem_symmetric(const std::vector<double>& a_row_major, int n,
                                  EigenMethod method) {
  if (n < 1) throw std::domain_error("matrix dimension must be >= 1");
  if (a_row_major.size() != static_cast<std::size_t>(n) * n)
    throw std::domain_error("matrix storage size does not match dimension");

  Matrix z(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z[i][j] = a_row_major[static_cast<std::size_t>(i) * n + j];

  std::vector<double> d(n, 0.0);
  Matrix vec;
  if (method == EigenMethod::ql) {
    std::vector<double> e(n, 0.0);
    if (n == 1) {
      d[0] = z[0][0];
      z[0][0] = 1.0;
    } else {
      tred2(z, d, e);
      tql2(d, e, z);
    }
    vec = std::move(z); // columns are eigenvectors
  } else {
    vec.assign(n, std::vector<double>(n, 0.0));
    jacobi_eigen(z, d, vec);
  }

  // Ascending order, ties by original index.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return d[a] < d[b]; });

  EigenSystem out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[idx[k]];
    for (int r = 0; r < n; ++r) out.vectors[k][r] = vec[r][idx[k]];
  }
  return out;
}

SpectrumEstimate eigenvalues_symmetric(const HamiltonianMatrix& m, int k,
                                       EigenMethod method) {
  const int n = m.size();
  if (k < 1 || k > n) throw std::domain_error("requested eigenvalue count outside 1..N");
  EigenSystem sys = eigensystem_symmetric(m.data(), n, method);

  double norm_f = 0.0;
  for (double x : m.data()) norm_f += x * x;
  norm_f = std::sqrt(norm_f);

  double worst = 0.0;
  const std::vector<double>& a = m.data();
  for (int kk = 0; kk < k; ++kk) {
    const std::vector<double>& v = sys.vectors[kk];
    double res2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      const double* row = a.data() + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) acc += row[j] * v[j];
      const double r = acc - sys.values[kk] * v[i];
      res2 += r * r;
    }
    worst = std::max(worst, std::sqrt(res2));
  }
  const double bound = norm_f > 0.0 ? worst / norm_f : worst;
  if (bound > 1e-10)
    throw solver_error("eigensolver residual bound exceeded 1e-10", 0);

  SpectrumEstimate est;
  est.eigenvalues.assign(sys.values.begin(), sys.values.begin() + k);
  est.window = m.window();
  est.basis_size = n;
  est.residual_bound = bound;
  return est;
}

} // namespace boxspec
