#include "boxspec/hamiltonian.hpp"

#include <ostream>
#include <stdexcept>

namespace boxspec {

HamiltonianMatrix::HamiltonianMatrix(BasisWindow window, std::string potential_id,
                                     std::vector<double> entries_row_major)
    : window_(window), potential_id_(std::move(potential_id)),
      entries_(std::move(entries_row_major)) {
  const std::size_t n = static_cast<std::size_t>(window_.size);
  if (entries_.size() != n * n)
    throw std::domain_error("Hamiltonian storage size does not match basis size");
}

double HamiltonianMatrix::entry(int i, int j) const {
  if (i < 1 || i > size() || j < 1 || j > size())
    throw std::out_of_range("Hamiltonian indices outside 1..N");
  return entries_[static_cast<std::size_t>(i - 1) * size() + (j - 1)];
}

void HamiltonianMatrix::write_csv(std::ostream& os) const {
  os << "# N=" << size() << ",a=" << window_.a << ",b=" << window_.b << "\n";
  char buf[40];
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", entries_[static_cast<std::size_t>(i) * size() + j]);
      os << buf << (j + 1 == size() ? '\n' : ',');
    }
  }
}

HamiltonianMatrix assemble(const Potential& v, const BasisWindow& w,
                           const QuadratureConfig& cfg) {
  const PotentialElementTable table(v, w, cfg);
  const int n = w.size;
  std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      double val = table.element(i, j);
      if (i == j) val += kinetic_diagonal(i, w);
      h[static_cast<std::size_t>(i - 1) * n + (j - 1)] = val;
      h[static_cast<std::size_t>(j - 1) * n + (i - 1)] = val;
    }
  }
  return HamiltonianMatrix(w, v.id(), std::move(h));
}

} // namespace boxspec
