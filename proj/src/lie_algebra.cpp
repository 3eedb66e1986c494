#include "sun_euler/lie_algebra.hpp"

#include <cmath>

namespace sun {

GeneratorSet make_generators(int n) {
  require_dimension(n);
  const Complex i_unit(0.0, 1.0);

  GeneratorSet gs;
  gs.n_ = n;
  gs.generators_.resize(static_cast<std::size_t>(algebra_dim(n)), ComplexMatrix::Zero(n, n));
  auto at = [&](int index) -> ComplexMatrix& { return gs.generators_[static_cast<std::size_t>(index - 1)]; };

  for (int m = 2; m <= n; ++m) {
    for (int i = 1; i < m; ++i) {
      ComplexMatrix& sym = at(symmetric_index(i, m));
      sym(i - 1, m - 1) = 1.0;
      sym(m - 1, i - 1) = 1.0;

      ComplexMatrix& anti = at(antisymmetric_index(i, m));
      anti(i - 1, m - 1) = -i_unit;
      anti(m - 1, i - 1) = i_unit;
    }
    ComplexMatrix& diag = at(cartan_index(m));
    const double scale = std::sqrt(2.0 / (m * m - m));
    for (int q = 0; q < m - 1; ++q) diag(q, q) = scale;
    diag(m - 1, m - 1) = -(m - 1) * scale;
  }
  return gs;
}

double StructureConstants::operator()(int i, int j, int k) const {
  const auto it = entries_.find({i, j, k});
  return it == entries_.end() ? 0.0 : it->second;
}

StructureConstants structure_constants(const GeneratorSet& gs) {
  StructureConstants sc;
  sc.n_ = gs.n();
  const int dim = gs.size();
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) {
      const ComplexMatrix comm = gs[i] * gs[j] - gs[j] * gs[i];
      for (int k = 1; k <= dim; ++k) {
        // f_ijk = Tr[[l_i, l_j] l_k] / 4i
        const Complex tr = (comm.array() * gs[k].transpose().array()).sum();
        const double f = (tr / Complex(0.0, 4.0)).real();
        if (std::abs(f) > StructureConstants::kThreshold) {
          sc.entries_[{i, j, k}] = f;
          sc.entries_[{j, i, k}] = -f;
        }
      }
    }
  }
  return sc;
}

CartanSplit cartan_split(int n) {
  require_dimension(n);
  CartanSplit split;
  split.n = n;
  if (n == 2) {
    split.k_indices = {3};
    split.p_indices = {1, 2};
    split.degenerate = true;
    return split;
  }
  const int p_first = (n - 1) * (n - 1);
  for (int idx = 1; idx < p_first; ++idx) split.k_indices.push_back(idx);
  split.k_indices.push_back(cartan_index(n));
  for (int idx = p_first; idx <= n * n - 2; ++idx) split.p_indices.push_back(idx);
  return split;
}

}  // namespace sun
