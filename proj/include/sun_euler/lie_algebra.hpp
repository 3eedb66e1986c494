#pragma once

#include <array>
#include <map>
#include <vector>

#include "sun_euler/core.hpp"

namespace sun {

// Index convention for the defining representation of su(N).  Level m
// (m = 2..N) owns the indices (m-1)^2 .. m^2-1: for each row i < m the
// symmetric generator lambda^{1}(i,m) followed by the antisymmetric
// lambda^{2}(i,m), then the diagonal lambda_{m^2-1}.  For N = 3 this is the
// usual Gell-Mann ordering.

constexpr int symmetric_index(int i, int m) noexcept { return (m - 1) * (m - 1) + 2 * (i - 1); }
constexpr int antisymmetric_index(int i, int m) noexcept { return symmetric_index(i, m) + 1; }
constexpr int cartan_index(int level) noexcept { return level * level - 1; }

/// Generator rotating the (1,k) plane: entries (1,k) = -i and (k,1) = +i.
constexpr int plane_index(int k) noexcept { return (k - 1) * (k - 1) + 1; }

/// The N^2-1 Hermitian, traceless generators normalised to Tr[l_i l_j] = 2 delta_ij.
class GeneratorSet {
 public:
  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(generators_.size()); }

  /// 1-based access, lambda_1 .. lambda_{N^2-1}.
  const ComplexMatrix& operator[](int index) const { return generators_.at(static_cast<std::size_t>(index - 1)); }

 private:
  friend GeneratorSet make_generators(int n);
  int n_ = 0;
  std::vector<ComplexMatrix> generators_;
};

GeneratorSet make_generators(int n);

/// Sparse f_ijk with [l_i, l_j] = 2i sum_k f_ijk l_k.
class StructureConstants {
 public:
  using Key = std::array<int, 3>;

  /// Entries with magnitude at or below this are not stored.
  static constexpr double kThreshold = 1e-12;

  int n() const noexcept { return n_; }
  double operator()(int i, int j, int k) const;
  const std::map<Key, double>& entries() const noexcept { return entries_; }

 private:
  friend StructureConstants structure_constants(const GeneratorSet& gs);
  int n_ = 0;
  std::map<Key, double> entries_;
};

StructureConstants structure_constants(const GeneratorSet& gs);

/// Split of the generator indices into L(K) and L(P).  For N = 2 the general
/// formula collapses (it would put lambda_1 in both halves and ask for
/// lambda_0), so the N = 2 split is reported with degenerate = true.
struct CartanSplit {
  int n = 0;
  std::vector<int> k_indices;
  std::vector<int> p_indices;
  bool degenerate = false;
};

CartanSplit cartan_split(int n);

}  // namespace sun
