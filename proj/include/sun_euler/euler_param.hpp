#pragma once

#include <string_view>
#include <vector>

#include "sun_euler/core.hpp"

namespace sun {

enum class FactorKind {
  Lambda3,  ///< exp(i lambda_3 a) inside a block
  Plane,    ///< exp(i lambda_{(k-1)^2+1} a), the real rotation of the (1,k) plane
  Cartan,   ///< trailing exp(i lambda_{a^2-1} a); level 2 is the trailing lambda_3
};

std::string_view to_string(FactorKind kind) noexcept;

/// One exponential factor of U.  `level` is k for Lambda3/Plane factors (the
/// A(k, j(m)) pair they belong to) and a for Cartan factors.  `block` is m for
/// block factors and 0 for the Cartan tail.
struct EulerFactor {
  int generator_index = 0;
  int param_index = 0;
  FactorKind kind = FactorKind::Lambda3;
  int level = 0;
  int block = 0;

  bool operator==(const EulerFactor&) const = default;
};

struct FactorSequence {
  int n = 0;
  std::vector<EulerFactor> factors;
};

/// Parameter offset of block m: 0 for m = n, otherwise sum_{l=0}^{n-m-1} 2(m+l).
int j_offset(int m, int n);

/// Factors of U in left-to-right order: blocks m = n..2, each contributing
/// (lambda_3, plane(k)) pairs for k = 2..m, followed by the Cartan tail.
FactorSequence factor_sequence(int n);

/// exp(i * lambda * angle) for the factor's generator, in closed form.
ComplexMatrix factor_exponential(const EulerFactor& factor, double angle, int n);

/// M <- M * exp(i * lambda * angle), applied as column operations.
void multiply_factor_right(ComplexMatrix& m, const EulerFactor& factor, double angle);

/// U(alpha), the ordered product of all factor exponentials.
ComplexMatrix unitary(int n, const ParamVector& p);

/// U^T evaluated as the reversed product with the plane generators' sign
/// flipped (lambda_plane^T = -lambda_plane, diagonal generators unchanged).
ComplexMatrix unitary_transpose(int n, const ParamVector& p);

/// U^dagger evaluated as the reversed product of negated exponentials.
ComplexMatrix unitary_dagger(int n, const ParamVector& p);

}  // namespace sun
