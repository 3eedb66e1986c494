#pragma once

#include <span>
#include <vector>

#include "sun_euler/core.hpp"
#include "sun_euler/param_ranges.hpp"

namespace sun {

/// Which theta box a DensitySpec is validated against.
enum class ThetaDomain {
  Ordered,  ///< arccos(1/sqrt(j+1)) <= theta_j <= pi/2 (default)
  FullBox,  ///< 0 <= theta_j <= pi/2
};

/// rho = U(alpha) rho_d(theta) U(alpha)^dagger.
struct DensitySpec {
  int n = 0;
  std::vector<double> theta;  ///< theta_1 .. theta_{N-1}
  ParamVector alpha;
};

/// Eigenvalues of rho_d: Lambda_1 = prod_j sin^2 theta_j,
/// Lambda_i = cos^2 theta_{i-1} prod_{j>=i} sin^2 theta_j, Lambda_N = cos^2 theta_{N-1}.
struct DiagonalDensity {
  int n = 0;
  std::vector<double> eigenvalues;
};

DiagonalDensity rho_diagonal(int n, std::span<const double> theta);

/// Coefficient of lambda_{a^2-1} in rho_d = I/N + sum_a f_a lambda_{a^2-1}.
struct CartanCoefficient {
  int level = 0;            ///< a
  int generator_index = 0;  ///< a^2 - 1
  double value = 0.0;       ///< f_a = Tr[rho_d lambda_{a^2-1}] / 2
};

std::vector<CartanCoefficient> rho_coefficients(int n, std::span<const double> theta);

/// Per-theta bounds [arccos(1/sqrt(j+1)), pi/2], j = 1..N-1.
std::vector<Bound> theta_ranges(int n);

/// Throws DomainError when theta lies outside the requested domain.
void validate_theta(int n, std::span<const double> theta, ThetaDomain domain = ThetaDomain::Ordered);

/// Builds rho and checks it is Hermitian, unit trace and positive
/// semidefinite; a violation raises InternalConsistency.
ComplexMatrix density(const DensitySpec& spec, ThetaDomain domain = ThetaDomain::Ordered);

}  // namespace sun
