#include "sun_euler/density_matrix.hpp"

#include <cmath>
#include <numbers>

#include "sun_euler/euler_param.hpp"
#include "sun_euler/lie_algebra.hpp"

namespace sun {

namespace {

// Boundary slack so that endpoints computed as acos(1/sqrt(j+1)) validate.
constexpr double kThetaSlack = 1e-12;

void check_theta_length(int n, std::span<const double> theta) {
  require_dimension(n);
  if (theta.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorCode::InvalidArgument, "SU(" + std::to_string(n) + ") density needs " + std::to_string(n - 1) +
                                                " theta angles, got " + std::to_string(theta.size()));
  }
}

}  // namespace

std::vector<Bound> theta_ranges(int n) {
  require_dimension(n);
  std::vector<Bound> out;
  for (int j = 1; j <= n - 1; ++j) out.push_back({std::acos(1.0 / std::sqrt(j + 1.0)), std::numbers::pi / 2.0});
  return out;
}

void validate_theta(int n, std::span<const double> theta, ThetaDomain domain) {
  check_theta_length(n, theta);
  const std::vector<Bound> ordered = theta_ranges(n);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double lo = domain == ThetaDomain::Ordered ? ordered[j].lo : 0.0;
    if (!(theta[j] >= lo - kThetaSlack && theta[j] <= std::numbers::pi / 2.0 + kThetaSlack)) {
      throw Error(ErrorCode::DomainError, "theta_" + std::to_string(j + 1) + " = " + std::to_string(theta[j]) +
                                              " outside [" + std::to_string(lo) + ", pi/2]");
    }
  }
}

DiagonalDensity rho_diagonal(int n, std::span<const double> theta) {
  validate_theta(n, theta, ThetaDomain::FullBox);
  std::vector<double> sin2(theta.size());
  std::vector<double> cos2(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    sin2[j] = std::sin(theta[j]) * std::sin(theta[j]);
    cos2[j] = std::cos(theta[j]) * std::cos(theta[j]);
  }
  DiagonalDensity d;
  d.n = n;
  d.eigenvalues.assign(static_cast<std::size_t>(n), 0.0);
  // tail[i] = prod_{j >= i} sin^2 theta_j (0-based j), tail[n-1] = 1.
  std::vector<double> tail(static_cast<std::size_t>(n), 1.0);
  for (int j = n - 2; j >= 0; --j) tail[j] = sin2[j] * tail[j + 1];
  d.eigenvalues[0] = tail[0];
  for (int i = 1; i < n; ++i) d.eigenvalues[i] = cos2[i - 1] * tail[i];
  return d;
}

std::vector<CartanCoefficient> rho_coefficients(int n, std::span<const double> theta) {
  const DiagonalDensity d = rho_diagonal(n, theta);
  std::vector<CartanCoefficient> out;
  double leading_sum = 0.0;  // Lambda_1 + .. + Lambda_{a-1}
  for (int a = 2; a <= n; ++a) {
    leading_sum += d.eigenvalues[a - 2];
    const double scale = std::sqrt(2.0 / (a * a - a));
    const double f = 0.5 * scale * (leading_sum - (a - 1) * d.eigenvalues[a - 1]);
    out.push_back({a, cartan_index(a), f});
  }
  return out;
}

ComplexMatrix density(const DensitySpec& spec, ThetaDomain domain) {
  validate_theta(spec.n, spec.theta, domain);
  const DiagonalDensity d = rho_diagonal(spec.n, spec.theta);

  ComplexMatrix rho = unitary(spec.n, spec.alpha);
  for (int q = 0; q < spec.n; ++q) rho.col(q) *= d.eigenvalues[q];
  rho = rho * unitary_dagger(spec.n, spec.alpha);

  constexpr double kTol = 1e-10;
  const double hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const double trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (hermiticity > kTol || trace_error > kTol) {
    throw Error(ErrorCode::InternalConsistency, "density matrix lost Hermiticity or unit trace");
  }
  const double min_eigenvalue = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(rho, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  if (min_eigenvalue < -kTol) {
    throw Error(ErrorCode::InternalConsistency, "density matrix has negative eigenvalue " + std::to_string(min_eigenvalue));
  }
  return rho;
}

}  // namespace sun
