#pragma once

#include <cstdint>
#include <vector>

#include "sun_euler/core.hpp"
#include "sun_euler/rng.hpp"

namespace sun {

enum class KernelCase {
  Sin2,      ///< sin(2a), k = 2
  CosPower,  ///< cos(a)^{2k-3} sin(a), 2 < k < m
  SinPower,  ///< cos(a) sin(a)^{2m-3}, k = m > 2
};

/// One trigonometric factor of the Haar kernel, bound to the plane-factor
/// angle of A(k, j(m)).
struct KernelTerm {
  int k = 0;
  int m = 0;
  int param_index = 0;
  KernelCase kind = KernelCase::Sin2;

  /// Exponent of the power-raised function (cos for CosPower, sin for SinPower; 1 for Sin2).
  int exponent() const noexcept;
  double operator()(double angle) const noexcept;
  /// Exact integral over [lo, hi] via the antiderivative.
  double integral(double lo, double hi) const noexcept;
};

std::vector<KernelTerm> kernel_terms(int n);

/// Closed-form kernel K_SU(N)(alpha): the product of all kernel terms.
double kernel(int n, const ParamVector& p);

/// Expansion coefficients c_lj of the left-invariant one-forms of u = U^T,
/// c_lj = -i/2 Tr[lambda_j^T M_l] with M_l = (du/dalpha_l) u^{-1}.  Row l-1
/// belongs to alpha_l, column j-1 to lambda_j.
struct OneFormCoefficients {
  int n = 0;
  RealMatrix c;
};

/// M_l is evaluated exactly: if the factor of alpha_l in u is exp(C a) and P is
/// the product of the u-factors in front of it, then M_l = P C P^{-1}.
OneFormCoefficients one_form_coefficients(int n, const ParamVector& p);

/// |det c_lj|, the Haar density recovered directly from the one-forms.
double kernel_oracle(int n, const ParamVector& p);

/// |det| of the 2(N-1) x 2(N-1) block T: rows alpha_1..alpha_{2(N-1)},
/// columns lambda_{(N-1)^2}..lambda_{N^2-2}.
double oracle_block_determinant(int n, const ParamVector& p);

/// Random point of the quotient box with every plane angle in
/// [0.1, pi/2 - 0.1], away from the zero set of the kernel.
ParamVector interior_point(int n, CounterRng& rng);

struct OracleReport {
  int n = 0;
  int points = 0;
  std::uint64_t seed = 0;
  double max_relative_deviation = 0.0;
};

OracleReport check_oracle(int n, int points, std::uint64_t seed);

}  // namespace sun
