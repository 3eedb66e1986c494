#include "sun_euler/haar_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sun_euler/euler_param.hpp"
#include "sun_euler/lie_algebra.hpp"
#include "sun_euler/param_ranges.hpp"

namespace sun {

int KernelTerm::exponent() const noexcept {
  switch (kind) {
    case KernelCase::Sin2: return 1;
    case KernelCase::CosPower: return 2 * k - 3;
    case KernelCase::SinPower: return 2 * m - 3;
  }
  return 0;
}

double KernelTerm::operator()(double angle) const noexcept {
  switch (kind) {
    case KernelCase::Sin2: return std::sin(2.0 * angle);
    case KernelCase::CosPower: return std::pow(std::cos(angle), exponent()) * std::sin(angle);
    case KernelCase::SinPower: return std::cos(angle) * std::pow(std::sin(angle), exponent());
  }
  return 0.0;
}

double KernelTerm::integral(double lo, double hi) const noexcept {
  const int q = exponent() + 1;
  switch (kind) {
    case KernelCase::Sin2: return 0.5 * (std::cos(2.0 * lo) - std::cos(2.0 * hi));
    case KernelCase::CosPower: return (std::pow(std::cos(lo), q) - std::pow(std::cos(hi), q)) / q;
    case KernelCase::SinPower: return (std::pow(std::sin(hi), q) - std::pow(std::sin(lo), q)) / q;
  }
  return 0.0;
}

std::vector<KernelTerm> kernel_terms(int n) {
  require_dimension(n);
  std::vector<KernelTerm> terms;
  terms.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int m = n; m >= 2; --m) {
    const int j = j_offset(m, n);
    for (int k = 2; k <= m; ++k) {
      const KernelCase kind = k == 2 ? KernelCase::Sin2 : (k < m ? KernelCase::CosPower : KernelCase::SinPower);
      terms.push_back({k, m, 2 * (k - 1) + j, kind});
    }
  }
  return terms;
}

double kernel(int n, const ParamVector& p) {
  if (p.n() != n) throw Error(ErrorCode::InvalidArgument, "parameter vector does not belong to SU(" + std::to_string(n) + ")");
  double value = 1.0;
  for (const KernelTerm& t : kernel_terms(n)) value *= t(p(t.param_index));
  return value;
}

OneFormCoefficients one_form_coefficients(int n, const ParamVector& p) {
  if (p.n() != n) throw Error(ErrorCode::InvalidArgument, "parameter vector does not belong to SU(" + std::to_string(n) + ")");
  const GeneratorSet gens = make_generators(n);
  const FactorSequence seq = factor_sequence(n);
  const int dim = algebra_dim(n);
  const Complex i_unit(0.0, 1.0);

  OneFormCoefficients out;
  out.n = n;
  out.c = RealMatrix::Zero(dim, dim);

  // u = U^T = F_K^T ... F_1^T.  Walk U's factors from the right so that
  // `prefix` is always the product of the u-factors in front of the current one.
  ComplexMatrix prefix = ComplexMatrix::Identity(n, n);
  for (auto it = seq.factors.rbegin(); it != seq.factors.rend(); ++it) {
    const EulerFactor& f = *it;
    const double transpose_sign = f.kind == FactorKind::Plane ? -1.0 : 1.0;
    const ComplexMatrix generator = i_unit * transpose_sign * gens[f.generator_index];
    const ComplexMatrix m_l = prefix * generator * prefix.adjoint();
    for (int j = 1; j <= dim; ++j) {
      // Tr[lambda_j^T M] = sum_ab (lambda_j)_ab M_ab
      const Complex tr = (gens[j].array() * m_l.array()).sum();
      out.c(f.param_index - 1, j - 1) = (Complex(0.0, -0.5) * tr).real();
    }
    multiply_factor_right(prefix, f, transpose_sign * p(f.param_index));
  }
  return out;
}

double kernel_oracle(int n, const ParamVector& p) {
  return std::abs(one_form_coefficients(n, p).c.fullPivLu().determinant());
}

double oracle_block_determinant(int n, const ParamVector& p) {
  const RealMatrix c = one_form_coefficients(n, p).c;
  const int size = 2 * (n - 1);
  const int first_col = (n - 1) * (n - 1) - 1;
  return std::abs(c.block(0, first_col, size, size).fullPivLu().determinant());
}

ParamVector interior_point(int n, CounterRng& rng) {
  constexpr double kMargin = 0.1;
  const RangeSet box = quotient_ranges(n);
  ParamVector p(n);
  for (const EulerFactor& f : factor_sequence(n).factors) {
    const Bound& b = box[f.param_index];
    const double u = rng.uniform();
    if (f.kind == FactorKind::Plane) {
      p(f.param_index) = kMargin + u * (std::numbers::pi / 2.0 - 2.0 * kMargin);
    } else {
      p(f.param_index) = b.lo + u * b.width();
    }
  }
  return p;
}

OracleReport check_oracle(int n, int points, std::uint64_t seed) {
  if (points < 1) throw Error(ErrorCode::InvalidArgument, "need at least one point");
  OracleReport report{n, points, seed, 0.0};
  CounterRng rng(seed);
  for (int i = 0; i < points; ++i) {
    const ParamVector p = interior_point(n, rng);
    const double closed = std::abs(kernel(n, p));
    const double oracle = kernel_oracle(n, p);
    report.max_relative_deviation = std::max(report.max_relative_deviation, std::abs(oracle - closed) / closed);
  }
  return report;
}

}  // namespace sun
