#include "sun_euler/euler_param.hpp"

#include <cmath>
#include <ranges>

#include "sun_euler/lie_algebra.hpp"

namespace sun {

std::string_view to_string(FactorKind kind) noexcept {
  switch (kind) {
    case FactorKind::Lambda3: return "lambda3";
    case FactorKind::Plane: return "plane";
    case FactorKind::Cartan: return "cartan";
  }
  return "unknown";
}

int j_offset(int m, int n) {
  if (m < 2 || m > n) {
    throw Error(ErrorCode::InvalidArgument,
                "block index m=" + std::to_string(m) + " outside 2.." + std::to_string(n));
  }
  int offset = 0;
  for (int l = 0; l <= n - m - 1; ++l) offset += 2 * (m + l);
  return offset;
}

FactorSequence factor_sequence(int n) {
  require_dimension(n);
  FactorSequence seq;
  seq.n = n;
  seq.factors.reserve(static_cast<std::size_t>(algebra_dim(n)));
  for (int m = n; m >= 2; --m) {
    const int j = j_offset(m, n);
    for (int k = 2; k <= m; ++k) {
      seq.factors.push_back({cartan_index(2), (2 * k - 3) + j, FactorKind::Lambda3, k, m});
      seq.factors.push_back({plane_index(k), 2 * (k - 1) + j, FactorKind::Plane, k, m});
    }
  }
  for (int a = 2; a <= n; ++a) {
    seq.factors.push_back({cartan_index(a), n * n - n + a - 1, FactorKind::Cartan, a, 0});
  }
  return seq;
}

namespace {

// Diagonal of lambda_{a^2-1}: sqrt(2/(a^2-a)) * (1, .., 1, -(a-1), 0, .., 0).
double cartan_weight(int level, int row) {
  const double scale = std::sqrt(2.0 / (level * level - level));
  if (row < level - 1) return scale;
  if (row == level - 1) return -(level - 1) * scale;
  return 0.0;
}

}  // namespace

void multiply_factor_right(ComplexMatrix& m, const EulerFactor& factor, double angle) {
  switch (factor.kind) {
    case FactorKind::Lambda3:
      m.col(0) *= std::polar(1.0, angle);
      m.col(1) *= std::polar(1.0, -angle);
      break;
    case FactorKind::Plane: {
      // exp(i lambda theta) restricted to rows/cols {1,k} is [[c, s], [-s, c]].
      const double c = std::cos(angle);
      const double s = std::sin(angle);
      const int k = factor.level - 1;
      const Eigen::VectorXcd first = m.col(0);
      m.col(0) = c * first - s * m.col(k);
      m.col(k) = s * first + c * m.col(k);
      break;
    }
    case FactorKind::Cartan:
      for (int q = 0; q < factor.level; ++q) m.col(q) *= std::polar(1.0, cartan_weight(factor.level, q) * angle);
      break;
  }
}

ComplexMatrix factor_exponential(const EulerFactor& factor, double angle, int n) {
  require_dimension(n);
  ComplexMatrix e = ComplexMatrix::Identity(n, n);
  multiply_factor_right(e, factor, angle);
  return e;
}

namespace {

void check_params(int n, const ParamVector& p) {
  require_dimension(n);
  if (p.n() != n || p.size() != static_cast<std::size_t>(algebra_dim(n))) {
    throw Error(ErrorCode::InvalidArgument, "parameter vector does not belong to SU(" + std::to_string(n) + ")");
  }
}

}  // namespace

ComplexMatrix unitary(int n, const ParamVector& p) {
  check_params(n, p);
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  for (const EulerFactor& f : factor_sequence(n).factors) multiply_factor_right(u, f, p(f.param_index));
  return u;
}

ComplexMatrix unitary_transpose(int n, const ParamVector& p) {
  check_params(n, p);
  const FactorSequence seq = factor_sequence(n);
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  for (const EulerFactor& f : seq.factors | std::views::reverse) {
    const double sign = f.kind == FactorKind::Plane ? -1.0 : 1.0;
    multiply_factor_right(u, f, sign * p(f.param_index));
  }
  return u;
}

ComplexMatrix unitary_dagger(int n, const ParamVector& p) {
  check_params(n, p);
  const FactorSequence seq = factor_sequence(n);
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  for (const EulerFactor& f : seq.factors | std::views::reverse) {
    multiply_factor_right(u, f, -p(f.param_index));
  }
  return u;
}

}  // namespace sun
