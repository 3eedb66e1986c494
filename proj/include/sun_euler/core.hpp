#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sun {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Machine-readable failure category carried by every library exception.
enum class ErrorCode {
  InvalidDimension,
  InvalidArgument,
  DomainError,
  InternalConsistency,
  InsufficientSamples,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throws InvalidDimension unless n >= 2.
void require_dimension(int n);

/// Number of su(N) generators, N^2 - 1.
constexpr int algebra_dim(int n) noexcept { return n * n - 1; }

/// Euler angles alpha_1 .. alpha_{N^2-1}, addressed with the same 1-based
/// subscripts used in the printed factor lists.
class ParamVector {
 public:
  ParamVector() = default;
  /// All-zero vector for SU(n).
  explicit ParamVector(int n);
  ParamVector(int n, std::vector<double> alpha);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return alpha_.size(); }

  double operator()(int index) const { return alpha_.at(static_cast<std::size_t>(index - 1)); }
  double& operator()(int index) { return alpha_.at(static_cast<std::size_t>(index - 1)); }

  std::span<const double> values() const noexcept { return alpha_; }

 private:
  int n_ = 0;
  std::vector<double> alpha_;
};

}  // namespace sun
