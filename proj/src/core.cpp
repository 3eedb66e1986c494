#include "sun_euler/core.hpp"

#include <utility>

namespace sun {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDimension: return "invalid-dimension";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::InternalConsistency: return "internal-consistency";
    case ErrorCode::InsufficientSamples: return "insufficient-samples";
  }
  return "unknown";
}

void require_dimension(int n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidDimension, "group dimension must be at least 2, got " + std::to_string(n));
  }
}

ParamVector::ParamVector(int n) : n_(n) {
  require_dimension(n);
  alpha_.assign(static_cast<std::size_t>(algebra_dim(n)), 0.0);
}

ParamVector::ParamVector(int n, std::vector<double> alpha) : n_(n), alpha_(std::move(alpha)) {
  require_dimension(n);
  if (alpha_.size() != static_cast<std::size_t>(algebra_dim(n))) {
    throw Error(ErrorCode::InvalidArgument, "SU(" + std::to_string(n) + ") needs " +
                                                std::to_string(algebra_dim(n)) + " angles, got " +
                                                std::to_string(alpha_.size()));
  }
}

}  // namespace sun
