#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sun_euler/core.hpp"
#include "sun_euler/haar_measure.hpp"
#include "sun_euler/param_ranges.hpp"
#include "sun_euler/rng.hpp"

namespace sun {

struct SamplerConfig {
  int n = 2;
  std::uint64_t seed = 0;
  RangeMode mode = RangeMode::Covering;  ///< box for the flat (lambda_3 and Cartan) directions
};

/// How sample_density chooses theta.  Uniform draws theta uniformly over the
/// ordered theta box; this is a convenience distribution, not a Haar-induced
/// measure on density matrices.
enum class ThetaMode { Endpoints, Uniform };

ThetaMode theta_mode_from_string(const std::string& s);

/// Inverse CDF of the normalised kernel factor on [0, pi/2]:
///   k = 2      sin(2a)             a = asin(sqrt(u))
///   2 < k < m  cos^{2k-3} a sin a  a = acos((1-u)^{1/(2k-2)})
///   k = m > 2  cos a sin^{2m-3} a  a = asin(u^{1/(2m-2)})
double plane_angle_from_uniform(const KernelTerm& term, double u);

/// Haar-distributed draws on SU(N).  The kernel factorises over the Euler
/// angles, so each angle is drawn independently: flat directions uniformly,
/// plane angles through their inverse CDFs.
class HaarSampler {
 public:
  explicit HaarSampler(SamplerConfig cfg, std::uint64_t stream = 0);

  const SamplerConfig& config() const noexcept { return cfg_; }

  ParamVector sample_angles();
  ComplexMatrix sample_unitary();
  ComplexMatrix sample_density(ThetaMode theta_mode);

 private:
  SamplerConfig cfg_;
  RangeSet box_;
  std::vector<std::optional<KernelTerm>> terms_;  ///< by param index; empty for flat directions
  CounterRng rng_;
};

}  // namespace sun
