#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sun_euler/core.hpp"
#include "sun_euler/param_ranges.hpp"

namespace sun {

using BigInt = boost::multiprecision::cpp_int;

enum class VolumeMethod { Marinov, Quadrature, MonteCarlo };

const char* to_string(VolumeMethod method) noexcept;
VolumeMethod volume_method_from_string(const std::string& s);

struct VolumeResult {
  int n = 0;
  double value = 0.0;
  VolumeMethod method = VolumeMethod::Marinov;
  double std_error = 0.0;  ///< 0 for the exact methods
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Omega_N = 2^{(N-2)(N-1)/2} N!, the ratio of the full to the quotient volume.
BigInt omega(int n);

/// V_SU(N) = 2^{(N-1)/2} pi^{(N-1)(N+2)/2} sqrt(N) prod_{k<N} 1/k!.
double marinov_volume(int n);

/// Omega_N times the factor-by-factor integral of the kernel over the quotient
/// box.  The rational parts (Omega_N, the V(k,m) product and the Cartan
/// widths squared) are combined exactly before conversion.
double quadrature_volume(int n);

/// Integral of K_SU(N) over an arbitrary parameter box, evaluated per factor
/// with exact antiderivatives (flat directions contribute their widths).
double box_integral(const RangeSet& box);

/// Smallest sample count monte_carlo_volume accepts.
inline constexpr std::uint64_t kMinMonteCarloSamples = 10'000;

/// Omega_N * |V'| * mean(K) over uniform points of the quotient box V'.
/// Samples are split into `workers` contiguous chunks, chunk w drawing from
/// counter stream (seed, w); partial sums are reduced in worker order, so the
/// result is bitwise reproducible for fixed (seed, workers).
VolumeResult monte_carlo_volume(int n, std::uint64_t samples, std::uint64_t seed, int workers = 1);

}  // namespace sun
