#include "sun_euler/group_volume.hpp"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sun_euler/euler_param.hpp"
#include "sun_euler/haar_measure.hpp"
#include "sun_euler/rng.hpp"

namespace sun {

using Rational = boost::multiprecision::cpp_rational;

const char* to_string(VolumeMethod method) noexcept {
  switch (method) {
    case VolumeMethod::Marinov: return "marinov";
    case VolumeMethod::Quadrature: return "quadrature";
    case VolumeMethod::MonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

VolumeMethod volume_method_from_string(const std::string& s) {
  if (s == "marinov") return VolumeMethod::Marinov;
  if (s == "quadrature") return VolumeMethod::Quadrature;
  if (s == "mc" || s == "monte_carlo") return VolumeMethod::MonteCarlo;
  throw Error(ErrorCode::InvalidArgument, "unknown volume method '" + s + "' (expected marinov|quadrature|mc)");
}

BigInt omega(int n) {
  require_dimension(n);
  BigInt value = BigInt(1) << ((n - 2) * (n - 1) / 2);
  for (int k = 2; k <= n; ++k) value *= k;
  return value;
}

double marinov_volume(int n) {
  require_dimension(n);
  double inv_factorials = 1.0;
  double factorial = 1.0;
  for (int k = 1; k <= n - 1; ++k) {
    factorial *= k;
    inv_factorials /= factorial;
  }
  return std::pow(2.0, 0.5 * (n - 1)) * std::pow(std::numbers::pi, 0.5 * (n - 1) * (n + 2)) * std::sqrt(double(n)) *
         inv_factorials;
}

double quadrature_volume(int n) {
  require_dimension(n);
  // Kernel factors over [0, pi/2]: V(2,m) = 1, V(k,m) = 1/(2(k-1)).
  Rational rational_part(omega(n));
  for (int m = 2; m <= n; ++m) {
    for (int k = 3; k <= m; ++k) rational_part /= 2 * (k - 1);
  }
  // Cartan widths pi sqrt(2/(k(k-1))): collect the square-root arguments.
  Rational cartan_squares(1);
  for (int k = 2; k <= n; ++k) cartan_squares *= Rational(2, k * (k - 1));

  // lambda_3 widths give pi^{N(N-1)/2}, Cartan widths pi^{N-1}.
  const int pi_power = n * (n - 1) / 2 + (n - 1);
  return static_cast<double>(rational_part) * std::sqrt(static_cast<double>(cartan_squares)) *
         std::pow(std::numbers::pi, pi_power);
}

double box_integral(const RangeSet& box) {
  const int n = box.n();
  std::vector<bool> in_kernel(static_cast<std::size_t>(box.size()), false);
  double value = 1.0;
  for (const KernelTerm& t : kernel_terms(n)) {
    const Bound& b = box[t.param_index];
    value *= t.integral(b.lo, b.hi);
    in_kernel[static_cast<std::size_t>(t.param_index - 1)] = true;
  }
  for (int i = 1; i <= box.size(); ++i) {
    if (!in_kernel[static_cast<std::size_t>(i - 1)]) value *= box[i].width();
  }
  return value;
}

namespace {

struct PartialSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

PartialSums sample_chunk(int n, const RangeSet& box, std::uint64_t count, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  ParamVector p(n);
  PartialSums out;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (int i = 1; i <= box.size(); ++i) p(i) = box[i].lo + rng.uniform() * box[i].width();
    const double k = kernel(n, p);
    out.sum += k;
    out.sum_sq += k * k;
  }
  return out;
}

}  // namespace

VolumeResult monte_carlo_volume(int n, std::uint64_t samples, std::uint64_t seed, int workers) {
  require_dimension(n);
  if (samples < kMinMonteCarloSamples) {
    throw Error(ErrorCode::InsufficientSamples, "Monte Carlo volume needs at least " +
                                                    std::to_string(kMinMonteCarloSamples) + " samples, got " +
                                                    std::to_string(samples) + "; raise --samples");
  }
  if (workers < 1) throw Error(ErrorCode::InvalidArgument, "workers must be positive");

  const RangeSet box = quotient_ranges(n);
  const auto w_count = static_cast<std::uint64_t>(workers);
  std::vector<PartialSums> partial(w_count);
  {
    std::vector<std::jthread> pool;
    pool.reserve(w_count);
    for (std::uint64_t w = 0; w < w_count; ++w) {
      const std::uint64_t count = samples / w_count + (w < samples % w_count ? 1 : 0);
      pool.emplace_back([&, w, count] { partial[w] = sample_chunk(n, box, count, seed, w); });
    }
  }
  PartialSums total;
  for (const PartialSums& ps : partial) {
    total.sum += ps.sum;
    total.sum_sq += ps.sum_sq;
  }
  const double count = static_cast<double>(samples);
  const double mean = total.sum / count;
  const double variance = std::max(0.0, (total.sum_sq - count * mean * mean) / (count - 1.0));
  const double scale = static_cast<double>(omega(n)) * box.box_measure();

  VolumeResult r;
  r.n = n;
  r.method = VolumeMethod::MonteCarlo;
  r.value = scale * mean;
  r.std_error = scale * std::sqrt(variance / count);
  r.samples = samples;
  r.seed = seed;
  return r;
}

}  // namespace sun
