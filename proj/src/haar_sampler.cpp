#include "sun_euler/haar_sampler.hpp"

#include <cmath>
#include <optional>

#include "sun_euler/density_matrix.hpp"
#include "sun_euler/euler_param.hpp"

namespace sun {

ThetaMode theta_mode_from_string(const std::string& s) {
  if (s == "endpoints") return ThetaMode::Endpoints;
  if (s == "uniform") return ThetaMode::Uniform;
  throw Error(ErrorCode::InvalidArgument, "unknown theta mode '" + s + "' (expected endpoints|uniform)");
}

double plane_angle_from_uniform(const KernelTerm& term, double u) {
  switch (term.kind) {
    case KernelCase::Sin2: return std::asin(std::sqrt(u));
    case KernelCase::CosPower: return std::acos(std::pow(1.0 - u, 1.0 / (2 * term.k - 2)));
    case KernelCase::SinPower: return std::asin(std::pow(u, 1.0 / (2 * term.m - 2)));
  }
  return 0.0;
}

HaarSampler::HaarSampler(SamplerConfig cfg, std::uint64_t stream)
    : cfg_(cfg),
      box_(ranges(cfg.n, cfg.mode)),
      terms_(static_cast<std::size_t>(algebra_dim(cfg.n))),
      rng_(cfg.seed, stream) {
  for (const KernelTerm& t : kernel_terms(cfg.n)) terms_[static_cast<std::size_t>(t.param_index - 1)] = t;
}

ParamVector HaarSampler::sample_angles() {
  ParamVector p(cfg_.n);
  for (int i = 1; i <= box_.size(); ++i) {
    const std::optional<KernelTerm>& term = terms_[static_cast<std::size_t>(i - 1)];
    const double u = rng_.uniform();
    p(i) = term ? plane_angle_from_uniform(*term, u) : box_[i].lo + u * box_[i].width();
  }
  return p;
}

ComplexMatrix HaarSampler::sample_unitary() { return unitary(cfg_.n, sample_angles()); }

ComplexMatrix HaarSampler::sample_density(ThetaMode theta_mode) {
  DensitySpec spec;
  spec.n = cfg_.n;
  for (const Bound& b : theta_ranges(cfg_.n)) {
    spec.theta.push_back(theta_mode == ThetaMode::Endpoints ? b.lo : b.lo + rng_.uniform() * b.width());
  }
  spec.alpha = sample_angles();
  return density(spec);
}

}  // namespace sun
