#include "sun_euler/param_ranges.hpp"

#include <cmath>
#include <numbers>

#include "sun_euler/euler_param.hpp"

namespace sun {

const char* to_string(RangeMode mode) noexcept {
  return mode == RangeMode::Quotient ? "quotient" : "covering";
}

RangeMode range_mode_from_string(const std::string& s) {
  if (s == "quotient") return RangeMode::Quotient;
  if (s == "covering") return RangeMode::Covering;
  throw Error(ErrorCode::InvalidArgument, "unknown range mode '" + s + "' (expected quotient|covering)");
}

RangeSet::RangeSet(int n, RangeMode mode, std::vector<Bound> bounds) : n_(n), mode_(mode), bounds_(std::move(bounds)) {
  require_dimension(n);
  if (bounds_.size() != static_cast<std::size_t>(algebra_dim(n))) {
    throw Error(ErrorCode::InvalidArgument, "range set size does not match SU(" + std::to_string(n) + ")");
  }
}

double RangeSet::box_measure() const noexcept {
  double v = 1.0;
  for (const Bound& b : bounds_) v *= b.width();
  return v;
}

bool RangeSet::contains(const ParamVector& p, double slack) const {
  if (p.n() != n_) return false;
  for (int i = 1; i <= size(); ++i) {
    const Bound& b = (*this)[i];
    if (p(i) < b.lo - slack || p(i) > b.hi + slack) return false;
  }
  return true;
}

namespace {

double cartan_bound(int level) { return std::numbers::pi * std::sqrt(2.0 / (level * (level - 1))); }

}  // namespace

RangeSet ranges(int n, RangeMode mode) {
  const FactorSequence seq = factor_sequence(n);
  std::vector<Bound> bounds(seq.factors.size());
  const bool covering = mode == RangeMode::Covering;
  for (const EulerFactor& f : seq.factors) {
    double hi = 0.0;
    switch (f.kind) {
      case FactorKind::Lambda3:
        hi = (covering && f.level > 2) ? 2.0 * std::numbers::pi : std::numbers::pi;
        break;
      case FactorKind::Plane:
        hi = std::numbers::pi / 2.0;
        break;
      case FactorKind::Cartan:
        hi = cartan_bound(f.level) * (covering ? f.level : 1);
        break;
    }
    bounds[static_cast<std::size_t>(f.param_index - 1)] = {0.0, hi};
  }
  return RangeSet(n, mode, std::move(bounds));
}

RangeSet quotient_ranges(int n) { return ranges(n, RangeMode::Quotient); }

RangeSet covering_ranges(int n) { return ranges(n, RangeMode::Covering); }

}  // namespace sun
