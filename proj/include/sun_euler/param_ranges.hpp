#pragma once

#include <utility>
#include <vector>

#include "sun_euler/core.hpp"

namespace sun {

enum class RangeMode {
  Quotient,  ///< box covering SU(N)/Z_N
  Covering,  ///< enlarged box covering SU(N)
};

const char* to_string(RangeMode mode) noexcept;
RangeMode range_mode_from_string(const std::string& s);

struct Bound {
  double lo = 0.0;
  double hi = 0.0;
  double width() const noexcept { return hi - lo; }
};

/// Per-parameter bounds, addressed by 1-based alpha subscript.
class RangeSet {
 public:
  RangeSet(int n, RangeMode mode, std::vector<Bound> bounds);

  int n() const noexcept { return n_; }
  RangeMode mode() const noexcept { return mode_; }
  int size() const noexcept { return static_cast<int>(bounds_.size()); }
  const Bound& operator[](int param_index) const { return bounds_.at(static_cast<std::size_t>(param_index - 1)); }
  const std::vector<Bound>& bounds() const noexcept { return bounds_; }

  /// Product of all widths.
  double box_measure() const noexcept;
  bool contains(const ParamVector& p, double slack = 0.0) const;

 private:
  int n_;
  RangeMode mode_;
  std::vector<Bound> bounds_;
};

/// lambda_3 factors [0, pi], plane factors [0, pi/2], Cartan level a
/// [0, pi sqrt(2/(a(a-1)))].
RangeSet quotient_ranges(int n);

/// Quotient box enlarged to the whole group: inside each block the first
/// lambda_3 keeps [0, pi] and the others double to [0, 2pi]; the Cartan
/// level-a bound is multiplied by a.  The widths multiply out to Omega_N
/// times the quotient box.
RangeSet covering_ranges(int n);

RangeSet ranges(int n, RangeMode mode);

}  // namespace sun
