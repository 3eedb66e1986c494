#pragma once

// Published closed-form values for the generalized Euler angle
// parametrization of SU(N): printed factor orderings, Haar kernel factors,
// group volumes, parameter boxes and diagonal density coefficients.  These
// are transcriptions, kept independent of the code that computes the same
// quantities so that each can be checked against the other.

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace sun::reference {

// Generator index of the factor carrying alpha_i, i = 1..N^2-1.
inline constexpr std::array<int, 3> kPrintedGeneratorsSU2 = {3, 2, 3};
inline constexpr std::array<int, 8> kPrintedGeneratorsSU3 = {3, 2, 3, 5, 3, 2, 3, 8};
inline constexpr std::array<int, 15> kPrintedGeneratorsSU4 = {3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15};
inline constexpr std::array<int, 24> kPrintedGeneratorsSU5 = {3, 2, 3, 5, 3, 10, 3, 17, 3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15, 24};
inline constexpr std::array<int, 35> kPrintedGeneratorsSU6 = {3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 2, 3, 5, 3, 10, 3, 17, 3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15, 24, 35};
inline constexpr std::array<int, 63> kPrintedGeneratorsSU8 = {3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 37, 3, 50, 3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 37, 3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 2, 3, 5, 3, 10, 3, 17, 3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15, 24, 35, 48, 63};
inline constexpr std::array<int, 80> kPrintedGeneratorsSU9 = {3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 37, 3, 50, 3, 65, 3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 37, 3, 50, 3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 37, 3, 2, 3, 5, 3, 10, 3, 17, 3, 26, 3, 2, 3, 5, 3, 10, 3, 17, 3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15, 24, 35, 48, 63, 80};

inline std::span<const int> printed_generators(int n) {
  switch (n) {
    case 2: return kPrintedGeneratorsSU2;
    case 3: return kPrintedGeneratorsSU3;
    case 4: return kPrintedGeneratorsSU4;
    case 5: return kPrintedGeneratorsSU5;
    case 6: return kPrintedGeneratorsSU6;
    case 8: return kPrintedGeneratorsSU8;
    case 9: return kPrintedGeneratorsSU9;
    default: return {};
  }
}

/// One printed kernel factor: sin(2a) when `sin2`, else cos(a)^cos_power sin(a)^sin_power.
struct PrintedKernelTerm {
  int param_index;
  bool sin2;
  int cos_power;
  int sin_power;

  double operator()(double a) const {
    return sin2 ? std::sin(2.0 * a) : std::pow(std::cos(a), cos_power) * std::pow(std::sin(a), sin_power);
  }
};

inline const std::vector<PrintedKernelTerm> kPrintedKernelSU3 = {{2, true, 0, 0}, {4, false, 1, 3}, {6, true, 0, 0}};
inline const std::vector<PrintedKernelTerm> kPrintedKernelSU4 = {{2, true, 0, 0},   {4, false, 3, 1}, {6, false, 1, 5},
                                                                  {8, true, 0, 0},   {10, false, 1, 3}, {12, true, 0, 0}};
inline const std::vector<PrintedKernelTerm> kPrintedKernelSU5 = {
    {2, true, 0, 0},   {4, false, 3, 1},  {6, false, 5, 1}, {8, false, 1, 7},  {10, true, 0, 0},
    {12, false, 3, 1}, {14, false, 1, 5}, {16, true, 0, 0}, {18, false, 1, 3}, {20, true, 0, 0}};
inline const std::vector<PrintedKernelTerm> kPrintedKernelSU2 = {{2, true, 0, 0}};
inline const std::vector<PrintedKernelTerm> kPrintedKernelSU6 = {{2, true, 0, 0}, {4, false, 3, 1}, {6, false, 5, 1}, {8, false, 7, 1}, {10, false, 1, 9}, {12, true, 0, 0}, {14, false, 3, 1}, {16, false, 5, 1}, {18, false, 1, 7}, {20, true, 0, 0}, {22, false, 3, 1}, {24, false, 1, 5}, {26, true, 0, 0}, {28, false, 1, 3}, {30, true, 0, 0}};
inline const std::vector<PrintedKernelTerm> kPrintedKernelSU8 = {{2, true, 0, 0}, {4, false, 3, 1}, {6, false, 5, 1}, {8, false, 7, 1}, {10, false, 9, 1}, {12, false, 11, 1}, {14, false, 1, 13}, {16, true, 0, 0}, {18, false, 3, 1}, {20, false, 5, 1}, {22, false, 7, 1}, {24, false, 9, 1}, {26, false, 1, 11}, {28, true, 0, 0}, {30, false, 3, 1}, {32, false, 5, 1}, {34, false, 7, 1}, {36, false, 1, 9}, {38, true, 0, 0}, {40, false, 3, 1}, {42, false, 5, 1}, {44, false, 1, 7}, {46, true, 0, 0}, {48, false, 3, 1}, {50, false, 1, 5}, {52, true, 0, 0}, {54, false, 1, 3}, {56, true, 0, 0}};
inline const std::vector<PrintedKernelTerm> kPrintedKernelSU9 = {{2, true, 0, 0}, {4, false, 3, 1}, {6, false, 5, 1}, {8, false, 7, 1}, {10, false, 9, 1}, {12, false, 11, 1}, {14, false, 13, 1}, {16, false, 1, 15}, {18, true, 0, 0}, {20, false, 3, 1}, {22, false, 5, 1}, {24, false, 7, 1}, {26, false, 9, 1}, {28, false, 11, 1}, {30, false, 1, 13}, {32, true, 0, 0}, {34, false, 3, 1}, {36, false, 5, 1}, {38, false, 7, 1}, {40, false, 9, 1}, {42, false, 1, 11}, {44, true, 0, 0}, {46, false, 3, 1}, {48, false, 5, 1}, {50, false, 7, 1}, {52, false, 1, 9}, {54, true, 0, 0}, {56, false, 3, 1}, {58, false, 5, 1}, {60, false, 1, 7}, {62, true, 0, 0}, {64, false, 3, 1}, {66, false, 1, 5}, {68, true, 0, 0}, {70, false, 1, 3}, {72, true, 0, 0}};

/// The 8x8 block determinant printed for SU(5):
/// cos^3(a4) cos^5(a6) cos(a8) sin(2 a2) sin(a4) sin(a6) sin^7(a8).
inline const std::vector<PrintedKernelTerm> kPrintedBlockSU5 = {
    {2, true, 0, 0}, {4, false, 3, 1}, {6, false, 5, 1}, {8, false, 1, 7}};

inline std::span<const PrintedKernelTerm> printed_kernel(int n) {
  switch (n) {
    case 2: return kPrintedKernelSU2;
    case 3: return kPrintedKernelSU3;
    case 4: return kPrintedKernelSU4;
    case 5: return kPrintedKernelSU5;
    case 6: return kPrintedKernelSU6;
    case 8: return kPrintedKernelSU8;
    case 9: return kPrintedKernelSU9;
    default: return {};
  }
}

/// Printed SU(N) volumes; 0 where none is printed.
inline double printed_volume(int n) {
  constexpr double pi = std::numbers::pi;
  switch (n) {
    case 2: return 2.0 * std::pow(pi, 2);
    case 3: return std::sqrt(3.0) * std::pow(pi, 5);
    case 4: return std::sqrt(2.0) * std::pow(pi, 9) / 3.0;
    case 5: return std::sqrt(5.0) * std::pow(pi, 14) / 72.0;
    case 6: return std::pow(pi, 20) / (1440.0 * std::sqrt(3.0));
    case 8: return std::pow(pi, 35) / 391910400.0;
    case 9: return std::pow(pi, 44) / 105345515520000.0;
    default: return 0.0;
  }
}

/// pi^35 / 3919104000, the SU(8) volume implied by the general formula.  The
/// printed denominator 391910400 is short by a factor of ten.
inline double corrected_su8_volume() { return std::pow(std::numbers::pi, 35) / 3919104000.0; }

/// Printed Omega_N values.
inline constexpr std::array<std::pair<int, long long>, 5> kPrintedOmega = {
    {{2, 2}, {3, 12}, {4, 192}, {5, 7680}, {6, 737280}}};

// Upper bounds of the printed parameter boxes, alpha_1 first.  The SU(3)
// boxes are printed inside SU(4) as alpha_7..alpha_14 and are shifted here to
// alpha_1..alpha_8.
namespace detail {
inline constexpr double pi = std::numbers::pi;
inline constexpr double h = std::numbers::pi / 2.0;
inline constexpr double t = 2.0 * std::numbers::pi;
}  // namespace detail

inline std::vector<double> printed_quotient_upper(int n) {
  using namespace detail;
  switch (n) {
    case 2: return {pi, h, pi};
    case 3: return {pi, h, pi, h, pi, h, pi, pi / std::sqrt(3.0)};
    case 4: return {pi, h, pi, h, pi, h, pi, h, pi, h, pi, h, pi, pi / std::sqrt(3.0), pi / std::sqrt(6.0)};
    case 5:
    case 6: {
      std::vector<double> out;
      for (int i = 1; i <= n * (n - 1) / 2; ++i) {
        out.push_back(pi);
        out.push_back(h);
      }
      out.push_back(pi);
      const std::array<double, 4> tail = {pi / std::sqrt(3.0), pi / std::sqrt(6.0), pi / std::sqrt(10.0),
                                          pi / std::sqrt(15.0)};
      for (int a = 3; a <= n; ++a) out.push_back(tail[a - 3]);
      return out;
    }
    default: return {};
  }
}

inline std::vector<double> printed_covering_upper(int n) {
  using namespace detail;
  switch (n) {
    case 2: return {pi, h, t};
    case 3: return {pi, h, t, h, pi, h, t, std::sqrt(3.0) * pi};
    case 4:
      return {pi, h, t, h, t, h, pi, h, t, h, pi, h, t, std::sqrt(3.0) * pi, 2.0 * std::sqrt(2.0 / 3.0) * pi};
    case 5: {
      std::vector<double> out(24, 0.0);
      for (int i : {1, 9, 15, 19}) out[i - 1] = pi;
      for (int i : {2, 4, 6, 8, 10, 12, 14, 16, 18, 20}) out[i - 1] = h;
      for (int i : {3, 5, 7, 11, 13, 17, 21}) out[i - 1] = t;
      out[21] = std::sqrt(3.0) * pi;
      out[22] = 2.0 * std::sqrt(2.0 / 3.0) * pi;
      out[23] = std::sqrt(2.5) * pi;
      return out;
    }
    default: return {};
  }
}

/// Printed coefficients f_a of lambda_{a^2-1}, a = 2..N, for the two-qubit
/// (N=4), qubit/qutrit (N=6), three-qubit (N=8) and two-qutrit (N=9) cases.
/// The N=9 lambda_80 entry is reproduced as printed; see
/// corrected_lambda80_coefficient.
inline std::vector<double> printed_rho_coefficients(int n, std::span<const double> theta) {
  auto s2 = [&](int j) { return std::pow(std::sin(theta[j - 1]), 2); };
  auto c2t = [&](int j) { return std::cos(2.0 * theta[j - 1]); };
  // prod_{j=from}^{n-1} sin^2 theta_j
  auto tail = [&](int from) {
    double p = 1.0;
    for (int j = from; j <= n - 1; ++j) p *= s2(j);
    return p;
  };
  if (n == 4) {
    const double w2 = s2(1), x2 = s2(2), y2 = s2(3);
    return {0.5 * (-1.0 + 2.0 * w2) * x2 * y2, (-2.0 + 3.0 * x2) * y2 / (2.0 * std::sqrt(3.0)),
            (-3.0 + 4.0 * y2) / (2.0 * std::sqrt(6.0))};
  }
  if (n != 6 && n != 8 && n != 9) return {};
  std::vector<double> f = {
      -c2t(1) * tail(2) / 2.0,
      -(1.0 + 3.0 * c2t(2)) * tail(3) / (4.0 * std::sqrt(3.0)),
      -(1.0 + 2.0 * c2t(3)) * tail(4) / (2.0 * std::sqrt(6.0)),
      -(3.0 + 5.0 * c2t(4)) * tail(5) / (4.0 * std::sqrt(10.0)),
      -(2.0 + 3.0 * c2t(5)) * tail(6) / (2.0 * std::sqrt(15.0)),
  };
  if (n >= 8) {
    f.push_back(-(5.0 + 7.0 * c2t(6)) * tail(7) / (4.0 * std::sqrt(21.0)));
    f.push_back(-(3.0 + 4.0 * c2t(7)) * tail(8) / (4.0 * std::sqrt(7.0)));
  }
  if (n == 9) f.push_back(-(7.0 / 12.0 - 3.0 * c2t(8) / 4.0) / 2.0);
  return f;
}

/// The two-qutrit lambda_80 coefficient as implied by Tr[rho_d lambda_80]/2:
/// (1 - 9 cos^2 theta_8)/12 = -(7/12 + 3 cos(2 theta_8)/4)/2.  The printed
/// string carries the opposite sign on the cosine term.
inline double corrected_lambda80_coefficient(double theta8) {
  return -(7.0 / 12.0 + 3.0 * std::cos(2.0 * theta8) / 4.0) / 2.0;
}

}  // namespace sun::reference
