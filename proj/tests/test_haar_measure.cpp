#include <doctest.h>

#include <numbers>

#include "support/quadrature.hpp"
#include "sun_euler/euler_param.hpp"
#include "sun_euler/haar_measure.hpp"
#include "sun_euler/reference_data.hpp"

using namespace sun;

TEST_CASE("kernel term census") {
  for (int n = 2; n <= 9; ++n) {
    const std::vector<KernelTerm> terms = kernel_terms(n);
    CHECK(terms.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    for (const KernelTerm& t : terms) {
      CHECK(t.param_index % 2 == 0);
      if (t.k == 2) CHECK(t.kind == KernelCase::Sin2);
      else if (t.k < t.m) CHECK(t.kind == KernelCase::CosPower);
      else CHECK(t.kind == KernelCase::SinPower);
    }
  }
}

TEST_CASE("kernel factors match the published lists") {
  CounterRng rng(17);
  for (int n : {2, 3, 4, 5, 6, 8, 9}) {
    for (int t = 0; t < 5; ++t) {
      const ParamVector p = interior_point(n, rng);
      double printed = 1.0;
      for (const auto& term : reference::printed_kernel(n)) printed *= term(p(term.param_index));
      CHECK(kernel(n, p) == doctest::Approx(printed).epsilon(1e-12));
    }
  }
}

TEST_CASE("SU(2) kernel is sin(2 a2)") {
  CHECK(kernel(2, ParamVector(2, {0.4, 0.3, 2.0})) == doctest::Approx(std::sin(0.6)));
}

TEST_CASE("exact antiderivatives agree with numerical quadrature") {
  for (int n = 2; n <= 9; ++n) {
    for (const KernelTerm& t : kernel_terms(n)) {
      for (auto [lo, hi] : {std::pair{0.0, std::numbers::pi / 2.0}, std::pair{0.2, 1.1}}) {
        CHECK(t.integral(lo, hi) == doctest::Approx(testing::numeric_integral(t, lo, hi)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("one-form determinant reproduces the kernel") {
  for (int n = 2; n <= 4; ++n) {
    const OracleReport r = check_oracle(n, 20, 1234);
    CHECK(r.max_relative_deviation <= 1e-8);
  }
}

TEST_CASE("SU(5) block determinant matches its printed form") {
  CounterRng rng(99);
  for (int t = 0; t < 2; ++t) {
    const ParamVector p = interior_point(5, rng);
    double printed = 1.0;
    for (const auto& term : reference::kPrintedBlockSU5) printed *= term(p(term.param_index));
    CHECK(oracle_block_determinant(5, p) == doctest::Approx(std::abs(printed)).epsilon(1e-8));
  }
}

TEST_CASE("block determinant is the m = N part of the kernel") {
  CounterRng rng(3);
  for (int n = 3; n <= 4; ++n) {
    const ParamVector p = interior_point(n, rng);
    double top = 1.0;
    for (const KernelTerm& t : kernel_terms(n)) {
      if (t.m == n) top *= t(p(t.param_index));
    }
    CHECK(oracle_block_determinant(n, p) == doctest::Approx(std::abs(top)).epsilon(1e-9));
  }
}

TEST_CASE("one-form coefficient rows are unit vectors") {
  // Each row expands a unitary conjugate of one generator, which keeps its norm.
  CounterRng rng(8);
  for (int n = 2; n <= 4; ++n) {
    const OneFormCoefficients c = one_form_coefficients(n, interior_point(n, rng));
    CHECK(c.c.rows() == n * n - 1);
    CHECK(c.c.cols() == n * n - 1);
    for (int l = 0; l < c.c.rows(); ++l) CHECK(c.c.row(l).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("interior points stay off the kernel's zero set") {
  CounterRng rng(1);
  for (int i = 0; i < 50; ++i) CHECK(std::abs(kernel(4, interior_point(4, rng))) > 0.0);
}

TEST_CASE("oracle rejects bad input") {
  CHECK_THROWS_AS(check_oracle(3, 0, 1), Error);
  CHECK_THROWS_AS(kernel(3, ParamVector(4)), Error);
}
