#include <doctest.h>

#include <numbers>

#include "support/oracles.hpp"
#include "sun_euler/euler_param.hpp"
#include "sun_euler/lie_algebra.hpp"
#include "sun_euler/param_ranges.hpp"

using namespace sun;

namespace {

ParamVector random_params(int n, CounterRng& rng, RangeMode mode = RangeMode::Covering) {
  const RangeSet box = ranges(n, mode);
  ParamVector p(n);
  for (int i = 1; i <= box.size(); ++i) p(i) = box[i].lo + rng.uniform() * box[i].width();
  return p;
}

// Product of exponentials computed from the generator matrices directly.
ComplexMatrix unitary_oracle(int n, const ParamVector& p) {
  const GeneratorSet gs = make_generators(n);
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  for (const EulerFactor& f : factor_sequence(n).factors) {
    u = u * testing::expm_hermitian(gs[f.generator_index], p(f.param_index));
  }
  return u;
}

}  // namespace

TEST_CASE("j_offset matches its closed form") {
  for (int n = 2; n <= 12; ++n) {
    for (int m = 2; m <= n; ++m) CHECK(j_offset(m, n) == (n - m) * (n + m - 1));
  }
  CHECK(j_offset(5, 5) == 0);
  CHECK(j_offset(4, 5) == 8);
  CHECK(j_offset(3, 5) == 14);
  CHECK(j_offset(2, 5) == 18);
  CHECK_THROWS_AS(j_offset(1, 5), Error);
  CHECK_THROWS_AS(j_offset(6, 5), Error);
}

TEST_CASE("factor sequence shape") {
  for (int n = 2; n <= 9; ++n) {
    const FactorSequence seq = factor_sequence(n);
    REQUIRE(seq.factors.size() == static_cast<std::size_t>(n * n - 1));
    for (std::size_t i = 0; i < seq.factors.size(); ++i) CHECK(seq.factors[i].param_index == static_cast<int>(i) + 1);
    int cartan = 0;
    for (const EulerFactor& f : seq.factors) cartan += f.kind == FactorKind::Cartan;
    CHECK(cartan == n - 1);
  }
}

TEST_CASE("SU(3) factor list") {
  const std::vector<int> expected = {3, 2, 3, 5, 3, 2, 3, 8};
  std::vector<int> got;
  for (const EulerFactor& f : factor_sequence(3).factors) got.push_back(f.generator_index);
  CHECK(got == expected);
}

TEST_CASE("factor exponentials equal the eigendecomposition oracle") {
  CounterRng rng(7);
  for (int n = 2; n <= 6; ++n) {
    const GeneratorSet gs = make_generators(n);
    for (const EulerFactor& f : factor_sequence(n).factors) {
      const double a = -4.0 + 8.0 * rng.uniform();
      const ComplexMatrix closed = factor_exponential(f, a, n);
      const ComplexMatrix oracle = testing::expm_hermitian(gs[f.generator_index], a);
      CHECK((closed - oracle).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("unitary equals the product of oracle exponentials") {
  CounterRng rng(11);
  for (int n = 2; n <= 5; ++n) {
    const ParamVector p = random_params(n, rng);
    CHECK((unitary(n, p) - unitary_oracle(n, p)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("unitary is special unitary") {
  CounterRng rng(3);
  for (int n = 2; n <= 9; ++n) {
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix u = unitary(n, random_params(n, rng));
      CHECK((u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-11);
      CHECK(std::abs(u.determinant() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("transpose and dagger variants") {
  CounterRng rng(5);
  for (int n = 2; n <= 6; ++n) {
    const ParamVector p = random_params(n, rng);
    const ComplexMatrix u = unitary(n, p);
    CHECK((unitary_transpose(n, p) - u.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((unitary_dagger(n, p) - u.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("zero angles give the identity") {
  for (int n = 2; n <= 5; ++n) CHECK((unitary(n, ParamVector(n)) - ComplexMatrix::Identity(n, n)).norm() == 0.0);
}

TEST_CASE("SU(2) closed form") {
  // U = exp(i s3 a1) exp(i s2 a2) exp(i s3 a3)
  const double a1 = 0.3, a2 = 0.7, a3 = -1.1;
  const ComplexMatrix u = unitary(2, ParamVector(2, {a1, a2, a3}));
  const Complex i(0, 1);
  CHECK(std::abs(u(0, 0) - std::exp(i * (a1 + a3)) * std::cos(a2)) < 1e-15);
  CHECK(std::abs(u(0, 1) - std::exp(i * (a1 - a3)) * std::sin(a2)) < 1e-15);
  CHECK(std::abs(u(1, 0) + std::exp(-i * (a1 - a3)) * std::sin(a2)) < 1e-15);
  CHECK(std::abs(u(1, 1) - std::exp(-i * (a1 + a3)) * std::cos(a2)) < 1e-15);
}

TEST_CASE("parameter vector length is validated") {
  CHECK_THROWS_AS(ParamVector(3, {0.0, 1.0}), Error);
  CHECK_THROWS_AS(unitary(3, ParamVector(2)), Error);
  try {
    unitary(3, ParamVector(2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}
