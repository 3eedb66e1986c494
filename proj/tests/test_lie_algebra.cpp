#include <doctest.h>

#include <set>

#include "sun_euler/lie_algebra.hpp"

using namespace sun;

TEST_CASE("generators are Hermitian, traceless and orthonormal") {
  for (int n = 2; n <= 9; ++n) {
    const GeneratorSet gs = make_generators(n);
    REQUIRE(gs.size() == n * n - 1);
    for (int i = 1; i <= gs.size(); ++i) {
      CHECK((gs[i] - gs[i].adjoint()).cwiseAbs().maxCoeff() == 0.0);
      CHECK(std::abs(gs[i].trace()) < 1e-14);
      for (int j = i; j <= gs.size(); ++j) {
        const double expected = i == j ? 2.0 : 0.0;
        CHECK(std::abs((gs[i] * gs[j]).trace() - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("su(2) generators are the Pauli matrices") {
  const GeneratorSet gs = make_generators(2);
  CHECK(gs[1](0, 1) == Complex(1, 0));
  CHECK(gs[2](0, 1) == Complex(0, -1));
  CHECK(gs[2](1, 0) == Complex(0, 1));
  CHECK(gs[3](0, 0) == Complex(1, 0));
  CHECK(gs[3](1, 1) == Complex(-1, 0));
}

TEST_CASE("su(3) follows the Gell-Mann ordering") {
  const GeneratorSet gs = make_generators(3);
  CHECK(gs[4](0, 2) == Complex(1, 0));
  CHECK(gs[5](0, 2) == Complex(0, -1));
  CHECK(gs[6](1, 2) == Complex(1, 0));
  CHECK(gs[7](1, 2) == Complex(0, -1));
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(gs[8](0, 0) - s) < 1e-15);
  CHECK(std::abs(gs[8](2, 2) + 2.0 * s) < 1e-15);
}

TEST_CASE("plane generators rotate the (1,k) plane") {
  for (int n = 2; n <= 6; ++n) {
    const GeneratorSet gs = make_generators(n);
    for (int k = 2; k <= n; ++k) {
      const ComplexMatrix& g = gs[plane_index(k)];
      CHECK(g(0, k - 1) == Complex(0, -1));
      CHECK(g(k - 1, 0) == Complex(0, 1));
      CHECK(g.cwiseAbs().sum() == doctest::Approx(2.0));
    }
  }
}

TEST_CASE("su(2) structure constants are the Levi-Civita symbol") {
  const StructureConstants f = structure_constants(make_generators(2));
  CHECK(f(1, 2, 3) == doctest::Approx(1.0));
  CHECK(f(2, 3, 1) == doctest::Approx(1.0));
  CHECK(f(2, 1, 3) == doctest::Approx(-1.0));
  CHECK(f(1, 1, 3) == 0.0);
}

TEST_CASE("su(3) structure constants match the standard table") {
  const StructureConstants f = structure_constants(make_generators(3));
  CHECK(f(1, 2, 3) == doctest::Approx(1.0));
  CHECK(f(1, 4, 7) == doctest::Approx(0.5));
  CHECK(f(1, 5, 6) == doctest::Approx(-0.5));
  CHECK(f(2, 4, 6) == doctest::Approx(0.5));
  CHECK(f(2, 5, 7) == doctest::Approx(0.5));
  CHECK(f(3, 4, 5) == doctest::Approx(0.5));
  CHECK(f(3, 6, 7) == doctest::Approx(-0.5));
  CHECK(f(4, 5, 8) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(f(6, 7, 8) == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("structure constants are totally antisymmetric") {
  const StructureConstants f = structure_constants(make_generators(4));
  for (const auto& [key, v] : f.entries()) {
    const auto [i, j, k] = key;
    CHECK(f(j, i, k) == doctest::Approx(-v));
    CHECK(f(j, k, i) == doctest::Approx(v));
    CHECK(f(i, k, j) == doctest::Approx(-v));
  }
}

TEST_CASE("Cartan split partitions the algebra and closes") {
  for (int n = 3; n <= 6; ++n) {
    const CartanSplit split = cartan_split(n);
    CHECK_FALSE(split.degenerate);
    CHECK(split.p_indices.size() == static_cast<std::size_t>(2 * (n - 1)));
    std::set<int> k(split.k_indices.begin(), split.k_indices.end());
    std::set<int> p(split.p_indices.begin(), split.p_indices.end());
    CHECK(k.size() + p.size() == static_cast<std::size_t>(n * n - 1));
    CHECK(k.count(n * n - 1) == 1);
    const StructureConstants f = structure_constants(make_generators(n));
    for (const auto& [key, v] : f.entries()) {
      if (std::abs(v) <= 1e-10) continue;
      const auto [a, b, c] = key;
      const bool ka = k.count(a) != 0;
      const bool kb = k.count(b) != 0;
      const bool kc = k.count(c) != 0;
      // [K,K] in K, [P,P] in K, [K,P] in P
      CHECK(kc == (ka == kb));
    }
  }
}

TEST_CASE("SU(4) Cartan split indices") {
  const CartanSplit split = cartan_split(4);
  CHECK(split.p_indices == std::vector<int>{9, 10, 11, 12, 13, 14});
  CHECK(split.k_indices.back() == 15);
}

TEST_CASE("n = 2 split is flagged degenerate") {
  const CartanSplit split = cartan_split(2);
  CHECK(split.degenerate);
  CHECK(split.k_indices == std::vector<int>{3});
  CHECK(split.p_indices == std::vector<int>{1, 2});
}

TEST_CASE("invalid dimension is rejected") {
  CHECK_THROWS_AS(make_generators(1), Error);
  try {
    make_generators(0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidDimension);
  }
  CHECK_THROWS_AS(make_generators(3)[9], std::out_of_range);
}
