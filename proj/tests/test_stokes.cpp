#include <doctest.h>

#include <random>

#include "polarmap/stokes.hpp"
#include "test_support.hpp"

using namespace polarmap;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("basis tables hold exactly") {
  const auto& b = basis();

  CHECK(b.pauli[1](0, 1) == cplx{1.0});
  CHECK(b.pauli[2](0, 1) == -I);
  CHECK(b.pauli[2](1, 0) == I);
  CHECK(b.pauli[3](1, 1) == cplx{-1.0});
  for (int beta = 0; beta < 4; ++beta) {
    CHECK(b.standard[beta](beta / 2, beta % 2) == cplx{1.0});
    CHECK(b.standard[beta].trace() == (beta == 0 || beta == 3 ? cplx{1.0} : cplx{0.0}));
  }

  // V row by row
  const CMat4 v_expected{{1, 0, 0, 1,  //
                          0, 1, 1, 0,  //
                          0, I, -I, 0,  //
                          1, 0, 0, -1}};
  CHECK(b.v == v_expected);

  // V^dag V = 2 I = V V^dag, exact in integer arithmetic
  CHECK(max_abs_diff(b.v.adjoint() * b.v, 2.0 * CMat4::identity()) == 0.0);
  CHECK(max_abs_diff(b.v * b.v.adjoint(), 2.0 * CMat4::identity()) == 0.0);
}

TEST_CASE("coherency_from_jones") {
  const double s = 1.0 / std::sqrt(2.0);

  auto j = coherency_from_jones({1.0, 0.0});
  CHECK(j.j(0, 0) == cplx{1.0});
  CHECK(j.j(1, 1) == cplx{0.0});

  j = coherency_from_jones({s, s});
  CHECK(std::abs(j.j(0, 1) - 0.5) < 1e-15);

  j = coherency_from_jones({s, s * I});
  CHECK(std::abs(j.j(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(j.j(0, 1) - (-0.5 * I)) < 1e-15);
  CHECK(std::abs(j.j(1, 0) - (0.5 * I)) < 1e-15);

  CHECK_THROWS_AS(coherency_from_jones({std::numeric_limits<double>::infinity(), 0.0}),
                  ValidationError);
}

TEST_CASE("jones-induced coherency matrices are rank-1 projectors") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const JonesVector e{testing::random_cplx(rng), testing::random_cplx(rng)};
    const CoherencyMatrix j = coherency_from_jones(e);
    CHECK(j.is_valid());
    const double tr = j.intensity();
    CHECK(max_abs_diff(j.j * j.j, tr * j.j) < 1e-12 * std::max(1.0, tr * tr));
    if (tr > 1e-6) CHECK(degree_of_polarization(j) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("stokes_from_coherency") {
  CoherencyMatrix j;
  j.j = CMat2{{1, 0, 0, 0}};
  StokesVector x = stokes_from_coherency(j);
  CHECK(x.x0 == 1.0);
  CHECK(x.x1 == 0.0);
  CHECK(x.x2 == 0.0);
  CHECK(x.x3 == 1.0);

  j.j = CMat2{{0.5, 0, 0, 0.5}};
  x = stokes_from_coherency(j);
  CHECK(x.x0 == 1.0);
  CHECK(x.x3 == 0.0);

  j.j = CMat2{{0.5, -0.5 * I, 0.5 * I, 0.5}};
  x = stokes_from_coherency(j);
  CHECK(x.x0 == doctest::Approx(1.0));
  CHECK(x.x2 == doctest::Approx(1.0));
  CHECK(std::abs(x.x1) < 1e-15);

  j.j = CMat2{{0, 1, 0, 0}};  // not Hermitian
  CHECK_THROWS_AS(stokes_from_coherency(j), NonHermitianError);
}

TEST_CASE("coherency_from_stokes") {
  CHECK(max_abs_diff(coherency_from_stokes({1, 0, 0, 0}).j, 0.5 * CMat2::identity()) == 0.0);
  CHECK(coherency_from_stokes({1, 0, 0, 1}).j(0, 0) == cplx{1.0});
  CHECK(coherency_from_stokes({1, 0, 0, 1}).j(1, 1) == cplx{0.0});

  const CoherencyMatrix j = coherency_from_stokes({2, 0, 2, 0});
  CHECK(j.j(0, 0) == cplx{1.0});
  CHECK(j.j(0, 1) == -I);
  CHECK(j.j(1, 0) == I);
}

TEST_CASE("stokes roundtrip on random hermitian matrices") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    CoherencyMatrix j;
    const cplx off = testing::random_cplx(rng);
    j.j(0, 0) = std::abs(testing::random_cplx(rng));
    j.j(1, 1) = std::abs(testing::random_cplx(rng));
    j.j(0, 1) = off;
    j.j(1, 0) = std::conj(off);
    const CoherencyMatrix back = coherency_from_stokes(stokes_from_coherency(j));
    CHECK(max_abs_diff(back.j, j.j) < 1e-12);
  }
}

TEST_CASE("standard and pauli components") {
  CoherencyMatrix j;
  j.j = CMat2{{1, 0, 0, 0}};
  auto y = standard_components(j);
  CHECK(y == std::array<cplx, 4>{1.0, 0.0, 0.0, 0.0});
  StokesVector x = stokes_from_standard(y);
  CHECK(x.x0 == 1.0);
  CHECK(x.x3 == 1.0);

  j.j = CMat2{{0.5, 0.5, 0.5, 0.5}};
  y = standard_components(j);
  x = stokes_from_standard(y);
  CHECK(x.x0 == doctest::Approx(1.0));
  CHECK(x.x1 == doctest::Approx(1.0));
  CHECK(std::abs(x.x2) < 1e-15);
  CHECK(std::abs(x.x3) < 1e-15);

  // column 2 of V is complex: y = (0,1,0,0) -> x = (0,1,i,0)
  const auto xc = pauli_from_standard({0.0, 1.0, 0.0, 0.0});
  CHECK(xc[0] == cplx{0.0});
  CHECK(xc[1] == cplx{1.0});
  CHECK(xc[2] == I);
  CHECK(xc[3] == cplx{0.0});
  CHECK_THROWS_AS(stokes_from_standard({0.0, 1.0, 0.0, 0.0}), ValidationError);
}

TEST_CASE("pauli/standard conversions invert each other") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<cplx, 4> y;
    for (auto& z : y) z = testing::random_cplx(rng);
    const auto back = standard_from_pauli(pauli_from_standard(y));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(back[k] - y[k]) < 1e-14);
  }
}

TEST_CASE("degree_of_polarization") {
  CoherencyMatrix j;
  j.j = CMat2{{1, 0, 0, 0}};
  CHECK(degree_of_polarization(j) == 1.0);

  j.j = 0.5 * CMat2::identity();
  CHECK(degree_of_polarization(j) == 0.0);

  j.j = CMat2{{0.75, 0, 0, 0.25}};
  CHECK(degree_of_polarization(j) == doctest::Approx(0.5).epsilon(1e-14));

  j.j = CMat2{};
  CHECK_THROWS_AS(degree_of_polarization(j), ZeroIntensityError);
}

TEST_CASE("convex mixtures depolarize unless proportional") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const CoherencyMatrix j1 = coherency_from_jones({testing::random_cplx(rng), testing::random_cplx(rng)});
    const CoherencyMatrix j2 = coherency_from_jones({testing::random_cplx(rng), testing::random_cplx(rng)});
    CoherencyMatrix mix;
    mix.j = 0.5 * (j1.j + j2.j);
    const double tr = mix.j.trace().real();
    if (tr < 1e-6) continue;
    const double p = degree_of_polarization(mix);
    CHECK(p <= 1.0);
    // Det(mix) > 0 exactly when the two beams are not proportional
    const double det = (mix.j(0, 0) * mix.j(1, 1) - mix.j(0, 1) * mix.j(1, 0)).real();
    if (det > 1e-3 && tr < 10.0) CHECK(p < 1.0 - 1e-5);
  }

  // same beam twice stays fully polarized
  const CoherencyMatrix j = coherency_from_jones({0.8, 0.6 * I});
  CoherencyMatrix twice;
  twice.j = 2.0 * j.j;
  CHECK(degree_of_polarization(twice) == doctest::Approx(1.0).epsilon(1e-12));
}
