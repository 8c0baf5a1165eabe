#include <doctest.h>

#include <random>

#include "polarmap/linalg.hpp"
#include "test_support.hpp"

using namespace polarmap;

namespace {

template <int N>
CMatrix<N> random_hermitian(std::mt19937_64& rng) {
  CMatrix<N> g;
  for (auto& z : g.a) z = testing::random_cplx(rng);
  CMatrix<N> m;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) m(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  return m;
}

template <int N>
void check_eigh(const CMatrix<N>& m) {
  const auto eig = eigh_hermitian(m);

  // residual A v = lambda v per column
  for (int j = 0; j < N; ++j) {
    for (int r = 0; r < N; ++r) {
      cplx av = 0.0;
      for (int c = 0; c < N; ++c) av += m(r, c) * eig.vectors(c, j);
      CHECK(std::abs(av - eig.values[j] * eig.vectors(r, j)) < 1e-12);
    }
  }

  // orthonormal eigenbasis
  CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors, CMatrix<N>::identity()) < 1e-13);

  // descending order
  for (int j = 1; j < N; ++j) CHECK(eig.values[j - 1] >= eig.values[j]);

  // spectral reconstruction
  CMatrix<N> recon;
  for (int mu = 0; mu < N; ++mu)
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c)
        recon(r, c) += eig.values[mu] * eig.vectors(r, mu) * std::conj(eig.vectors(c, mu));
  CHECK(max_abs_diff(recon, m) < 1e-12);
}

}  // namespace

TEST_CASE("jacobi eigensolver on random hermitian matrices") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    check_eigh(random_hermitian<2>(rng));
    check_eigh(random_hermitian<4>(rng));
  }
}

TEST_CASE("jacobi eigensolver handles degenerate spectra") {
  check_eigh(CMat4::identity());
  CMat4 half = 0.5 * CMat4::identity();
  const auto eig = eigh_hermitian(half);
  for (double v : eig.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));

  // projector with a double eigenvalue
  CMat2 proj;
  proj(0, 0) = 1.0;
  check_eigh(proj);
}

TEST_CASE("jacobi eigensolver is deterministic") {
  std::mt19937_64 rng(77);
  const CMat4 m = random_hermitian<4>(rng);
  const auto a = eigh_hermitian(m);
  const auto b = eigh_hermitian(m);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("kron indexing follows the composite-index convention") {
  std::mt19937_64 rng(3);
  const CMat2 x = random_hermitian<2>(rng), y = random_hermitian<2>(rng);
  const CMat4 k = kron(x, y);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(k(2 * i + a, 2 * j + b) == x(i, j) * y(a, b));
}

TEST_CASE("sqrt_psd squares back to the input") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const CMat4 rho = testing::random_density<4>(rng);
    const CMat4 root = sqrt_psd(rho);
    CHECK(max_abs_diff(root * root, rho) < 1e-12);
  }
}

TEST_CASE("eigh rejects non-finite input") {
  CMat2 bad;
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eigh_hermitian(bad), ValidationError);
}
