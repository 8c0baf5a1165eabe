#include <doctest.h>

#include <numbers>
#include <random>

#include "polarmap/mueller.hpp"
#include "test_support.hpp"

using namespace polarmap;
using polarmap::testing::random_ensemble;
using polarmap::testing::random_unitary;

namespace {

RMat4 diag4(double a, double b, double c, double d) {
  RMat4 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

// Eq.-28 route: the Standard-basis matrix acting on vec(J) must equal T J T^dag.
CMat2 apply_std_to_coherency(const MuellerStd& m, const CMat2& j) {
  CMat2 out;
  for (int i = 0; i < 2; ++i)
    for (int jj = 0; jj < 2; ++jj)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(i, jj) += m.m(2 * i + jj, 2 * k + l) * j(k, l);
  return out;
}

}  // namespace

TEST_CASE("mueller_from_jones on reference elements") {
  auto forms = mueller_from_jones(JonesMatrix::identity());
  CHECK(max_abs_diff(forms.std_form.m, CMat4::identity()) == 0.0);
  CHECK(max_abs_diff(forms.real_form.m, RMat4::identity()) < 1e-15);

  forms = mueller_from_jones(jones_hwp(0.0));
  CHECK(max_abs_diff(forms.real_form.m, diag4(1, -1, -1, 1)) < 1e-15);

  forms = mueller_from_jones(JonesMatrix{basis().pauli[1]});
  CHECK(max_abs_diff(forms.real_form.m, diag4(1, 1, -1, -1)) < 1e-15);
}

TEST_CASE("standard form transforms coherency matrices like T J T^dag") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const JonesMatrix t = testing::random_jones(rng);
    const MuellerStd m = mueller_from_jones(t).std_form;
    const CMat2 j = testing::random_density<2>(rng);
    CHECK(max_abs_diff(apply_std_to_coherency(m, j), t.t * j * t.t.adjoint()) < 1e-12);
  }
}

TEST_CASE("mueller composition is functorial") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const JonesMatrix t1 = testing::random_passive_jones(rng);
    const JonesMatrix t2 = testing::random_passive_jones(rng);
    const MuellerForms lhs = mueller_from_jones(t1 * t2);
    const MuellerForms f1 = mueller_from_jones(t1), f2 = mueller_from_jones(t2);
    CHECK(max_abs_diff(lhs.std_form.m, (f1.std_form.m * f2.std_form.m)) < 1e-12);
    CHECK(max_abs_diff(lhs.real_form.m, (f1.real_form.m * f2.real_form.m)) < 1e-12);
  }
}

TEST_CASE("mueller_from_ensemble") {
  CHECK(max_abs_diff(mueller_from_ensemble({{1.0, JonesMatrix::identity()}}).std_form.m,
                     CMat4::identity()) == 0.0);

  const EnsembleSpec half_half{{0.5, JonesMatrix::identity()},
                               {0.5, JonesMatrix{basis().pauli[3]}}};
  CHECK(max_abs_diff(mueller_from_ensemble(half_half).real_form.m, diag4(1, 0, 0, 1)) < 1e-15);

  // homogeneity: weights need not sum to one
  const EnsembleSpec scaled{{0.5, JonesMatrix::identity()}};
  CHECK(max_abs_diff(mueller_from_ensemble(scaled).std_form.m, 0.5 * CMat4::identity()) == 0.0);

  CHECK_THROWS_AS(mueller_from_ensemble({}), ValidationError);
  CHECK_THROWS_AS(mueller_from_ensemble({{-0.1, JonesMatrix::identity()}}), ValidationError);

  // Eq. 24 keeps the real form real for any ensemble
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const MuellerForms f = mueller_from_ensemble(random_ensemble(rng));
    const CMat4 prod = 0.5 * (basis().v * f.std_form.m * basis().v.adjoint());
    CHECK(max_imag(prod) < 1e-12);
  }
}

TEST_CASE("optical elements match their closed forms") {
  CHECK(max_abs_diff(jones_hwp(0.0).t, CMat2{{-1, 0, 0, 1}}) == 0.0);

  const CMat2 quarter_turn{{0, -1, 1, 0}};
  CHECK(max_abs_diff(jones_rotator(0.5 * std::numbers::pi).t, quarter_turn) < 1e-15);

  CHECK(max_abs_diff(jones_diattenuator(1.0, 0.0, 0.0).t, CMat2{{1, 0, 0, 0}}) == 0.0);
  CHECK_THROWS_AS(jones_diattenuator(1.2, 0.0, 0.0), ValidationError);
  CHECK_THROWS_AS(jones_diattenuator(0.5, -0.1, 0.0), ValidationError);

  // hwp and rotator are unitary; the diattenuator is Hermitian PSD with
  // eigenvalues {d0, d1}
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double th = angle(rng);
    CHECK(jones_hwp(th).is_unitary());
    CHECK(jones_rotator(th).is_unitary());
    CHECK(jones_retarder({0.3, -0.5, 0.8}, th).is_unitary());

    const double d0 = d(rng), d1 = d(rng);
    const JonesMatrix th_mat = jones_diattenuator(d0, d1, th);
    CHECK(hermiticity_defect(th_mat.t) < 1e-15);
    const auto eig = eigh_hermitian(th_mat.t);
    CHECK(eig.values[0] == doctest::Approx(std::max(d0, d1)).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(std::min(d0, d1)).epsilon(1e-12));
  }
}

TEST_CASE("pure depolarizer") {
  CHECK(max_abs_diff(make_depolarizer(1, 1, 1).m, CMat4::identity()) == 0.0);

  const MuellerStd corners = make_depolarizer(0, 0, 0);
  CHECK(corners.m(0, 0) == cplx{0.5});
  CHECK(corners.m(0, 3) == cplx{0.5});
  CHECK(corners.m(3, 0) == cplx{0.5});
  CHECK(corners.m(3, 3) == cplx{0.5});
  CHECK(corners.m(1, 1) == cplx{0.0});

  // real form is diag(1, a, b, c); polarizance and diattenuation vanish exactly
  const MuellerReal real = real_from_std(make_depolarizer(0.3, -0.2, 0.7));
  CHECK(max_abs_diff(real.m, diag4(1, 0.3, -0.2, 0.7)) == 0.0);
  for (double v : real.diattenuation()) CHECK(v == 0.0);
  for (double v : real.polarizance()) CHECK(v == 0.0);
}

TEST_CASE("retarders have zero polarizance and orthogonal W") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const MuellerReal m = mueller_from_jones(random_unitary(rng)).real_form;
    for (double v : m.diattenuation()) CHECK(std::abs(v) < 1e-10);
    for (double v : m.polarizance()) CHECK(std::abs(v) < 1e-10);
    const RMat3 w = m.block_w();
    CHECK(max_abs_diff(w * w.transpose(), RMat3::identity()) < 1e-10);
  }

  // dichroic elements have nonzero diattenuation
  const MuellerReal md = mueller_from_jones(jones_diattenuator(0.9, 0.3, 0.4)).real_form;
  double dn = 0.0;
  for (double v : md.diattenuation()) dn += v * v;
  CHECK(std::sqrt(dn) > 1e-3);
}

TEST_CASE("composition order is rightmost-first") {
  const MuellerStd a = mueller_from_jones(jones_diattenuator(1.0, 0.0, 0.0)).std_form;
  const MuellerStd b = mueller_from_jones(jones_rotator(0.25 * std::numbers::pi)).std_form;
  CHECK(max_abs_diff(compose({a, b}).m, (a.m * b.m)) == 0.0);
  CHECK(max_abs_diff(compose({MuellerStd::identity(), MuellerStd::identity()}).m,
                     CMat4::identity()) == 0.0);
  CHECK(max_abs_diff(
            lu_chipman_product(MuellerStd::identity(), b, MuellerStd::identity()).m, b.m) == 0.0);
}

TEST_CASE("apply_mueller_stokes") {
  const StokesVector x{0.3, -0.1, 0.7, 0.2};
  const StokesVector same = apply_mueller_stokes(MuellerReal::identity(), x);
  CHECK(same.x0 == x.x0);
  CHECK(same.x2 == x.x2);

  MuellerReal hwp;
  hwp.m = diag4(1, -1, -1, 1);
  const StokesVector flipped = apply_mueller_stokes(hwp, {1, 1, 0, 0});
  CHECK(flipped.x0 == 1.0);
  CHECK(flipped.x1 == -1.0);

  // polarizer on unpolarized light
  const MuellerReal pol = mueller_from_jones(jones_diattenuator(1.0, 0.0, 0.0)).real_form;
  const StokesVector out = apply_mueller_stokes(pol, {1, 0, 0, 0});
  CHECK(out.x0 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(out.x3 == doctest::Approx(0.5).epsilon(1e-14));

  // Stokes route agrees with the coherency route for Mueller-Jones maps
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 50; ++trial) {
    const JonesMatrix t = testing::random_passive_jones(rng);
    const MuellerForms f = mueller_from_jones(t);
    const CMat2 j = testing::random_density<2>(rng);
    CoherencyMatrix cm{j};
    const StokesVector via_stokes = apply_mueller_stokes(f.real_form, stokes_from_coherency(cm));
    const StokesVector via_jones = stokes_from_coherency({t.t * j * t.t.adjoint()});
    for (int k = 0; k < 4; ++k) CHECK(std::abs(via_stokes[k] - via_jones[k]) < 1e-12);
  }
}

TEST_CASE("normalization divides by M00") {
  const MuellerForms f = mueller_from_jones(jones_diattenuator(1.0, 0.0, 0.3));
  const MuellerReal n = normalized(f.real_form);
  CHECK(n.m00() == doctest::Approx(1.0).epsilon(1e-14));
  const MuellerStd ns = normalized(f.std_form);
  CHECK(real_from_std(ns).m00() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(normalized(MuellerStd{}), ZeroIntensityError);
}

TEST_CASE("real and standard forms convert back and forth") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const MuellerForms f = mueller_from_ensemble(random_ensemble(rng));
    CHECK(max_abs_diff(std_from_real(f.real_form).m, f.std_form.m) < 1e-12);
    CHECK(max_abs_diff(real_from_std(std_from_real(f.real_form)).m, f.real_form.m) < 1e-12);
  }
}
