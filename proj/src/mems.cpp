#include "polarmap/mems.hpp"

#include <algorithm>
#include <cmath>

namespace polarmap {

MemsParams mems_params(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("mems: p must lie in [0,1]");
  MemsParams out;
  out.p = p;
  if (p > 2.0 / 3.0) {
    out.region = MemsRegion::I;
    out.g = p;
  } else {
    out.region = MemsRegion::II;
    out.g = 2.0 / 3.0;
  }
  return out;
}

DensityMatrix2 mems_state(double p) {
  const MemsParams mp = mems_params(p);
  CMat4 r;
  r(0, 0) = 0.5 * mp.g;
  r(3, 3) = 0.5 * mp.g;
  r(0, 3) = 0.5 * p;
  r(3, 0) = 0.5 * p;
  r(1, 1) = 1.0 - mp.g;
  return {r};
}

double mems_phi(double p, int sign) {
  const double root = std::sqrt(1.0 + 36.0 * p);
  return std::sqrt(0.5 * (1.0 + sign * (1.0 + 6.0 * p) / root));
}

double mems_psi(double p, int sign) {
  const double root = std::sqrt(1.0 + 36.0 * p);
  return std::sqrt((1.0 + sign * (1.0 - 9.0 * p) / root) / 3.0);
}

namespace {

std::array<double, 4> closed_form_spectrum(const MemsParams& mp) {
  std::array<double, 4> s;
  if (mp.region == MemsRegion::I) {
    s = {0.0, 1.0 - mp.p, 0.0, 1.0 + mp.p};
  } else {
    const double root = std::sqrt(1.0 + 36.0 * mp.p);
    s = {0.0, 1.0 / 3.0, (5.0 - root) / 6.0, (5.0 + root) / 6.0};
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

void push_term(KrausSet& ks, const CMat2& product) {
  // product = sqrt(lambda) * T with Tr(T^dag T) = 1
  double lam = 0.0;
  for (const auto& z : product.a) lam += std::norm(z);
  if (lam <= 1e-30) return;
  KrausTerm term;
  term.weight = lam;
  term.t.t = (1.0 / std::sqrt(lam)) * product;
  ks.terms.push_back(term);
}

void sort_terms(KrausSet& ks) {
  std::stable_sort(ks.terms.begin(), ks.terms.end(),
                   [](const KrausTerm& x, const KrausTerm& y) { return x.weight > y.weight; });
}

}  // namespace

MemsMapPair mems_mueller_pair(double p) {
  MemsMapPair out;
  out.params = mems_params(p);
  const double g = out.params.g;
  const double sp = std::sqrt(p);

  out.mA_real.m = RMat4{{1, 0, 0, 0,  //
                         0, sp, 0, 0,  //
                         0, 0, sp, 0,  //
                         1 - g, 0, 0, g}};
  out.mB_real.m = RMat4{{1, 0, 0, 0,  //
                         0, -sp, 0, 0,  //
                         0, 0, sp, 0,  //
                         g - 1, 0, 0, -g}};
  out.mA = std_from_real(out.mA_real);
  out.mB = std_from_real(out.mB_real);
  out.spectrum = closed_form_spectrum(out.params);

  if (out.params.region == MemsRegion::I) {
    const double q = std::sqrt(1.0 - p);
    push_term(out.krausA, CMat2{{0, q, 0, 0}});
    push_term(out.krausA, CMat2{{1, 0, 0, sp}});
    push_term(out.krausB, CMat2{{0, 0, 0, q}});
    push_term(out.krausB, CMat2{{0, -sp, 1, 0}});
  } else {
    const double phi_p = mems_phi(p, +1), phi_m = mems_phi(p, -1);
    const double psi_p = mems_psi(p, +1), psi_m = mems_psi(p, -1);
    const double r13 = 1.0 / std::sqrt(3.0);
    push_term(out.krausA, CMat2{{0, r13, 0, 0}});
    push_term(out.krausA, CMat2{{-phi_m, 0, 0, psi_p}});
    push_term(out.krausA, CMat2{{phi_p, 0, 0, psi_m}});
    push_term(out.krausB, CMat2{{0, 0, 0, r13}});
    push_term(out.krausB, CMat2{{0, psi_p, phi_m, 0}});
    push_term(out.krausB, CMat2{{0, -psi_m, phi_p, 0}});
  }
  sort_terms(out.krausA);
  sort_terms(out.krausB);
  return out;
}

MemsAngles mems_angles(double p) {
  const MemsParams mp = mems_params(p);
  MemsAngles a;
  // Angles are built from their exact (sin, cos) legs with atan2 rather
  // than acos: the closed-form legs then survive the sin/cos round trip
  // with relative accuracy, which acos loses entirely for tiny legs.
  a.theta_13 = std::atan2(std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0));
  if (mp.region == MemsRegion::I) {
    a.theta_p = std::atan2(std::sqrt(1.0 - p), std::sqrt(p));
  } else {
    const double root32 = std::sqrt(1.5);
    a.theta_psi = std::atan2(root32 * mems_psi(p, -1), root32 * mems_psi(p, +1));
    a.theta_phi = std::atan2(mems_phi(p, -1), mems_phi(p, +1));
  }
  return a;
}

double MemsReport::max_error() const {
  return std::max({state_error, imag_error, reduced_a_error, reduced_b_error, trace_cond_error,
                   unitality_error, mueller_recon_error, spectrum_error});
}

MemsReport verify_mems(double p) {
  const MemsMapPair pair = mems_mueller_pair(p);
  const double g = pair.params.g;
  MemsReport rep;
  rep.p = p;

  const DensityMatrix2 target = mems_state(p);
  const Applied2 out = apply_bilocal(pair.mA, pair.mB, singlet_state());
  rep.state_error = max_abs_diff(out.state.r, target.r);
  rep.imag_error = max_imag(out.state.r);

  CMat2 red_a_target, red_b_target;
  red_a_target(0, 0) = 1.0 - 0.5 * g;
  red_a_target(1, 1) = 0.5 * g;
  red_b_target(0, 0) = 0.5 * g;
  red_b_target(1, 1) = 1.0 - 0.5 * g;
  rep.reduced_a_error = max_abs_diff(partial_trace(out.state.r, Side::A), red_a_target);
  rep.reduced_b_error = max_abs_diff(partial_trace(out.state.r, Side::B), red_b_target);

  const CMat2 id = CMat2::identity();
  rep.trace_cond_error = std::max(max_abs_diff(pair.krausA.trace_condition(), id),
                                  max_abs_diff(pair.krausB.trace_condition(), id));

  CMat2 unital_a, unital_b;
  unital_a(0, 0) = 2.0 - g;
  unital_a(1, 1) = g;
  unital_b(0, 0) = g;
  unital_b(1, 1) = 2.0 - g;
  rep.unitality_error = std::max(max_abs_diff(pair.krausA.unitality_condition(), unital_a),
                                 max_abs_diff(pair.krausB.unitality_condition(), unital_b));

  rep.mueller_recon_error = std::max(max_abs_diff(pair.krausA.reconstruct().m, pair.mA.m),
                                     max_abs_diff(pair.krausB.reconstruct().m, pair.mB.m));

  double spec_err = 0.0;
  for (const MuellerStd& m : {pair.mA, pair.mB}) {
    const auto eig = reshuffle(m).eigenvalues();
    for (int i = 0; i < 4; ++i)
      spec_err = std::max(spec_err, std::abs(eig[i] - pair.spectrum[i]));
  }
  rep.spectrum_error = spec_err;
  return rep;
}

}  // namespace polarmap
