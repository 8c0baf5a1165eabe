#include "polarmap/qmaps.hpp"

#include <cmath>
#include <string>

namespace polarmap {

namespace {

constexpr double kTraceTol = 1e-12;

void check_density(const CMat4& m, const char* who) {
  if (!m.finite()) throw ValidationError(std::string(who) + ": non-finite entries");
  const double scale = std::max(1.0, max_abs(m));
  if (hermiticity_defect(m) > kHermitianTol * scale)
    throw NonHermitianError(std::string(who) + ": not Hermitian");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > 1e-12)
    throw ValidationError(std::string(who) + ": trace differs from 1");
  const auto eig = eigh_hermitian(m);
  if (eig.values[3] < -kEpsPsd)
    throw UnphysicalError(std::string(who) + ": negative eigenvalue");
}

void check_density(const CMat2& m, const char* who) {
  if (!m.finite()) throw ValidationError(std::string(who) + ": non-finite entries");
  const double scale = std::max(1.0, max_abs(m));
  if (hermiticity_defect(m) > kHermitianTol * scale)
    throw NonHermitianError(std::string(who) + ": not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > 1e-12)
    throw ValidationError(std::string(who) + ": trace differs from 1");
  if (eigh_hermitian(m).values[1] < -kEpsPsd)
    throw UnphysicalError(std::string(who) + ": negative eigenvalue");
}

}  // namespace

DensityMatrix1 DensityMatrix1::checked(const CMat2& m) {
  check_density(m, "DensityMatrix1");
  return {m};
}

DensityMatrix2 DensityMatrix2::checked(const CMat4& m) {
  check_density(m, "DensityMatrix2");
  return {m};
}

DensityMatrix2 singlet_state() {
  CMat4 r;
  const auto& x = basis().pauli;
  r = 0.25 * (kron(x[0], x[0]) - kron(x[1], x[1]) - kron(x[2], x[2]) - kron(x[3], x[3]));
  return {r};
}

DensityMatrix2 bell_state(int k) {
  if (k < 0 || k > 3) throw ValidationError("bell_state: index must be 0..3");
  std::array<cplx, 4> psi{};
  switch (k) {
    case 0: psi = {1, 0, 0, 1}; break;   // Phi+
    case 1: psi = {1, 0, 0, -1}; break;  // Phi-
    case 2: psi = {0, 1, 1, 0}; break;   // Psi+
    case 3: psi = {0, 1, -1, 0}; break;  // Psi- (singlet)
  }
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = 0.5 * psi[i] * std::conj(psi[j]);
  return {r};
}

Applied1 apply_one_qubit(const MuellerStd& m, const DensityMatrix1& rin) {
  CMat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(i, j) += m.m(2 * i + j, 2 * k + l) * rin.r(k, l);
  const double tr = out.trace().real();
  if (tr <= kTraceTol)
    throw ZeroIntensityError("apply_one_qubit: output trace vanishes (total absorption)");
  return {DensityMatrix1{(1.0 / tr) * out}, tr};
}

double output_trace_formula(const MuellerReal& m, const DensityMatrix1& rin) {
  const cplx r01 = rin.r(0, 1), r10 = rin.r(1, 0);
  const cplx diag = rin.r(0, 0) - rin.r(1, 1);
  const cplx t = m.m(0, 0) + m.m(0, 1) * (r01 + r10) + cplx{0, 1} * m.m(0, 2) * (r01 - r10) +
                 m.m(0, 3) * diag;
  return t.real();
}

Applied2 apply_bilocal(const MuellerStd& mA, const MuellerStd& mB, const DensityMatrix2& r) {
  const CMat4 reshuffled = reshuffle_state(r.r);
  const CMat4 out_r = mA.m * reshuffled * mB.m.transpose();
  const CMat4 out = reshuffle_state(out_r);
  const double tr = out.trace().real();
  if (tr <= kTraceTol)
    throw ZeroIntensityError("apply_bilocal: output trace vanishes (total absorption)");
  return {DensityMatrix2{(1.0 / tr) * out}, tr};
}

CMat4 apply_bilocal_kraus(const KrausSet& ksA, const KrausSet& ksB, const CMat4& rho) {
  CMat4 out;
  for (const auto& [la, ta] : ksA.terms) {
    if (la == 0.0) continue;
    for (const auto& [lb, tb] : ksB.terms) {
      if (lb == 0.0) continue;
      const CMat4 k = kron(ta.t, tb.t);
      out = out + (la * lb) * (k * rho * k.adjoint());
    }
  }
  return out;
}

CMat4 exact_local_output(const MuellerStd& mA, const CMat4& rho) {
  return reshuffle_state(mA.m * reshuffle_state(rho));
}

DensityMatrix2 apply_to_singlet(const MuellerStd& mA) {
  const cplx m00 = 0.5 * (mA.m(0, 0) + mA.m(0, 3) + mA.m(3, 0) + mA.m(3, 3));
  if (std::abs(m00 - 1.0) > 1e-12)
    throw ValidationError("apply_to_singlet: map must be normalized to M00 = 1");
  return {exact_local_output(mA, singlet_state().r)};
}

double purity_from_mueller(const MuellerReal& m) {
  if (std::abs(m.m00() - 1.0) > 1e-12)
    throw ValidationError("purity_from_mueller: map must be normalized to M00 = 1");
  double s = 0.0;
  for (double v : m.m.a) s += v * v;
  return 0.25 * s;
}

CMat2 partial_trace(const CMat4& rho, Side side) {
  CMat2 out;
  if (side == Side::A) {
    // trace out B: per-block traces
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j) out(i, k) += rho(2 * i + j, 2 * k + j);
  } else {
    // trace out A: block sum (upper-left + lower-right)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i) out(j, l) += rho(2 * i + j, 2 * i + l);
  }
  return out;
}

DensityMatrix1 partial_trace(const DensityMatrix2& rho, Side side) {
  return {partial_trace(rho.r, side)};
}

CMat2 traced_output(const MuellerReal& m, const CMat4& rho_in) {
  CMat2 a, b, c, d;
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l) {
      a(j, l) = rho_in(j, l);
      b(j, l) = rho_in(j, 2 + l);
      c(j, l) = rho_in(2 + j, l);
      d(j, l) = rho_in(2 + j, 2 + l);
    }
  return m.m(0, 0) * (a + d) + m.m(0, 1) * (b + c) + (cplx{0, 1} * m.m(0, 2)) * (b - c) +
         m.m(0, 3) * (a - d);
}

TwoQubitMueller build_two_qubit_mueller(const MuellerStd& mA, const MuellerStd& mB) {
  return {kron(mA.m, mB.m)};
}

TwoQubitMueller from_combo(const NonSeparableCombo& combo) {
  if (combo.empty()) throw ValidationError("from_combo: empty combination");
  TwoQubitMueller out;
  for (const auto& [weight, a, b] : combo) {
    if (weight < 0.0) throw ValidationError("from_combo: negative weight");
    out.m = out.m + weight * kron(a.m, b.m);
  }
  return out;
}

CMat4 apply_two_qubit_mueller(const TwoQubitMueller& m, const CMat4& rho) {
  const CMat4 rr = reshuffle_state(rho);
  std::array<cplx, 16> y_out{};
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) y_out[a] += m.m(a, b) * rr.a[b];
  CMat4 out_r;
  out_r.a = y_out;
  return reshuffle_state(out_r);
}

DensityMatrix2 singlet_output_components(const std::array<double, 3>& a,
                                         const std::array<double, 3>& b, const RMat3& blockA,
                                         const RMat3& blockB) {
  const RMat3 c = blockA * blockB.transpose();
  const double a1 = a[0], a2 = a[1], a3 = a[2];
  const double b1 = b[0], b2 = b[1], b3 = b[2];

  const double alpha_pp = (1 + a3) + (b3 * (1 + a3) - c(2, 2));
  const double alpha_mp = (1 + a3) - (b3 * (1 + a3) - c(2, 2));
  const double alpha_pm = (1 - a3) + (b3 * (1 - a3) + c(2, 2));
  const double alpha_mm = (1 - a3) - (b3 * (1 - a3) + c(2, 2));

  const double beta_p = b1 + (a3 * b1 - c(2, 0));
  const double beta_m = b1 - (a3 * b1 - c(2, 0));
  const double gamma_p = a1 + (a1 * b3 - c(0, 2));
  const double gamma_m = a1 - (a1 * b3 - c(0, 2));
  const double delta_p = (a1 * b1 - c(0, 0)) - (a2 * b2 - c(1, 1));
  const double delta_m = (a1 * b1 - c(0, 0)) + (a2 * b2 - c(1, 1));

  const double xi_p = b2 + (a3 * b2 - c(2, 1));
  const double xi_m = b2 - (a3 * b2 - c(2, 1));
  const double eta_p = a2 + (a2 * b3 - c(1, 2));
  const double eta_m = a2 - (a2 * b3 - c(1, 2));
  const double tau_p = (a2 * b1 - c(1, 0)) + (a1 * b2 - c(0, 1));
  const double tau_m = (a2 * b1 - c(1, 0)) - (a1 * b2 - c(0, 1));

  const RMat4 re{{alpha_pp, beta_p, gamma_p, delta_p,    //
                  beta_p, alpha_mp, delta_m, gamma_m,    //
                  gamma_p, delta_m, alpha_pm, beta_m,    //
                  delta_p, gamma_m, beta_m, alpha_mm}};
  const RMat4 im{{0, -xi_p, -eta_p, -tau_p,  //
                  xi_p, 0, -tau_m, -eta_m,   //
                  eta_p, tau_m, 0, -xi_m,    //
                  tau_p, eta_m, xi_m, 0}};

  CMat4 rho;
  for (int i = 0; i < 16; ++i) rho.a[i] = 0.25 * cplx{re.a[i], im.a[i]};
  return {rho};
}

}  // namespace polarmap
