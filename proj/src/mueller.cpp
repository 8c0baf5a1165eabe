#include "polarmap/mueller.hpp"

#include <cmath>

namespace polarmap {

double JonesMatrix::largest_singular_value() const {
  const auto eig = eigh_hermitian(t.adjoint() * t);
  return std::sqrt(std::max(0.0, eig.values[0]));
}

bool JonesMatrix::is_unitary(double tol) const {
  return max_abs_diff(t.adjoint() * t, CMat2::identity()) <= tol;
}

RMat3 MuellerReal::block_w() const {
  RMat3 w;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) w(r, c) = m(r + 1, c + 1);
  return w;
}

MuellerReal real_from_std(const MuellerStd& m) {
  const CMat4& v = basis().v;
  const CMat4 prod = 0.5 * (v * m.m * v.adjoint());
  const double scale = std::max(1.0, max_abs(prod));
  if (max_imag(prod) > 1e-12 * scale)
    throw ValidationError("real_from_std: Mueller matrix has imaginary residue");
  MuellerReal out;
  for (int i = 0; i < 16; ++i) out.m.a[i] = prod.a[i].real();
  return out;
}

MuellerStd std_from_real(const MuellerReal& m) {
  const CMat4& v = basis().v;
  return {0.5 * (v.adjoint() * to_complex(m.m) * v)};
}

MuellerForms mueller_from_jones(const JonesMatrix& t) {
  MuellerStd s{kron(t.t, t.t.conjugate())};
  return {s, real_from_std(s)};
}

MuellerForms mueller_from_ensemble(const EnsembleSpec& spec) {
  if (spec.empty()) throw ValidationError("mueller_from_ensemble: empty ensemble");
  MuellerStd s;
  for (const auto& [weight, t] : spec) {
    if (weight < 0.0) throw ValidationError("mueller_from_ensemble: negative weight");
    s.m = s.m + weight * kron(t.t, t.t.conjugate());
  }
  return {s, real_from_std(s)};
}

JonesMatrix jones_hwp(double theta) {
  const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
  return {CMat2{{-c, -s, -s, c}}};
}

JonesMatrix jones_rotator(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {CMat2{{c, -s, s, c}}};
}

JonesMatrix jones_diattenuator(double d0, double d1, double theta) {
  if (d0 < 0.0 || d0 > 1.0 || d1 < 0.0 || d1 > 1.0)
    throw ValidationError("jones_diattenuator: diattenuation factors must lie in [0,1]");
  const double c = std::cos(theta), s = std::sin(theta);
  JonesMatrix out;
  out.t(0, 0) = d0 * c * c + d1 * s * s;
  out.t(0, 1) = (d0 - d1) * c * s;
  out.t(1, 0) = (d0 - d1) * c * s;
  out.t(1, 1) = d1 * c * c + d0 * s * s;
  return out;
}

JonesMatrix jones_retarder(const std::array<double, 3>& axis, double delta) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(n > 0.0)) throw ValidationError("jones_retarder: zero axis");
  const cplx f{0.0, -std::sin(0.5 * delta)};
  CMat2 t = std::cos(0.5 * delta) * CMat2::identity();
  for (int k = 0; k < 3; ++k) t = t + (f * (axis[k] / n)) * basis().pauli[k + 1];
  return {t};
}

MuellerStd make_depolarizer(double a, double b, double c) {
  MuellerStd out;
  out.m(0, 0) = 0.5 * (1.0 + c);
  out.m(0, 3) = 0.5 * (1.0 - c);
  out.m(3, 0) = 0.5 * (1.0 - c);
  out.m(3, 3) = 0.5 * (1.0 + c);
  out.m(1, 1) = 0.5 * (a + b);
  out.m(1, 2) = 0.5 * (a - b);
  out.m(2, 1) = 0.5 * (a - b);
  out.m(2, 2) = 0.5 * (a + b);
  return out;
}

MuellerStd compose(const std::vector<MuellerStd>& ms) {
  MuellerStd out = MuellerStd::identity();
  for (const auto& m : ms) out.m = out.m * m.m;
  return out;
}

StokesVector apply_mueller_stokes(const MuellerReal& m, const StokesVector& x) {
  StokesVector out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += m.m(r, c) * x[c];
  return out;
}

MuellerStd normalized(const MuellerStd& m) {
  // M00 = (m00 + m03 + m30 + m33) / 2
  const cplx m00 = 0.5 * (m.m(0, 0) + m.m(0, 3) + m.m(3, 0) + m.m(3, 3));
  if (std::abs(m00) < 1e-300) throw ZeroIntensityError("normalized: M00 is zero");
  return {(1.0 / m00) * m.m};
}

MuellerReal normalized(const MuellerReal& m) {
  if (std::abs(m.m00()) < 1e-300)
    throw ZeroIntensityError("normalized: M00 is zero");
  return {(1.0 / m.m00()) * m.m};
}

}  // namespace polarmap
