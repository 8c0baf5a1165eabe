#include "polarmap/stokes.hpp"

#include <cmath>

namespace polarmap {

namespace {

BasisTables make_basis() {
  BasisTables b;
  const cplx i{0.0, 1.0};

  b.pauli[0] = CMat2{{1, 0, 0, 1}};
  b.pauli[1] = CMat2{{0, 1, 1, 0}};
  b.pauli[2] = CMat2{{0, -i, i, 0}};
  b.pauli[3] = CMat2{{1, 0, 0, -1}};

  for (int beta = 0; beta < 4; ++beta) {
    CMat2 y;
    y(beta / 2, beta % 2) = 1.0;
    b.standard[beta] = y;
  }

  // V_{alpha,beta} = Tr(X_alpha Y_beta)
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int beta = 0; beta < 4; ++beta)
      b.v(alpha, beta) = (b.pauli[alpha] * b.standard[beta]).trace();

  return b;
}

}  // namespace

const BasisTables& basis() {
  static const BasisTables b = make_basis();
  return b;
}

bool CoherencyMatrix::is_valid() const {
  if (!j.finite()) return false;
  const double tr = j.trace().real();
  if (tr < 0.0) return false;
  const double scale = std::max(1.0, max_abs(j));
  if (hermiticity_defect() > kHermitianTol * scale) return false;
  auto eig = eigh_hermitian(j);
  const double floor = (tr > 0.0) ? -kEpsPsd * tr : -kEpsPsd;
  return eig.values[1] >= floor;
}

bool StokesVector::is_physical(double tol) const {
  if (x0 < 0.0) return false;
  return x1 * x1 + x2 * x2 + x3 * x3 <= x0 * x0 + tol * std::max(1.0, x0 * x0);
}

CoherencyMatrix coherency_from_jones(const JonesVector& e) {
  if (!e.finite()) throw ValidationError("coherency_from_jones: non-finite Jones vector");
  CoherencyMatrix out;
  out.j(0, 0) = e.e0 * std::conj(e.e0);
  out.j(0, 1) = e.e0 * std::conj(e.e1);
  out.j(1, 0) = e.e1 * std::conj(e.e0);
  out.j(1, 1) = e.e1 * std::conj(e.e1);
  return out;
}

StokesVector stokes_from_coherency(const CoherencyMatrix& j) {
  const double scale = std::max(1.0, max_abs(j.j));
  if (j.hermiticity_defect() > kHermitianTol * scale)
    throw NonHermitianError("stokes_from_coherency: coherency matrix is not Hermitian");
  StokesVector x;
  for (int alpha = 0; alpha < 4; ++alpha)
    x[alpha] = (basis().pauli[alpha] * j.j).trace().real();
  return x;
}

CoherencyMatrix coherency_from_stokes(const StokesVector& x) {
  CoherencyMatrix out;
  for (int alpha = 0; alpha < 4; ++alpha)
    out.j = out.j + 0.5 * x[alpha] * basis().pauli[alpha];
  return out;
}

std::array<cplx, 4> standard_components(const CoherencyMatrix& j) {
  return {j.j(0, 0), j.j(0, 1), j.j(1, 0), j.j(1, 1)};
}

std::array<cplx, 4> pauli_from_standard(const std::array<cplx, 4>& y) {
  std::array<cplx, 4> x{};
  const CMat4& v = basis().v;
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int beta = 0; beta < 4; ++beta) x[alpha] += v(alpha, beta) * y[beta];
  return x;
}

StokesVector stokes_from_standard(const std::array<cplx, 4>& y) {
  const auto x = pauli_from_standard(y);
  StokesVector out;
  for (int alpha = 0; alpha < 4; ++alpha) {
    if (std::abs(x[alpha].imag()) > 1e-12 * std::max(1.0, std::abs(x[alpha])))
      throw ValidationError("stokes_from_standard: components are not real");
    out[alpha] = x[alpha].real();
  }
  return out;
}

std::array<cplx, 4> standard_from_pauli(const std::array<cplx, 4>& x) {
  std::array<cplx, 4> y{};
  const CMat4 vd = basis().v.adjoint();
  for (int beta = 0; beta < 4; ++beta)
    for (int alpha = 0; alpha < 4; ++alpha) y[beta] += 0.5 * vd(beta, alpha) * x[alpha];
  return y;
}

double degree_of_polarization(const CoherencyMatrix& j) {
  const double tr = j.j.trace().real();
  if (tr <= 0.0) throw ZeroIntensityError("degree_of_polarization: zero-intensity beam");
  const cplx det = j.j(0, 0) * j.j(1, 1) - j.j(0, 1) * j.j(1, 0);
  const double p2 = 1.0 - 4.0 * det.real() / (tr * tr);
  return std::sqrt(std::min(1.0, std::max(0.0, p2)));
}

}  // namespace polarmap
