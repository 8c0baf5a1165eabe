#include "polarmap/ent_metrics.hpp"

#include <cmath>
#include <numbers>

#include "polarmap/mems.hpp"
#include "polarmap/mueller.hpp"
#include "polarmap/rng.hpp"

namespace polarmap {

double linear_entropy(const DensityMatrix2& r) {
  const double s = (4.0 / 3.0) * (1.0 - r.purity());
  return std::min(1.0, std::max(0.0, s));
}

ConcurrenceResult concurrence_tangle(const DensityMatrix2& r) {
  const CMat4 flip = kron(basis().pauli[2], basis().pauli[2]);

  // Factor rho = Phi Phi^dag; the symmetric matrix tau = Phi^T (X2(*)X2) Phi
  // has Wootters' lambda_i as its singular values. Reading them off a
  // Hermitian dilation keeps the small ones at absolute round-off accuracy,
  // where the sqrt(rho)-product formulation would blow eps up to sqrt(eps)
  // near pure states.
  const auto eig = eigh_hermitian(r.r);
  CMat4 phi;
  for (int mu = 0; mu < 4; ++mu) {
    const double w = std::sqrt(std::max(0.0, eig.values[mu]));
    for (int row = 0; row < 4; ++row) phi(row, mu) = w * eig.vectors(row, mu);
  }
  const CMat4 tau = phi.transpose() * flip * phi;

  CMatrix<8> dilation;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = tau(i, j);
      dilation(4 + i, j) = std::conj(tau(j, i));
    }
  const auto sv = eigh_hermitian(dilation);  // +/- singular values of tau

  double c = sv.values[0] - sv.values[1] - sv.values[2] - sv.values[3];
  c = std::min(1.0, std::max(0.0, c));
  return {c, c * c};
}

DensityMatrix2 werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("werner_state: p must lie in [0,1]");
  CMat4 r = p * singlet_state().r + (0.25 * (1.0 - p)) * CMat4::identity();
  return {r};
}

DensityMatrix2 generalized_werner(double p, const JonesMatrix& tU) {
  if (!tU.is_unitary(1e-10))
    throw ValidationError("generalized_werner: Jones matrix is not unitary");
  const CMat4 u = kron(tU.t, CMat2::identity());
  return {u * werner_state(p).r * u.adjoint()};
}

Applied2 dichroic_sample(double p, double d0, double d1, double theta) {
  const JonesMatrix th = jones_diattenuator(d0, d1, theta);
  const CMat4 k = kron(th.t, CMat2::identity());
  const CMat4 out = k * werner_state(p).r * k.adjoint();
  const double tr = out.trace().real();
  if (tr <= 1e-12)
    throw ZeroIntensityError("dichroic_sample: output trace vanishes (d0 = d1 = 0)");
  return {DensityMatrix2{(1.0 / tr) * out}, tr};
}

CMat2 dichroic_reduced_b(double p, double d0, double d1, double theta) {
  const double denom = d0 * d0 + d1 * d1;
  if (denom <= 0.0) throw ZeroIntensityError("dichroic_reduced_b: d0 = d1 = 0");
  const double w = p * (d0 * d0 - d1 * d1) / denom;
  const auto& x = basis().pauli;
  return 0.5 * x[0] - (0.5 * w) * (std::sin(2.0 * theta) * x[1] + std::cos(2.0 * theta) * x[3]);
}

double werner_tangle_at(double sl) {
  const double p = std::sqrt(std::max(0.0, 1.0 - sl));
  const double c = std::max(0.0, (3.0 * p - 1.0) / 2.0);
  return c * c;
}

const char* to_string(SampleClass c) {
  switch (c) {
    case SampleClass::werner: return "werner";
    case SampleClass::generalized_werner: return "generalized_werner";
    case SampleClass::sub_werner: return "sub_werner";
    default: return "other";
  }
}

SampleClass classify_scatter(double d0, double d1, double sl, double tangle) {
  if (std::abs(d0 - d1) <= 1e-9) return SampleClass::werner;
  const double bound = werner_tangle_at(sl);
  if (tangle > 1e-9 && std::abs(tangle - bound) <= 1e-9) return SampleClass::generalized_werner;
  if (tangle < bound - 1e-9) return SampleClass::sub_werner;
  return SampleClass::other;
}

std::vector<ScatterSample> monte_carlo_dichroic(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("monte_carlo_dichroic: need at least one sample");
  const CounterRng rng{seed};
  std::vector<ScatterSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ScatterSample s;
    s.index = i;
    s.p = rng.uniform(i, 0);
    s.d0 = rng.uniform(i, 1);
    s.d1 = rng.uniform(i, 2);
    s.theta = 2.0 * std::numbers::pi * (1.0 - rng.uniform(i, 3));  // (0, 2pi]
    const Applied2 state = dichroic_sample(s.p, s.d0, s.d1, s.theta);
    s.linear_entropy = linear_entropy(state.state);
    s.tangle = concurrence_tangle(state.state).tangle;
    s.cls = classify_scatter(s.d0, s.d1, s.linear_entropy, s.tangle);
    out.push_back(s);
  }
  return out;
}

BoundaryCurves boundary_curves(int grid) {
  if (grid < 2) throw ValidationError("boundary_curves: grid must be at least 2");
  BoundaryCurves out;
  out.werner.label = "werner";
  out.mems.label = "mems";
  for (int k = 0; k < grid; ++k) {
    const double p = static_cast<double>(k) / (grid - 1);
    const DensityMatrix2 w = werner_state(p);
    out.werner.points.push_back({p, linear_entropy(w), concurrence_tangle(w).tangle});
    const DensityMatrix2 m = mems_state(p);
    out.mems.points.push_back({p, linear_entropy(m), concurrence_tangle(m).tangle});
  }
  return out;
}

}  // namespace polarmap
