#include "polarmap/cloude.hpp"

#include <cmath>

namespace polarmap {

CMat4 reshuffle_indices(const CMat4& m) {
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = m(2 * i + k, 2 * j + l);
  return out;
}

HMatrix reshuffle(const MuellerStd& m) { return {reshuffle_indices(m.m)}; }

MuellerStd unreshuffle(const HMatrix& h) { return {reshuffle_indices(h.h)}; }

double KrausSet::weight_sum() const {
  double s = 0.0;
  for (const auto& term : terms) s += term.weight;
  return s;
}

MuellerStd KrausSet::reconstruct() const {
  MuellerStd m;
  for (const auto& [weight, t] : terms)
    m.m = m.m + weight * kron(t.t, t.t.conjugate());
  return m;
}

CMat2 KrausSet::trace_condition() const {
  CMat2 s;
  for (const auto& [weight, t] : terms) s = s + weight * (t.t.adjoint() * t.t);
  return s;
}

CMat2 KrausSet::unitality_condition() const {
  CMat2 s;
  for (const auto& [weight, t] : terms) s = s + weight * (t.t * t.t.adjoint());
  return s;
}

namespace {

// Largest-magnitude entry made real positive; index order breaks magnitude ties.
CMat2 canonical_phase(const CMat2& t) {
  int best = 0;
  double mag = -1.0;
  for (int k = 0; k < 4; ++k)
    if (std::abs(t.a[k]) > mag + 1e-15) {
      mag = std::abs(t.a[k]);
      best = k;
    }
  if (mag <= 1e-300) return t;
  const cplx ph = std::conj(t.a[best]) / std::abs(t.a[best]);
  CMat2 out = t;
  for (auto& z : out.a) z *= ph;
  return out;
}

}  // namespace

KrausSet cloude_decompose(const MuellerStd& m) {
  const HMatrix h = reshuffle(m);
  const double scale = std::max(1.0, max_abs(h.h));
  if (h.hermiticity_defect() > kHermitianTol * scale)
    throw NonHermitianError("cloude_decompose: reshuffled matrix is not Hermitian");

  const auto eig = eigh_hermitian(h.h);
  const double m00 = 0.5 * h.h.trace().real();  // Tr H = 2 M00
  const double floor = kEpsPsd * std::max(1.0, std::abs(m00));

  KrausSet out;
  for (int mu = 0; mu < 4; ++mu) {
    double lam = eig.values[mu];
    if (lam < -floor)
      throw UnphysicalError("cloude_decompose: H has a negative eigenvalue");
    if (lam < 0.0) lam = 0.0;
    CMat2 t;
    t(0, 0) = eig.vectors(0, mu);
    t(0, 1) = eig.vectors(1, mu);
    t(1, 0) = eig.vectors(2, mu);
    t(1, 1) = eig.vectors(3, mu);
    out.terms.push_back({lam, JonesMatrix{canonical_phase(t)}});
  }
  return out;
}

namespace {

double norm3(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

MapClassification classify(const MuellerReal& m) {
  MapClassification c;
  c.diattenuation_norm = norm3(m.diattenuation());
  c.polarizance_norm = norm3(m.polarizance());
  c.dichroic = c.diattenuation_norm > kClassifyTol;

  const auto eig = reshuffle(std_from_real(m)).eigenvalues();
  c.min_eigenvalue = eig[3];
  c.physical = c.min_eigenvalue >= -kEpsPsd * std::max(1.0, std::abs(m.m00()));

  const bool m00_is_one = std::abs(m.m00() - 1.0) <= kClassifyTol;
  c.trace_preserving = m00_is_one && !c.dichroic;
  c.unital = c.trace_preserving && c.polarizance_norm <= kClassifyTol;
  return c;
}

MapClassification classify(const MuellerStd& m) { return classify(real_from_std(m)); }

}  // namespace polarmap
