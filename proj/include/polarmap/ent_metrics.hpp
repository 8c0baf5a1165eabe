#ifndef POLARMAP_ENT_METRICS_HPP
#define POLARMAP_ENT_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polarmap/qmaps.hpp"

namespace polarmap {

// S_L = (4/3)(1 - Tr rho^2), normalized so the maximally mixed two-qubit
// state scores 1. Clamped to [0,1].
double linear_entropy(const DensityMatrix2& r);

struct ConcurrenceResult {
  double concurrence = 0.0;
  double tangle = 0.0;  // concurrence squared
};

// Wootters concurrence via the spin-flipped operator
// sqrt(rho) (X2(*)X2) rho^* (X2(*)X2) sqrt(rho).
ConcurrenceResult concurrence_tangle(const DensityMatrix2& r);

// p rho_s + (1-p)/4 I.
DensityMatrix2 werner_state(double p);

// Local-unitary rotation (tU (*) I) rho_W (tU (*) I)^dag.
DensityMatrix2 generalized_werner(double p, const JonesMatrix& tU);

// (T_H (*) I) rho_W(p) (T_H (*) I)^dag with the diattenuator T_H(d0,d1,theta),
// normalized; the returned trace is the post-selection probability.
Applied2 dichroic_sample(double p, double d0, double d1, double theta);

// Closed form for the reduced state on the untouched side of the dichroic
// scatterer, X0/2 - p (d0^2-d1^2)/(d0^2+d1^2) (X1 sin 2t + X3 cos 2t)/2.
CMat2 dichroic_reduced_b(double p, double d0, double d1, double theta);

// Tangle of the Werner family at the given linear entropy (zero beyond the
// separable point S_L = 8/9).
double werner_tangle_at(double linear_entropy);

enum class SampleClass { werner, generalized_werner, sub_werner, other };

const char* to_string(SampleClass c);

// Scores one draw against the Werner curve: equal diattenuation factors
// give Werner states by construction; otherwise on-curve points with
// positive tangle read as generalized Werner and strictly-below points as
// sub-Werner.
SampleClass classify_scatter(double d0, double d1, double linear_entropy, double tangle);

struct ScatterSample {
  std::uint64_t index = 0;
  double p = 0.0, d0 = 0.0, d1 = 0.0, theta = 0.0;
  double linear_entropy = 0.0;
  double tangle = 0.0;
  SampleClass cls = SampleClass::other;
};

// Draws (p, d0, d1) uniform on [0,1) and theta uniform on (0, 2pi], feeds
// them through dichroic_sample and scores the output. Sample i depends only
// on (seed, i).
std::vector<ScatterSample> monte_carlo_dichroic(std::size_t n, std::uint64_t seed);

struct CurvePoint {
  double p = 0.0;
  double linear_entropy = 0.0;
  double tangle = 0.0;
};

struct BoundaryCurve {
  std::string label;
  std::vector<CurvePoint> points;
};

struct BoundaryCurves {
  BoundaryCurve werner;
  BoundaryCurve mems;
};

// Werner and MEMS reference curves sampled on a uniform p grid.
BoundaryCurves boundary_curves(int grid);

}  // namespace polarmap

#endif
