#ifndef POLARMAP_MEMS_HPP
#define POLARMAP_MEMS_HPP

#include "polarmap/qmaps.hpp"

namespace polarmap {

enum class MemsRegion { I, II };

struct MemsParams {
  double p = 0.0;
  MemsRegion region = MemsRegion::II;
  double g = 2.0 / 3.0;
};

// g(p) = 2/3 for p <= 2/3, g(p) = p above; the boundary point belongs to
// region II (both branches agree there).
MemsParams mems_params(double p);

// Maximally-entangled-mixed-state family: tangle p^2 at the largest linear
// entropy compatible with it.
DensityMatrix2 mems_state(double p);

// Both single-qubit maps that send the singlet onto mems_state(p). They
// share the one parameter p by construction.
struct MemsMapPair {
  MemsParams params;
  MuellerReal mA_real, mB_real;
  MuellerStd mA, mB;
  KrausSet krausA, krausB;
  std::array<double, 4> spectrum{};  // shared H_A/H_B spectrum, descending
};

MemsMapPair mems_mueller_pair(double p);

// Kraus coefficients of the region-II maps.
double mems_phi(double p, int sign);  // sign = +1 or -1
double mems_psi(double p, int sign);

// Beam-splitter angles consumed by the optical networks.
struct MemsAngles {
  double theta_p = 0.0;     // region I VVBS, arccos sqrt(p)
  double theta_13 = 0.0;    // region II VVBS, arccos sqrt(1/3)
  double theta_psi = 0.0;   // region II VVBS, arccos(sqrt(3/2) psi+)
  double theta_phi = 0.0;   // region II HVBS, arccos phi+
};

MemsAngles mems_angles(double p);

// End-to-end check of the construction at one parameter value; every field
// is a max entrywise error against its closed-form target.
struct MemsReport {
  double p = 0.0;
  double state_error = 0.0;      // bi-local output vs mems_state
  double imag_error = 0.0;       // imaginary part of the output
  double reduced_a_error = 0.0;  // Tr|_B output vs diag(1-g/2, g/2)
  double reduced_b_error = 0.0;  // Tr|_A output vs diag(g/2, 1-g/2)
  double trace_cond_error = 0.0;     // sum l K^dag K vs I, both sides
  double unitality_error = 0.0;      // sum l K K^dag vs diag(2-g, g) / diag(g, 2-g)
  double mueller_recon_error = 0.0;  // Kraus reconstruction vs the Mueller pair
  double spectrum_error = 0.0;       // Cloude spectra vs the closed-form multiset

  double max_error() const;
};

MemsReport verify_mems(double p);

}  // namespace polarmap

#endif
