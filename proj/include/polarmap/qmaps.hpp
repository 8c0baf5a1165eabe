#ifndef POLARMAP_QMAPS_HPP
#define POLARMAP_QMAPS_HPP

#include <vector>

#include "polarmap/cloude.hpp"

namespace polarmap {

struct DensityMatrix1 {
  CMat2 r;

  // Throws on non-Hermitian, non-PSD or trace != 1 input.
  static DensityMatrix1 checked(const CMat2& m);

  static DensityMatrix1 maximally_mixed() { return {0.5 * CMat2::identity()}; }

  double purity() const { return (r * r).trace().real(); }
};

// Two-qubit state in the standard basis |00>,|01>,|10>,|11>, qubit A first.
struct DensityMatrix2 {
  CMat4 r;

  static DensityMatrix2 checked(const CMat4& m);

  double purity() const { return (r * r).trace().real(); }
};

enum class Side { A, B };

// rho_s = (1/4)(X0(*)X0 - X1(*)X1 - X2(*)X2 - X3(*)X3).
DensityMatrix2 singlet_state();

// 0: Phi+, 1: Phi-, 2: Psi+, 3: Psi- (the singlet).
DensityMatrix2 bell_state(int k);

struct Applied1 {
  DensityMatrix1 state;
  double trace = 0.0;  // Tr of the unnormalized output, Eq. of the map's M00 row
};

struct Applied2 {
  DensityMatrix2 state;
  double trace = 0.0;
};

// rho~_ij = m_{ij,kl} rho_kl, then normalized; the returned trace is the
// post-selection factor. Throws ZeroIntensityError on total absorption.
Applied1 apply_one_qubit(const MuellerStd& m, const DensityMatrix1& rin);

// Closed form for Tr rho~ from the real Mueller matrix's first row,
// assuming Tr rho_in = 1.
double output_trace_formula(const MuellerReal& m, const DensityMatrix1& rin);

// rho^R_{2i+k, 2j+l} = rho_{2i+j, 2k+l}; self-inverse.
inline CMat4 reshuffle_state(const CMat4& r) { return reshuffle_indices(r); }

// (rho_E^R) = mA rho^R mB^T, then unreshuffled and normalized.
Applied2 apply_bilocal(const MuellerStd& mA, const MuellerStd& mB, const DensityMatrix2& r);

// Kraus-sum route for the same bi-local map (independent of the Mueller
// route): sum_{mu,nu} lA_mu lB_nu (A(*)B) rho (A(*)B)^dag, unnormalized.
CMat4 apply_bilocal_kraus(const KrausSet& ksA, const KrausSet& ksB, const CMat4& rho);

// (m rho^R)^R without renormalization; exact output of the local map
// (m, I) on any Bell-diagonal input with M00 = 1.
CMat4 exact_local_output(const MuellerStd& mA, const CMat4& rho);

// Eq.-form shortcut for the singlet input; requires M00 = 1 within 1e-12.
DensityMatrix2 apply_to_singlet(const MuellerStd& mA);

// Tr(rho_E^2) = Tr(M M^T)/4 for singlet input; requires M00 = 1.
double purity_from_mueller(const MuellerReal& m);

// Reduced state of the requested qubit.
CMat2 partial_trace(const CMat4& rho, Side side);
DensityMatrix1 partial_trace(const DensityMatrix2& rho, Side side);

// Closed form for Tr|_A of the unnormalized output (m rho^R)^R in terms of
// the 2x2 blocks of the input state and the map's first row.
CMat2 traced_output(const MuellerReal& m, const CMat4& rho_in);

// 16x16 two-qubit Mueller matrix acting on the row-major vectorization of
// the reshuffled state.
struct TwoQubitMueller {
  CMat16 m;
};

struct ComboTerm {
  double weight = 0.0;
  MuellerStd a;
  MuellerStd b;
};

// Nonnegative combination of separable products; non-separable in general.
using NonSeparableCombo = std::vector<ComboTerm>;

TwoQubitMueller build_two_qubit_mueller(const MuellerStd& mA, const MuellerStd& mB);
TwoQubitMueller from_combo(const NonSeparableCombo& combo);

// Unnormalized output state of the 16x16 map.
CMat4 apply_two_qubit_mueller(const TwoQubitMueller& m, const CMat4& rho);

// Output of a trace-preserving bi-local map on the singlet, written
// directly in terms of the polarizance vectors a, b and the 3x3 blocks
// of the two real Mueller matrices.
DensityMatrix2 singlet_output_components(const std::array<double, 3>& a,
                                         const std::array<double, 3>& b, const RMat3& blockA,
                                         const RMat3& blockB);

}  // namespace polarmap

#endif
