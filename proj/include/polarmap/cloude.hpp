#ifndef POLARMAP_CLOUDE_HPP
#define POLARMAP_CLOUDE_HPP

#include <vector>

#include "polarmap/mueller.hpp"

namespace polarmap {

// Dynamical (Choi) matrix obtained by reshuffling a Standard-basis Mueller
// matrix; Hermitian for any real ensemble, PSD iff the map is physical.
struct HMatrix {
  CMat4 h;

  double hermiticity_defect() const { return polarmap::hermiticity_defect(h); }

  // Eigenvalues sorted descending.
  std::array<double, 4> eigenvalues() const { return eigh_hermitian(h).values; }
};

// H_{2i+j, 2k+l} = m_{2i+k, 2j+l}; the permutation is an involution, so the
// same function maps H back to m.
HMatrix reshuffle(const MuellerStd& m);
MuellerStd unreshuffle(const HMatrix& h);

// Index permutation shared by Mueller matrices and two-qubit states.
CMat4 reshuffle_indices(const CMat4& m);

struct KrausTerm {
  double weight = 0.0;  // lambda_mu >= 0
  JonesMatrix t;
};

// Spectral (Cloude) decomposition terms, weights sorted descending; the
// Jones matrices reproduce the map via sum lambda T (*) T^*.
struct KrausSet {
  std::vector<KrausTerm> terms;

  double weight_sum() const;

  // sum_mu lambda_mu T_mu (*) T_mu^*.
  MuellerStd reconstruct() const;

  // sum_mu lambda_mu T_mu^dag T_mu; the map is trace-preserving iff this is I.
  CMat2 trace_condition() const;

  // sum_mu lambda_mu T_mu T_mu^dag; the map is unital iff this is I.
  CMat2 unitality_condition() const;
};

struct MapClassification {
  bool physical = false;
  bool trace_preserving = false;
  bool unital = false;
  bool dichroic = false;
  double min_eigenvalue = 0.0;
  double diattenuation_norm = 0.0;
  double polarizance_norm = 0.0;
};

// Tolerance on the classification norms and on |M00 - 1|.
inline constexpr double kClassifyTol = 1e-9;

// Eigendecomposition of H rearranged into weighted Jones matrices.
// Eigenvalues in [-eps_psd, 0) are clamped to zero; anything lower throws
// UnphysicalError, and a non-Hermitian H throws NonHermitianError.
// Each T_mu has unit Frobenius norm with its largest-magnitude entry made
// real positive; under degeneracy only the reconstruction is canonical.
KrausSet cloude_decompose(const MuellerStd& m);

MapClassification classify(const MuellerStd& m);
MapClassification classify(const MuellerReal& m);

inline CMat2 kraus_trace_condition(const KrausSet& ks) { return ks.trace_condition(); }

}  // namespace polarmap

#endif
