#ifndef POLARMAP_STOKES_HPP
#define POLARMAP_STOKES_HPP

#include <array>

#include "polarmap/linalg.hpp"

namespace polarmap {

// Eigenvalue floor used for every positive-semidefiniteness verdict,
// applied after normalizing the matrix to unit trace.
inline constexpr double kEpsPsd = 1e-10;

// Relative asymmetry beyond which a matrix is rejected as non-Hermitian.
inline constexpr double kHermitianTol = 1e-10;

// Complex field amplitudes of a fully polarized beam; |e0|^2 + |e1|^2 is
// the total intensity.
struct JonesVector {
  cplx e0{};
  cplx e1{};

  bool finite() const { return is_finite(e0) && is_finite(e1); }
};

// 2x2 Hermitian PSD coherency matrix; the classical counterpart of a
// (possibly unnormalized) qubit density matrix.
struct CoherencyMatrix {
  CMat2 j;

  double intensity() const { return j.trace().real(); }
  double hermiticity_defect() const { return polarmap::hermiticity_defect(j); }

  // Hermitian within tolerance, eigenvalues >= -kEpsPsd after unit-trace
  // normalization, nonnegative trace.
  bool is_valid() const;
};

struct StokesVector {
  double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  double& operator[](int i) { return *(&x0 + i); }
  const double& operator[](int i) const { return *(&x0 + i); }

  // x0 >= 0 and x1^2+x2^2+x3^2 <= x0^2 within tolerance.
  bool is_physical(double tol = kEpsPsd) const;
};

// Pauli matrices X_alpha, single-entry matrices Y_beta and the
// change-of-basis matrix V with x = V y, V^dag V = 2 I = V V^dag.
struct BasisTables {
  std::array<CMat2, 4> pauli;
  std::array<CMat2, 4> standard;
  CMat4 v;
};

const BasisTables& basis();

CoherencyMatrix coherency_from_jones(const JonesVector& e);

// x_alpha = Tr(X_alpha J); throws NonHermitianError on asymmetric input.
StokesVector stokes_from_coherency(const CoherencyMatrix& j);

// J = (1/2) sum_alpha x_alpha X_alpha.
CoherencyMatrix coherency_from_stokes(const StokesVector& x);

// y = (J00, J01, J10, J11).
std::array<cplx, 4> standard_components(const CoherencyMatrix& j);

// x = V y; complex for general y, real when y comes from a Hermitian matrix.
std::array<cplx, 4> pauli_from_standard(const std::array<cplx, 4>& y);

// pauli_from_standard restricted to Hermitian data; rejects imaginary residue.
StokesVector stokes_from_standard(const std::array<cplx, 4>& y);

// Inverse of pauli_from_standard: y = V^dag x / 2.
std::array<cplx, 4> standard_from_pauli(const std::array<cplx, 4>& x);

// P solved from Det J = (Tr J)^2 (1 - P^2) / 4, clamped to [0, 1].
// Throws ZeroIntensityError when Tr J <= 0.
double degree_of_polarization(const CoherencyMatrix& j);

}  // namespace polarmap

#endif
