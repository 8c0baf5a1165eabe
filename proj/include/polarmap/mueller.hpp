#ifndef POLARMAP_MUELLER_HPP
#define POLARMAP_MUELLER_HPP

#include <array>
#include <vector>

#include "polarmap/stokes.hpp"

namespace polarmap {

// 2x2 complex transfer matrix of a non-depolarizing element.
struct JonesMatrix {
  CMat2 t;

  static JonesMatrix identity() { return {CMat2::identity()}; }

  double largest_singular_value() const;

  // Passive device: Tr J_out <= Tr J_in, i.e. sigma_max <= 1 + tol.
  bool is_passive(double tol = 1e-12) const { return largest_singular_value() <= 1.0 + tol; }

  bool is_unitary(double tol = 1e-10) const;

  friend JonesMatrix operator*(const JonesMatrix& x, const JonesMatrix& y) {
    return {x.t * y.t};
  }
};

// Mueller matrix in the Standard basis: the 4x4 complex map acting on the
// row-major vectorized coherency matrix.
struct MuellerStd {
  CMat4 m;

  static MuellerStd identity() { return {CMat4::identity()}; }
};

// Real-valued Mueller matrix acting on Stokes vectors, with the usual
// block views: first row diattenuation, first column polarizance.
struct MuellerReal {
  RMat4 m;

  static MuellerReal identity() { return {RMat4::identity()}; }

  double m00() const { return m(0, 0); }
  std::array<double, 3> diattenuation() const { return {m(0, 1), m(0, 2), m(0, 3)}; }
  std::array<double, 3> polarizance() const { return {m(1, 0), m(2, 0), m(3, 0)}; }
  RMat3 block_w() const;
};

struct WeightedJones {
  double weight = 0.0;
  JonesMatrix t;
};

// Ensemble of non-depolarizing elements with nonnegative weights.
using EnsembleSpec = std::vector<WeightedJones>;

struct MuellerForms {
  MuellerStd std_form;
  MuellerReal real_form;
};

// M = (1/2) V MuellerStd V^dag; rejects imaginary residue beyond 1e-12.
MuellerReal real_from_std(const MuellerStd& m);

// Inverse of real_from_std: MuellerStd = (1/2) V^dag M V.
MuellerStd std_from_real(const MuellerReal& m);

// MuellerStd = T (*) T^*.
MuellerForms mueller_from_jones(const JonesMatrix& t);

// MuellerStd = sum_A p_A T_A (*) T_A^*; weights need not sum to one.
MuellerForms mueller_from_ensemble(const EnsembleSpec& spec);

// Half-wave plate with optic axis at angle theta from horizontal.
JonesMatrix jones_hwp(double theta);

// Polarization rotator by angle theta (two half-wave plates in series).
JonesMatrix jones_rotator(double theta);

// Hermitian diattenuator with transmission factors d0, d1 in [0,1] along
// axes at angle theta; reduces to a linear polarizer when one factor is 0.
JonesMatrix jones_diattenuator(double d0, double d1, double theta);

// Unitary retarder with retardance delta about the (unit) Stokes axis n:
// T = cos(delta/2) I - i sin(delta/2) (n . X).
JonesMatrix jones_retarder(const std::array<double, 3>& axis, double delta);

// Pure zero-polarizance depolarizer in the Standard basis; isotropic when
// a = b = c.
MuellerStd make_depolarizer(double a, double b, double c);
inline MuellerStd make_isotropic_depolarizer(double p) { return make_depolarizer(p, p, p); }

// Matrix product, rightmost element acts first (optical path order is the
// reverse of the argument order).
MuellerStd compose(const std::vector<MuellerStd>& ms);

inline MuellerStd lu_chipman_product(const MuellerStd& diatten, const MuellerStd& retard,
                                     const MuellerStd& depol) {
  return {diatten.m * retard.m * depol.m};
}

StokesVector apply_mueller_stokes(const MuellerReal& m, const StokesVector& x);

// Polarization-independent renormalization to M00 = 1.
MuellerStd normalized(const MuellerStd& m);
MuellerReal normalized(const MuellerReal& m);

}  // namespace polarmap

#endif
