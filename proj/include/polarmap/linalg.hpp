#ifndef POLARMAP_LINALG_HPP
#define POLARMAP_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "polarmap/errors.hpp"

namespace polarmap {

using cplx = std::complex<double>;

inline bool is_finite(const cplx& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Row-major dense N x N complex matrix. All matrices in this project are
// 2x2, 4x4 or 16x16, so everything lives on the stack.
template <int N>
struct CMatrix {
  std::array<cplx, static_cast<std::size_t>(N) * N> a{};

  static constexpr int size = N;

  cplx& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * N + c]; }
  const cplx& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * N + c]; }

  static CMatrix zero() { return CMatrix{}; }

  static CMatrix identity() {
    CMatrix m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  CMatrix adjoint() const {
    CMatrix m;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  CMatrix transpose() const {
    CMatrix m;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) m(r, c) = (*this)(c, r);
    return m;
  }

  CMatrix conjugate() const {
    CMatrix m;
    for (int i = 0; i < N * N; ++i) m.a[i] = std::conj(a[i]);
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  bool finite() const {
    for (const auto& z : a)
      if (!is_finite(z)) return false;
    return true;
  }

  friend CMatrix operator+(const CMatrix& x, const CMatrix& y) {
    CMatrix m;
    for (int i = 0; i < N * N; ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
  }

  friend CMatrix operator-(const CMatrix& x, const CMatrix& y) {
    CMatrix m;
    for (int i = 0; i < N * N; ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
  }

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    CMatrix m;
    for (int r = 0; r < N; ++r)
      for (int k = 0; k < N; ++k) {
        const cplx xrk = x(r, k);
        if (xrk == cplx{}) continue;
        for (int c = 0; c < N; ++c) m(r, c) += xrk * y(k, c);
      }
    return m;
  }

  friend CMatrix operator*(const cplx& s, const CMatrix& x) {
    CMatrix m;
    for (int i = 0; i < N * N; ++i) m.a[i] = s * x.a[i];
    return m;
  }

  friend CMatrix operator*(const CMatrix& x, const cplx& s) { return s * x; }

  friend bool operator==(const CMatrix& x, const CMatrix& y) { return x.a == y.a; }
};

using CMat2 = CMatrix<2>;
using CMat4 = CMatrix<4>;
using CMat16 = CMatrix<16>;

// Row-major dense N x N real matrix.
template <int N>
struct RMatrix {
  std::array<double, static_cast<std::size_t>(N) * N> a{};

  static constexpr int size = N;

  double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * N + c]; }
  const double& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * N + c]; }

  static RMatrix identity() {
    RMatrix m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  RMatrix transpose() const {
    RMatrix m;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) m(r, c) = (*this)(c, r);
    return m;
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  bool finite() const {
    for (double v : a)
      if (!std::isfinite(v)) return false;
    return true;
  }

  friend RMatrix operator+(const RMatrix& x, const RMatrix& y) {
    RMatrix m;
    for (int i = 0; i < N * N; ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
  }

  friend RMatrix operator-(const RMatrix& x, const RMatrix& y) {
    RMatrix m;
    for (int i = 0; i < N * N; ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
  }

  friend RMatrix operator*(const RMatrix& x, const RMatrix& y) {
    RMatrix m;
    for (int r = 0; r < N; ++r)
      for (int k = 0; k < N; ++k)
        for (int c = 0; c < N; ++c) m(r, c) += x(r, k) * y(k, c);
    return m;
  }

  friend RMatrix operator*(double s, const RMatrix& x) {
    RMatrix m;
    for (int i = 0; i < N * N; ++i) m.a[i] = s * x.a[i];
    return m;
  }
};

using RMat3 = RMatrix<3>;
using RMat4 = RMatrix<4>;

template <int N>
double max_abs(const CMatrix<N>& m) {
  double v = 0.0;
  for (const auto& z : m.a) v = std::max(v, std::abs(z));
  return v;
}

template <int N>
double max_abs_diff(const CMatrix<N>& x, const CMatrix<N>& y) {
  double v = 0.0;
  for (int i = 0; i < N * N; ++i) v = std::max(v, std::abs(x.a[i] - y.a[i]));
  return v;
}

template <int N>
double max_abs_diff(const RMatrix<N>& x, const RMatrix<N>& y) {
  double v = 0.0;
  for (int i = 0; i < N * N; ++i) v = std::max(v, std::abs(x.a[i] - y.a[i]));
  return v;
}

template <int N>
double max_imag(const CMatrix<N>& m) {
  double v = 0.0;
  for (const auto& z : m.a) v = std::max(v, std::abs(z.imag()));
  return v;
}

template <int N>
double frobenius(const CMatrix<N>& m) {
  double s = 0.0;
  for (const auto& z : m.a) s += std::norm(z);
  return std::sqrt(s);
}

// Largest |m(r,c) - conj(m(c,r))| over all entries.
template <int N>
double hermiticity_defect(const CMatrix<N>& m) {
  double v = 0.0;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) v = std::max(v, std::abs(m(r, c) - std::conj(m(c, r))));
  return v;
}

template <int N>
CMatrix<N> to_complex(const RMatrix<N>& m) {
  CMatrix<N> c;
  for (int i = 0; i < N * N; ++i) c.a[i] = m.a[i];
  return c;
}

// Kronecker product, (x (*) y)(N*i+k, N*j+l) = x(i,j) * y(k,l).
template <int N>
CMatrix<N * N> kron(const CMatrix<N>& x, const CMatrix<N>& y) {
  CMatrix<N * N> m;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) m(N * i + k, N * j + l) = x(i, j) * y(k, l);
  return m;
}

template <int N>
struct EighResult {
  std::array<double, N> values;  // sorted descending
  CMatrix<N> vectors;            // column j is the unit eigenvector of values[j]
};

namespace detail {

// Multiplies the column by a unit phase so its first entry of magnitude
// > 1e-12 becomes real positive. Gives a deterministic representative of
// each eigenray for sorting and snapshotting.
template <int N>
void canonicalize_column_phase(CMatrix<N>& v, int col) {
  for (int r = 0; r < N; ++r) {
    const cplx z = v(r, col);
    if (std::abs(z) > 1e-12) {
      const cplx ph = std::conj(z) / std::abs(z);
      for (int k = 0; k < N; ++k) v(k, col) *= ph;
      return;
    }
  }
}

template <int N>
bool column_less(const CMatrix<N>& v, int ca, int cb) {
  for (int r = 0; r < N; ++r) {
    const cplx x = v(r, ca), y = v(r, cb);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace detail

// Cyclic Jacobi diagonalization of a Hermitian matrix with complex plane
// rotations. Deterministic: fixed pivot order, eigenvalues sorted
// descending, degenerate pairs tie-broken lexicographically on the
// phase-canonicalized eigenvector entries.
template <int N>
EighResult<N> eigh_hermitian(const CMatrix<N>& input) {
  if (!input.finite()) throw ValidationError("eigh: non-finite matrix");

  CMatrix<N> m;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) m(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));

  CMatrix<N> v = CMatrix<N>::identity();
  const double stop = 1e-14 * std::max(1.0, frobenius(m));

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) off += 2.0 * std::norm(m(p, q));
    if (std::sqrt(off) <= stop) break;

    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const cplx mpq = m(p, q);
        const double beta = std::abs(mpq);
        if (beta <= 1e-300) continue;
        const cplx phase = mpq / beta;  // m(p,q) = beta * phase

        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double tau = (aqq - app) / (2.0 * beta);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // R(p,p) = c, R(p,q) = s, R(q,p) = -s*conj(phase), R(q,q) = c*conj(phase);
        // m <- R^dag m R, v <- v R.
        const cplx rqp = -s * std::conj(phase);
        const cplx rqq = c * std::conj(phase);
        for (int k = 0; k < N; ++k) {  // columns: m <- m R, v <- v R
          const cplx mkp = m(k, p), mkq = m(k, q);
          m(k, p) = mkp * c + mkq * rqp;
          m(k, q) = mkp * s + mkq * rqq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c + vkq * rqp;
          v(k, q) = vkp * s + vkq * rqq;
        }
        for (int k = 0; k < N; ++k) {  // rows: m <- R^dag m
          const cplx mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk + std::conj(rqp) * mqk;
          m(q, k) = s * mpk + std::conj(rqq) * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
      }
    }
  }

  for (int col = 0; col < N; ++col) detail::canonicalize_column_phase(v, col);

  std::array<int, N> order;
  for (int i = 0; i < N; ++i) order[i] = i;
  for (int i = 0; i < N; ++i)  // insertion sort, stable and tiny
    for (int j = i; j > 0; --j) {
      const double li = m(order[j], order[j]).real();
      const double lj = m(order[j - 1], order[j - 1]).real();
      const bool swap_down =
          li > lj || (li == lj && detail::column_less(v, order[j], order[j - 1]));
      if (!swap_down) break;
      std::swap(order[j], order[j - 1]);
    }

  EighResult<N> out;
  for (int i = 0; i < N; ++i) {
    out.values[i] = m(order[i], order[i]).real();
    for (int r = 0; r < N; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

// Hermitian PSD square root; round-off negatives down to -tol are clamped.
template <int N>
CMatrix<N> sqrt_psd(const CMatrix<N>& m, double tol = 1e-10) {
  const auto eig = eigh_hermitian(m);
  const double floor = -tol * std::max(1.0, frobenius(m));
  CMatrix<N> out;
  for (int mu = 0; mu < N; ++mu) {
    double lam = eig.values[mu];
    if (lam < floor) throw ValidationError("sqrt_psd: matrix is not positive semidefinite");
    if (lam < 0.0) lam = 0.0;
    const double w = std::sqrt(lam);
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c)
        out(r, c) += w * eig.vectors(r, mu) * std::conj(eig.vectors(c, mu));
  }
  return out;
}

}  // namespace polarmap

#endif
