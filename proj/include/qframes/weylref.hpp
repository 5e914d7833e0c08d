#pragma once

// Reference machinery for odd dimension d = 2s+1, with the Hilbert space
// realized as functions on the centered index set {-s..s}: displacement
// operators, displaced parities, the unitary discrete Fourier transform,
// wrapped Gaussians, coherent states, and the 2x2 Wootters-Feynman kernel.
// Serves as the independent comparison baseline for the frame kernels.
//
// All d x d grids are indexed by (j,k) in {-s..s}^2; matrices act on vectors
// whose component n lives at storage row n + s.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qframes/frames.hpp"
#include "qframes/matrix.hpp"
#include "qframes/opframes.hpp"

namespace qframes {

struct OddDimension {
  int d;
  int s;

  explicit OddDimension(int dim) : d(dim), s((dim - 1) / 2) {
    if (dim < 3 || dim % 2 == 0) {
      throw std::invalid_argument(
          "OddDimension: dimension must be odd and >= 3");
    }
  }
};

namespace detail {
// n reduced into {0..d-1}.
inline int wrap_index(int n, int d) {
  int r = n % d;
  return r < 0 ? r + d : r;
}
}  // namespace detail

// D(j,k) psi(n) = e^{-(pi i/d) kj} e^{(2 pi i/d) kn} psi(n - j).
// Defined for arbitrary integer (j,k); shifting an index by d changes only
// the sign, D(j+d,k) = (-1)^k D(j,k) and D(j,k+d) = (-1)^j D(j,k).
inline ComplexMatrix displacement(OddDimension dim, int j, int k) {
  using std::numbers::pi;
  const int d = dim.d;
  const int s = dim.s;
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  const ComplexScalar phase =
      std::exp(ComplexScalar(0, -pi * static_cast<double>(k) * j / d));
  for (int n = -s; n <= s; ++n) {
    const ComplexScalar factor =
        std::exp(ComplexScalar(0, 2.0 * pi * static_cast<double>(k) * n / d));
    const int src = detail::wrap_index(n - j + s, d);  // row of psi(n - j)
    m(n + s, src) = phase * factor;
  }
  return m;
}

// Parity: psi(n) -> psi(-n); the anti-diagonal in the centered realization.
inline ComplexMatrix parity(OddDimension dim) {
  ComplexMatrix m = ComplexMatrix::Zero(dim.d, dim.d);
  for (int n = -dim.s; n <= dim.s; ++n) m(n + dim.s, -n + dim.s) = 1.0;
  return m;
}

// Pi(j,k) = D(j,k) Pi D†(j,k): Hermitian, unitary, involutive.
inline ComplexMatrix displaced_parity(OddDimension dim, int j, int k) {
  const ComplexMatrix d = displacement(dim, j, k);
  return d * parity(dim) * d.adjoint();
}

// Both d x d operator grids, flattened row-major over (j,k) in {-s..s}^2.
struct PhasePointOperators {
  OddDimension dim;
  std::vector<ComplexMatrix> D;
  std::vector<ComplexMatrix> Pi;

  const ComplexMatrix& displacement(int j, int k) const {
    return D[index(j, k)];
  }
  const ComplexMatrix& displaced_parity(int j, int k) const {
    return Pi[index(j, k)];
  }

  std::size_t index(int j, int k) const {
    if (j < -dim.s || j > dim.s || k < -dim.s || k > dim.s) {
      throw std::invalid_argument("PhasePointOperators: index out of range");
    }
    return static_cast<std::size_t>(j + dim.s) * dim.d +
           static_cast<std::size_t>(k + dim.s);
  }
};

inline PhasePointOperators phase_point_operators(OddDimension dim) {
  PhasePointOperators ops{dim, {}, {}};
  ops.D.reserve(static_cast<std::size_t>(dim.d) * dim.d);
  ops.Pi.reserve(static_cast<std::size_t>(dim.d) * dim.d);
  const ComplexMatrix par = parity(dim);
  for (int j = -dim.s; j <= dim.s; ++j) {
    for (int k = -dim.s; k <= dim.s; ++k) {
      ComplexMatrix d = displacement(dim, j, k);
      ops.Pi.push_back(d * par * d.adjoint());
      ops.D.push_back(std::move(d));
    }
  }
  return ops;
}

// chi_A(j,k) = (1/d) Tr(A D†(j,k)) and W_A(j,k) = (1/d) Tr(A Pi(j,k)) for
// Hermitian A. Tables are d x d with (j,k) at row j+s, column k+s, and the
// expansions A = sum chi D = sum W Pi both reconstruct A.
inline std::pair<CharTable, WignerTable> weyl_wigner(const ComplexMatrix& A,
                                                     OddDimension dim) {
  if (A.rows() != dim.d || A.cols() != dim.d) {
    throw std::invalid_argument("weyl_wigner: operator dimension mismatch");
  }
  const ComplexMatrix a =
      require_hermitian(A, kInputTol, "weyl_wigner: operator");
  const PhasePointOperators ops = phase_point_operators(dim);
  CharTable chi(dim.d, dim.d);
  WignerTable w(dim.d, dim.d);
  for (int j = -dim.s; j <= dim.s; ++j) {
    for (int k = -dim.s; k <= dim.s; ++k) {
      chi(j + dim.s, k + dim.s) =
          (a * ops.displacement(j, k).adjoint()).trace() / double(dim.d);
      w(j + dim.s, k + dim.s) =
          (a * ops.displaced_parity(j, k)).trace().real() / double(dim.d);
    }
  }
  return {std::move(chi), std::move(w)};
}

// g_kappa(n) = sum_m e^{-(kappa pi/d)(n + m d)^2}, wrap terms dropped once
// below 1e-17. Real positive, returned on the centered index grid.
inline ComplexVector discrete_gaussian(OddDimension dim, double kappa) {
  using std::numbers::pi;
  if (!(kappa > 0)) {
    throw std::invalid_argument("discrete_gaussian: kappa must be positive");
  }
  ComplexVector g(dim.d);
  const double c = kappa * pi / dim.d;
  for (int n = -dim.s; n <= dim.s; ++n) {
    double total = std::exp(-c * n * n);
    for (int m = 1;; ++m) {
      const double up = std::exp(-c * std::pow(n + m * dim.d, 2));
      const double down = std::exp(-c * std::pow(n - m * dim.d, 2));
      total += up + down;
      if (up < 1e-17 && down < 1e-17) break;
    }
    g(n + dim.s) = total;
  }
  return g;
}

// Unitary DFT on the centered grid, F(k,n) = e^{-(2 pi i/d) kn} / sqrt(d).
// Order four: eigenvalues lie in {1, -i, -1, i}, and the normalized g_1 is
// a fixed point (the discrete vacuum).
inline ComplexMatrix fourier_matrix(OddDimension dim) {
  using std::numbers::pi;
  ComplexMatrix f(dim.d, dim.d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim.d));
  for (int k = -dim.s; k <= dim.s; ++k) {
    for (int n = -dim.s; n <= dim.s; ++n) {
      f(k + dim.s, n + dim.s) =
          norm * std::exp(ComplexScalar(
                     0, -2.0 * pi * static_cast<double>(k) * n / dim.d));
    }
  }
  return f;
}

inline ComplexVector vacuum_state(OddDimension dim) {
  ComplexVector g = discrete_gaussian(dim, 1.0);
  return g / g.norm();
}

// The d^2 coherent states |j,k> = D(j,k)|0,0>, ordered lexicographically in
// (j,k) over {-s..s}^2. Unit vectors resolving the identity with frame
// bound d: (1/d) sum |j,k><j,k| = I.
inline Frame coherent_states(OddDimension dim) {
  const ComplexVector vac = vacuum_state(dim);
  ComplexMatrix cols(dim.d, dim.d * dim.d);
  int col = 0;
  for (int j = -dim.s; j <= dim.s; ++j) {
    for (int k = -dim.s; k <= dim.s; ++k) {
      cols.col(col++) = displacement(dim, j, k) * vac;
    }
  }
  return Frame(std::move(cols));
}

// K_jk = (I ± sigma_x ± sigma_y ± sigma_z)/2 on the 2x2 grid; an orthogonal
// basis of A(C^2) with <<K_jk,K_nm>> = 2 delta, giving the qubit Wigner
// function W_A(j,k) = (1/2) Tr(A K_jk).
struct WoottersFeynmanKernel {
  std::array<ComplexMatrix, 4> K;  // (j,k) row-major over {0,1}^2

  const ComplexMatrix& operator()(int j, int k) const {
    if (j < 0 || j > 1 || k < 0 || k > 1) {
      throw std::invalid_argument("WoottersFeynmanKernel: index out of range");
    }
    return K[static_cast<std::size_t>(2 * j + k)];
  }

  WignerTable wigner(const ComplexMatrix& A) const {
    const ComplexMatrix a =
        require_hermitian(A, kInputTol, "wootters_feynman wigner: operator");
    WignerTable t(2, 2);
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        t(j, k) = 0.5 * ((*this)(j, k) * a).trace().real();
      }
    }
    return t;
  }
};

inline WoottersFeynmanKernel wootters_feynman_kernel() {
  ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, ComplexScalar(0, -1), ComplexScalar(0, 1), 0;
  sz << 1, 0, 0, -1;
  WoottersFeynmanKernel k;
  k.K[0] = 0.5 * (id + sx + sy + sz);
  k.K[1] = 0.5 * (id - sx - sy + sz);
  k.K[2] = 0.5 * (id + sx - sy - sz);
  k.K[3] = 0.5 * (id - sx + sy - sz);
  return k;
}

}  // namespace qframes
