#pragma once

// The qubit as an orthogonal projection of the qutrit. The 2x3 isometry L
// and projector P = L^T L identify C^2 with a plane in C^3; conjugating by
// them carries the orthonormal Hermitian basis {E_jk} of A(C^3) onto the
// mercedes-frame kernels of A(C^2): W_jk = L P E_jk P L^T.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qframes/frames.hpp"
#include "qframes/matrix.hpp"
#include "qframes/opframes.hpp"

namespace qframes {

// Orthonormal Hermitian basis of A(C^d): E_jj = |e_j><e_j|, and for j != k
// the symmetric / antisymmetric combinations with the same index convention
// as HermitianFrame. Returned in row-major (j,k) order.
inline std::vector<ComplexMatrix> hermitian_basis(int d) {
  if (d < 1) throw std::invalid_argument("hermitian_basis: d must be >= 1");
  const HermitianFrame w =
      build_hermitian_frame(standard_frame(FrameKind::orthonormal, d));
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) basis.push_back(w.matrix(j, k));
  }
  return basis;
}

// L L^T = I_2 and L^T L = P = P^2.
struct ProjectionPair {
  RealMatrix L;  // 2 x 3
  RealMatrix P;  // 3 x 3
};

inline ProjectionPair projection_pair() {
  const double a = std::sqrt(2.0 / 3.0);
  const double b = 1.0 / std::sqrt(6.0);
  const double c = 1.0 / std::sqrt(2.0);
  ProjectionPair out;
  out.L.resize(2, 3);
  out.L << a, -b, -b,
           0, c, -c;
  out.P = out.L.transpose() * out.L;
  return out;
}

// A' = L P A P L^T: the qutrit observable compressed onto the qubit plane.
// Positive but not injective (anything supported on the kernel of P dies).
inline ComplexMatrix project_operator(const ComplexMatrix& A) {
  if (A.rows() != 3 || A.cols() != 3) {
    throw std::invalid_argument("project_operator: expected a 3x3 operator");
  }
  const ComplexMatrix a = require_hermitian(A, kInputTol, "project_operator");
  const ProjectionPair pp = projection_pair();
  ComplexMatrix out = pp.L * (pp.P * a * pp.P) * pp.L.transpose();
  return 0.5 * (out + out.adjoint());
}

// Wigner table of the projected operator, computed upstairs:
// W_{A'}(j,k) = Tr(E_jk P A P). Agrees with the mercedes-frame table of A'.
inline WignerTable wigner_of_projection(const ComplexMatrix& A) {
  if (A.rows() != 3 || A.cols() != 3) {
    throw std::invalid_argument(
        "wigner_of_projection: expected a 3x3 operator");
  }
  const ComplexMatrix a =
      require_hermitian(A, kInputTol, "wigner_of_projection");
  const ProjectionPair pp = projection_pair();
  const ComplexMatrix pap = pp.P * a * pp.P;
  const std::vector<ComplexMatrix> basis = hermitian_basis(3);
  WignerTable t(3, 3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      t(j, k) = (basis[static_cast<std::size_t>(3 * j + k)] * pap)
                    .trace()
                    .real();
    }
  }
  return t;
}

}  // namespace qframes
