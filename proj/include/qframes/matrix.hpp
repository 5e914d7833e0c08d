#pragma once

// Dense complex linear algebra substrate shared by all qframes modules.
// Thin layer over Eigen: type aliases, tolerance constants, and the
// Hilbert-Schmidt inner product used throughout.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qframes {

using ComplexScalar = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Default tolerance for frame tightness checks.
inline constexpr double kTightTol = 1e-10;
// Hermiticity / unitarity validation tolerance for operator inputs.
inline constexpr double kInputTol = 1e-10;
// Eigenvalues of a frame operator below this floor mean "not a frame".
inline constexpr double kEigenvalueFloor = 1e-12;

// Numerical failure distinct from bad input (CLI maps these to different
// exit codes).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

// Validates Hermiticity within `tol` and returns the symmetrized matrix
// (A + A†)/2 so downstream real-valued tables are immune to rounding drift.
inline ComplexMatrix require_hermitian(const ComplexMatrix& a,
                                       double tol = kInputTol,
                                       const char* what = "matrix") {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(what) + ": not square");
  }
  if (max_abs(a - a.adjoint()) > tol) {
    throw std::invalid_argument(std::string(what) + ": not Hermitian");
  }
  return 0.5 * (a + a.adjoint());
}

inline bool is_unitary(const ComplexMatrix& u, double tol = kInputTol) {
  if (u.rows() != u.cols()) return false;
  ComplexMatrix id = ComplexMatrix::Identity(u.rows(), u.cols());
  return max_abs(u.adjoint() * u - id) <= tol;
}

inline void require_unitary(const ComplexMatrix& u, double tol = kInputTol,
                            const char* what = "matrix") {
  if (!is_unitary(u, tol)) {
    throw std::invalid_argument(std::string(what) + ": not unitary");
  }
}

// <<A,B>> = Tr(A† B), the inner product of L(H).
inline ComplexScalar hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace();
}

// Hilbert-Schmidt (Frobenius) norm.
inline double hs_norm(const ComplexMatrix& a) { return a.norm(); }

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qframes
