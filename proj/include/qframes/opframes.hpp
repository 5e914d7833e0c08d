#pragma once

// Lifting a tight frame {v_j} of C^d to tight operator frames:
//   V_jk = |v_j><v_k|                  spans L(H)   (rank-one frame)
//   W_jj = V_jj
//   W_jk = (V_jk + V_kj)/sqrt(2)       for j < k    (self-adjoint frame)
//   W_jk = i (V_kj - V_jk)/sqrt(2)     for j > k
// together with the coefficient tables of an operator in those frames:
// the complex characteristic table chi_A(j,k) = Tr(A V_jk†) and the real
// table W_A(j,k) = Tr(A W_jk), which plays the role of a discrete Wigner
// function.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qframes/frames.hpp"
#include "qframes/matrix.hpp"

namespace qframes {

// Real (r+1) x (r+1) coefficient grid of a self-adjoint operator; row index
// j, column index k. The off-diagonal convention is fixed: j < k holds
// sqrt(2) Re <v_k|A|v_j>, j > k holds sqrt(2) Im <v_k|A|v_j>.
using WignerTable = RealMatrix;
// Complex grid chi_A(j,k) = <v_j|A|v_k>.
using CharTable = ComplexMatrix;

namespace detail {
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

// The rank-one operators V_jk = |v_j><v_k| of a tight frame, materialized on
// demand. Tightness of the source frame makes {V_jk} a tight frame of L(H).
class OperatorFrame {
 public:
  explicit OperatorFrame(Frame f) : frame_(std::move(f)) {
    require_tight(frame_, "OperatorFrame");
  }

  int dim() const { return frame_.dim(); }
  int count() const { return frame_.count(); }
  const Frame& frame() const { return frame_; }

  ComplexMatrix matrix(int j, int k) const {
    check_index(j, k);
    return frame_.vector(j) * frame_.vector(k).adjoint();
  }

 protected:
  void check_index(int j, int k) const {
    if (j < 0 || k < 0 || j >= count() || k >= count()) {
      throw std::invalid_argument("operator frame: index out of range");
    }
  }

  Frame frame_;
};

// The self-adjoint combinations W_jk; a tight frame of the real Hilbert
// space A(H) of Hermitian operators. The diagonal resolves the identity:
// sum_j W_jj = I.
class HermitianFrame : public OperatorFrame {
 public:
  explicit HermitianFrame(Frame f) : OperatorFrame(std::move(f)) {}

  ComplexMatrix matrix(int j, int k) const {
    check_index(j, k);
    const ComplexVector vj = frame_.vector(j);
    const ComplexVector vk = frame_.vector(k);
    if (j == k) return vj * vj.adjoint();
    ComplexMatrix vjk = vj * vk.adjoint();
    if (j < k) {
      return detail::kInvSqrt2 * (vjk + vjk.adjoint());
    }
    return ComplexScalar(0, 1) * detail::kInvSqrt2 * (vjk.adjoint() - vjk);
  }
};

inline OperatorFrame build_operator_frame(const Frame& f) {
  return OperatorFrame(f);
}

inline HermitianFrame build_hermitian_frame(const Frame& f) {
  return HermitianFrame(f);
}

// W_A(j,k) = Tr(A W_jk) for Hermitian A, evaluated through the matrix
// elements M(j,k) = <v_j|A|v_k> rather than by materializing each W_jk.
inline WignerTable wigner(const ComplexMatrix& A, const HermitianFrame& w) {
  if (A.rows() != w.dim()) {
    throw std::invalid_argument("wigner: operator dimension mismatch");
  }
  const ComplexMatrix a = require_hermitian(A, kInputTol, "wigner: operator");
  const ComplexMatrix m =
      w.frame().columns().adjoint() * a * w.frame().columns();
  const int n = w.count();
  WignerTable t(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const ComplexScalar z = m(k, j);  // <v_k|A|v_j>
      if (j == k) {
        t(j, k) = z.real();
      } else if (j < k) {
        t(j, k) = std::sqrt(2.0) * z.real();
      } else {
        t(j, k) = std::sqrt(2.0) * z.imag();
      }
    }
  }
  return t;
}

// chi_A(j,k) = Tr(A V_jk†) = <v_j|A|v_k>.
inline CharTable char_function(const ComplexMatrix& A, const OperatorFrame& v) {
  if (A.rows() != v.dim() || A.cols() != v.dim()) {
    throw std::invalid_argument("char_function: operator dimension mismatch");
  }
  return v.frame().columns().adjoint() * A * v.frame().columns();
}

namespace detail {
// Coefficients over {V_jk} equivalent to a real table over {W_jk}.
inline ComplexMatrix wigner_to_char_coeffs(const WignerTable& t) {
  const int n = static_cast<int>(t.rows());
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == k) {
        c(j, j) += t(j, j);
      } else if (j < k) {
        c(j, k) += kInvSqrt2 * t(j, k);
        c(k, j) += kInvSqrt2 * t(j, k);
      } else {
        c(k, j) += ComplexScalar(0, 1) * kInvSqrt2 * t(j, k);
        c(j, k) -= ComplexScalar(0, 1) * kInvSqrt2 * t(j, k);
      }
    }
  }
  return c;
}
}  // namespace detail

// A = sum_jk t(j,k) W_jk. Output is Hermitian by construction.
inline ComplexMatrix reconstruct(const WignerTable& t, const HermitianFrame& w) {
  if (t.rows() != w.count() || t.cols() != w.count()) {
    throw std::invalid_argument("reconstruct: table size mismatch");
  }
  const ComplexMatrix& cols = w.frame().columns();
  ComplexMatrix a = cols * detail::wigner_to_char_coeffs(t) * cols.adjoint();
  return 0.5 * (a + a.adjoint());
}

// A = sum_jk chi(j,k) V_jk.
inline ComplexMatrix reconstruct(const CharTable& chi, const OperatorFrame& v) {
  if (chi.rows() != v.count() || chi.cols() != v.count()) {
    throw std::invalid_argument("reconstruct: table size mismatch");
  }
  const ComplexMatrix& cols = v.frame().columns();
  return cols * chi * cols.adjoint();
}

// sum_jk tA(j,k) tB(j,k) = Tr(AB); with tA = tB = W_rho this is the purity.
inline double trace_pairing(const WignerTable& ta, const WignerTable& tb) {
  if (ta.rows() != tb.rows() || ta.cols() != tb.cols()) {
    throw std::invalid_argument("trace_pairing: table size mismatch");
  }
  return ta.cwiseProduct(tb).sum();
}

// Frame of the conjugated vectors {U v_j}; its kernels are W'_jk = U W_jk U†,
// so Tr(U†AU W_jk) = Tr(A W'_jk).
inline HermitianFrame conjugate_frame(const HermitianFrame& w,
                                      const ComplexMatrix& U) {
  if (U.rows() != w.dim() || U.cols() != w.dim()) {
    throw std::invalid_argument("conjugate_frame: unitary dimension mismatch");
  }
  require_unitary(U, kInputTol, "conjugate_frame");
  return HermitianFrame(
      Frame(U * w.frame().columns(), w.frame().tight_tol()));
}

}  // namespace qframes
