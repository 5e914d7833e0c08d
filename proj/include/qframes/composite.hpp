#pragma once

// Bipartite systems: the tensor product {W1_jk ⊗ W2_lm} of two Hermitian
// frames is a tight frame of A(H1 ⊗ H2), with the 4-index coefficient table
// W_A(j,l,k,m) = Tr(A (W1_jk ⊗ W2_lm)). Summing the table over a paired
// index yields the Wigner table of the corresponding partial trace, and the
// equal-coordinate slice t(j,j,k,k) gives a 2-index view of a composite
// state for visualization.

#include <stdexcept>
#include <utility>
#include <vector>

#include "qframes/matrix.hpp"
#include "qframes/opframes.hpp"

namespace qframes {

enum class Subsystem { first, second };

// Real 4-index grid with value order (j, l, k, m): j,k index the first
// frame, l,m the second. Flattened row-major in that exact order.
struct CompositeWignerTable {
  int count1 = 0;
  int count2 = 0;
  std::vector<double> values;

  CompositeWignerTable() = default;
  CompositeWignerTable(int c1, int c2)
      : count1(c1),
        count2(c2),
        values(static_cast<std::size_t>(c1) * c2 * c1 * c2, 0.0) {}

  double operator()(int j, int l, int k, int m) const {
    return values[index(j, l, k, m)];
  }
  double& at(int j, int l, int k, int m) { return values[index(j, l, k, m)]; }

  std::size_t index(int j, int l, int k, int m) const {
    if (j < 0 || j >= count1 || k < 0 || k >= count1 || l < 0 ||
        l >= count2 || m < 0 || m >= count2) {
      throw std::invalid_argument("CompositeWignerTable: index out of range");
    }
    return ((static_cast<std::size_t>(j) * count2 + l) * count1 + k) * count2 +
           m;
  }

  // Tr A = sum_{j,l} t(j,l,j,l).
  double diagonal_sum() const {
    double s = 0.0;
    for (int j = 0; j < count1; ++j) {
      for (int l = 0; l < count2; ++l) s += (*this)(j, l, j, l);
    }
    return s;
  }
};

// The product kernels W1_jk ⊗ W2_lm, materialized on demand.
class TensorHermitianFrame {
 public:
  TensorHermitianFrame(HermitianFrame f1, HermitianFrame f2)
      : f1_(std::move(f1)), f2_(std::move(f2)) {}

  int dim() const { return f1_.dim() * f2_.dim(); }
  int count1() const { return f1_.count(); }
  int count2() const { return f2_.count(); }
  const HermitianFrame& first() const { return f1_; }
  const HermitianFrame& second() const { return f2_; }

  ComplexMatrix matrix(int j, int l, int k, int m) const {
    return kron(f1_.matrix(j, k), f2_.matrix(l, m));
  }

 private:
  HermitianFrame f1_;
  HermitianFrame f2_;
};

inline TensorHermitianFrame tensor_hermitian_frame(HermitianFrame f1,
                                                   HermitianFrame f2) {
  return TensorHermitianFrame(std::move(f1), std::move(f2));
}

namespace detail {

// Matrix elements M[(b,d'),(a,c)] = <v_b ⊗ u_d'| A |v_a ⊗ u_c> for the
// column stacks of both frames. Every table entry is a short signed
// combination of entries of M.
inline ComplexMatrix bivector_elements(const ComplexMatrix& A,
                                       const HermitianFrame& w1,
                                       const HermitianFrame& w2) {
  const ComplexMatrix u = kron(w1.frame().columns(), w2.frame().columns());
  return u.adjoint() * A * u;
}

// Decomposition of W_jk over the rank-one V's: list of (row, col, coeff)
// with W_jk = sum coeff * V_{row,col}.
struct VTerm {
  int a, b;
  ComplexScalar coeff;
};

inline int vterms(int j, int k, VTerm out[2]) {
  const double inv_sqrt2 = kInvSqrt2;
  if (j == k) {
    out[0] = {j, j, 1.0};
    return 1;
  }
  if (j < k) {
    out[0] = {j, k, inv_sqrt2};
    out[1] = {k, j, inv_sqrt2};
  } else {
    out[0] = {k, j, ComplexScalar(0, inv_sqrt2)};
    out[1] = {j, k, ComplexScalar(0, -inv_sqrt2)};
  }
  return 2;
}

}  // namespace detail

// W_A(j,l,k,m) = Tr(A (W1_jk ⊗ W2_lm)) for Hermitian A on H1 ⊗ H2 with the
// first factor varying slowest (kron order).
inline CompositeWignerTable wigner_composite(const ComplexMatrix& A,
                                             const HermitianFrame& w1,
                                             const HermitianFrame& w2) {
  if (A.rows() != w1.dim() * w2.dim()) {
    throw std::invalid_argument("wigner_composite: dimension mismatch");
  }
  const ComplexMatrix a =
      require_hermitian(A, kInputTol, "wigner_composite: operator");
  const ComplexMatrix m = detail::bivector_elements(a, w1, w2);
  const int c1 = w1.count();
  const int c2 = w2.count();
  CompositeWignerTable t(c1, c2);
  detail::VTerm t1[2], t2[2];
  for (int j = 0; j < c1; ++j) {
    for (int k = 0; k < c1; ++k) {
      const int n1 = detail::vterms(j, k, t1);
      for (int l = 0; l < c2; ++l) {
        for (int mm = 0; mm < c2; ++mm) {
          const int n2 = detail::vterms(l, mm, t2);
          // Tr(A (V1_ab ⊗ V2_cd)) = M[(b,d),(a,c)]
          ComplexScalar val = 0.0;
          for (int p = 0; p < n1; ++p) {
            for (int q = 0; q < n2; ++q) {
              const auto row = t1[p].b * c2 + t2[q].b;
              const auto col = t1[p].a * c2 + t2[q].a;
              val += t1[p].coeff * t2[q].coeff * m(row, col);
            }
          }
          t.at(j, l, k, mm) = val.real();
        }
      }
    }
  }
  return t;
}

// A = sum t(j,l,k,m) W1_jk ⊗ W2_lm.
inline ComplexMatrix reconstruct(const CompositeWignerTable& t,
                                 const HermitianFrame& w1,
                                 const HermitianFrame& w2) {
  if (t.count1 != w1.count() || t.count2 != w2.count()) {
    throw std::invalid_argument("reconstruct: composite table size mismatch");
  }
  const int c1 = t.count1;
  const int c2 = t.count2;
  ComplexMatrix coeffs = ComplexMatrix::Zero(c1 * c2, c1 * c2);
  detail::VTerm t1[2], t2[2];
  for (int j = 0; j < c1; ++j) {
    for (int k = 0; k < c1; ++k) {
      const int n1 = detail::vterms(j, k, t1);
      for (int l = 0; l < c2; ++l) {
        for (int m = 0; m < c2; ++m) {
          const int n2 = detail::vterms(l, m, t2);
          const double v = t(j, l, k, m);
          for (int p = 0; p < n1; ++p) {
            for (int q = 0; q < n2; ++q) {
              coeffs(t1[p].a * c2 + t2[q].a, t1[p].b * c2 + t2[q].b) +=
                  v * t1[p].coeff * t2[q].coeff;
            }
          }
        }
      }
    }
  }
  const ComplexMatrix u = kron(w1.frame().columns(), w2.frame().columns());
  ComplexMatrix a = u * coeffs * u.adjoint();
  return 0.5 * (a + a.adjoint());
}

// Marginal over the traced factor: tracing out the first system leaves
// t'(l,m) = sum_j t(j,l,j,m); tracing out the second leaves
// t'(j,k) = sum_l t(j,l,k,l).
inline WignerTable partial_trace_wigner(const CompositeWignerTable& t,
                                        Subsystem traced_out) {
  if (traced_out == Subsystem::first) {
    WignerTable out = WignerTable::Zero(t.count2, t.count2);
    for (int l = 0; l < t.count2; ++l) {
      for (int m = 0; m < t.count2; ++m) {
        for (int j = 0; j < t.count1; ++j) out(l, m) += t(j, l, j, m);
      }
    }
    return out;
  }
  WignerTable out = WignerTable::Zero(t.count1, t.count1);
  for (int j = 0; j < t.count1; ++j) {
    for (int k = 0; k < t.count1; ++k) {
      for (int l = 0; l < t.count2; ++l) out(j, k) += t(j, l, k, l);
    }
  }
  return out;
}

// Matrix-level partial trace, kept independent of the table machinery so the
// marginal identity can be checked against it.
inline ComplexMatrix partial_trace(const ComplexMatrix& A, int d1, int d2,
                                   Subsystem traced_out) {
  if (A.rows() != d1 * d2 || A.cols() != d1 * d2) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  if (traced_out == Subsystem::first) {
    ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
    for (int n = 0; n < d1; ++n) {
      out += A.block(n * d2, n * d2, d2, d2);
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d1; ++j) {
      ComplexScalar s = 0.0;
      for (int n = 0; n < d2; ++n) s += A(i * d2 + n, j * d2 + n);
      out(i, j) = s;
    }
  }
  return out;
}

// slice(j,k) = t(j,j,k,k); both factors must carry the same frame.
inline WignerTable equal_coordinate_slice(const CompositeWignerTable& t) {
  if (t.count1 != t.count2) {
    throw std::invalid_argument(
        "equal_coordinate_slice: factor counts differ");
  }
  WignerTable out(t.count1, t.count1);
  for (int j = 0; j < t.count1; ++j) {
    for (int k = 0; k < t.count1; ++k) out(j, k) = t(j, j, k, k);
  }
  return out;
}

// Direct evaluation slice(j,k) = Tr(A (W_jk ⊗ W_jk)) without materializing
// the 4-index grid; used for large frames.
inline WignerTable equal_coordinate_slice(const ComplexMatrix& A,
                                          const HermitianFrame& w) {
  if (A.rows() != w.dim() * w.dim()) {
    throw std::invalid_argument("equal_coordinate_slice: dimension mismatch");
  }
  const ComplexMatrix a =
      require_hermitian(A, kInputTol, "equal_coordinate_slice: operator");
  const int n = w.count();
  WignerTable out(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const ComplexMatrix wjk = w.matrix(j, k);
      out(j, k) = (a * kron(wjk, wjk)).trace().real();
    }
  }
  return out;
}

}  // namespace qframes
