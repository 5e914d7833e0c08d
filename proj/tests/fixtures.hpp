#pragma once

// Hard-coded reference matrices used as entrywise fixtures: the nine
// triangle-frame kernels, the sixteen tetrahedron kernels, the qutrit
// displacement / displaced-parity grids, the qutrit Fourier matrix and its
// eigenvectors, the qubit-in-qutrit projection pair, the Hermitian basis of
// A(C^3), and the published rotation relations among kernels.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qframes/matrix.hpp"

namespace qfix {

using qframes::ComplexMatrix;
using qframes::ComplexScalar;
using qframes::ComplexVector;

inline ComplexScalar cis(double t) {
  return {std::cos(t), std::sin(t)};
}

inline ComplexMatrix m2(ComplexScalar a, ComplexScalar b, ComplexScalar c,
                        ComplexScalar d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline ComplexMatrix m3(ComplexScalar a, ComplexScalar b, ComplexScalar c,
                        ComplexScalar d, ComplexScalar e, ComplexScalar f,
                        ComplexScalar g, ComplexScalar h, ComplexScalar i) {
  ComplexMatrix m(3, 3);
  m << a, b, c, d, e, f, g, h, i;
  return m;
}

// --- triangle-frame kernels W_jk, row-major (j,k) over {0,1,2} ------------

inline std::array<ComplexMatrix, 9> triangle_w() {
  const double r2_3 = std::sqrt(2.0) / 3.0;
  const double r6 = 1.0 / std::sqrt(6.0);
  const double r12 = 1.0 / (2.0 * std::sqrt(3.0));
  const double r2 = 1.0 / std::sqrt(2.0);
  const ComplexScalar i6(0, r6);
  return {
      m2(2.0 / 3.0, 0, 0, 0),            // W00
      m2(-r2_3, r6, r6, 0),              // W01
      m2(-r2_3, -r6, -r6, 0),            // W02
      m2(0, i6, -i6, 0),                 // W10
      m2(1.0 / 6.0, -r12, -r12, 0.5),    // W11
      m2(1.0 / (3.0 * std::sqrt(2.0)), 0, 0, -r2),  // W12
      m2(0, -i6, i6, 0),                 // W20
      m2(0, i6, -i6, 0),                 // W21
      m2(1.0 / 6.0, r12, r12, 0.5),      // W22
  };
}

// --- tetrahedron-frame kernels W_jk, row-major (j,k) over {0..3} ----------

inline std::array<ComplexMatrix, 16> tetrahedron_w() {
  const double q = 0.25;
  const double h = 1.0 / (2.0 * std::sqrt(2.0));
  const ComplexScalar ih(0, h);
  return {
      m3(q, -q, -q, -q, q, q, -q, q, q),          // W00
      m3(-h, h, 0, h, -h, 0, 0, 0, h),            // W01
      m3(-h, 0, h, 0, h, 0, h, 0, -h),            // W02
      m3(h, 0, 0, 0, -h, -h, 0, -h, -h),          // W03
      m3(0, 0, -ih, 0, 0, ih, ih, -ih, 0),        // W10
      m3(q, -q, q, -q, q, -q, q, -q, q),          // W11
      m3(h, 0, 0, 0, -h, h, 0, h, -h),            // W12
      m3(-h, 0, -h, 0, h, 0, -h, 0, -h),          // W13
      m3(0, -ih, 0, ih, 0, -ih, 0, ih, 0),        // W20
      m3(0, ih, -ih, -ih, 0, 0, ih, 0, 0),        // W21
      m3(q, q, -q, q, q, -q, -q, -q, q),          // W22
      m3(-h, -h, 0, -h, -h, 0, 0, 0, h),          // W23
      m3(0, ih, ih, -ih, 0, 0, -ih, 0, 0),        // W30
      m3(0, -ih, 0, ih, 0, ih, 0, -ih, 0),        // W31
      m3(0, 0, -ih, 0, 0, -ih, ih, ih, 0),        // W32
      m3(q, q, q, q, q, q, q, q, q),              // W33
  };
}

// --- qutrit displacements and displaced parities --------------------------
// Row-major over (j,k) in {-1,0,1}^2; matrices act on (psi(-1),psi(0),psi(1)).

inline std::array<ComplexMatrix, 9> qutrit_displacements() {
  using std::numbers::pi;
  const ComplexScalar p3 = cis(pi / 3), m3c = cis(-pi / 3);
  const ComplexScalar p23 = cis(2 * pi / 3), m23 = cis(-2 * pi / 3);
  return {
      m3(0, p3, 0, 0, 0, m3c, -1, 0, 0),   // D(-1,-1)
      m3(0, 1, 0, 0, 0, 1, 1, 0, 0),       // D(-1,0)
      m3(0, m3c, 0, 0, 0, p3, -1, 0, 0),   // D(-1,1)
      m3(p23, 0, 0, 0, 1, 0, 0, 0, m23),   // D(0,-1)
      m3(1, 0, 0, 0, 1, 0, 0, 0, 1),       // D(0,0)
      m3(m23, 0, 0, 0, 1, 0, 0, 0, p23),   // D(0,1)
      m3(0, 0, -1, p3, 0, 0, 0, m3c, 0),   // D(1,-1)
      m3(0, 0, 1, 1, 0, 0, 0, 1, 0),       // D(1,0)
      m3(0, 0, -1, m3c, 0, 0, 0, p3, 0),   // D(1,1)
  };
}

inline std::array<ComplexMatrix, 9> qutrit_parities() {
  using std::numbers::pi;
  const ComplexScalar p3 = cis(pi / 3), m3c = cis(-pi / 3);
  const ComplexScalar p23 = cis(2 * pi / 3), m23 = cis(-2 * pi / 3);
  return {
      m3(1, 0, 0, 0, 0, -m3c, 0, -p3, 0),  // Pi(-1,-1)
      m3(1, 0, 0, 0, 0, 1, 0, 1, 0),       // Pi(-1,0)
      m3(1, 0, 0, 0, 0, -p3, 0, -m3c, 0),  // Pi(-1,1)
      m3(0, 0, m23, 0, 1, 0, p23, 0, 0),   // Pi(0,-1)
      m3(0, 0, 1, 0, 1, 0, 1, 0, 0),       // Pi(0,0)
      m3(0, 0, p23, 0, 1, 0, m23, 0, 0),   // Pi(0,1)
      m3(0, -m3c, 0, -p3, 0, 0, 0, 0, 1),  // Pi(1,-1)
      m3(0, 1, 0, 1, 0, 0, 0, 0, 1),       // Pi(1,0)
      m3(0, -p3, 0, -m3c, 0, 0, 0, 0, 1),  // Pi(1,1)
  };
}

inline ComplexMatrix qutrit_fourier() {
  using std::numbers::pi;
  const ComplexScalar p = cis(2 * pi / 3), m = cis(-2 * pi / 3);
  return m3(m, 1, p, 1, 1, 1, p, 1, m) / std::sqrt(3.0);
}

// Eigenvectors of the qutrit Fourier matrix for eigenvalues 1, -i, -1.
inline std::array<ComplexVector, 3> qutrit_fourier_eigvecs() {
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  ComplexVector f0(3), f1(3), f2(3);
  f0 << 0.5 * std::sqrt(1 - r3), r2 * std::sqrt(1 + r3), 0.5 * std::sqrt(1 - r3);
  f1 << -r2, 0, r2;
  f2 << 0.5 * std::sqrt(1 + r3), -r2 * std::sqrt(1 - r3), 0.5 * std::sqrt(1 + r3);
  return {f0, f1, f2};
}

// --- projection of the qutrit onto the qubit plane ------------------------

inline qframes::RealMatrix projection_l() {
  qframes::RealMatrix l(2, 3);
  l << std::sqrt(2.0 / 3.0), -1.0 / std::sqrt(6.0), -1.0 / std::sqrt(6.0),
       0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return l;
}

inline qframes::RealMatrix projection_p() {
  qframes::RealMatrix p(3, 3);
  p << 2, -1, -1,
       -1, 2, -1,
       -1, -1, 2;
  return p / 3.0;
}

// Orthonormal Hermitian basis E_jk of A(C^3), row-major (j,k).
inline std::array<ComplexMatrix, 9> hermitian_basis_c3() {
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexScalar ir(0, r);
  return {
      m3(1, 0, 0, 0, 0, 0, 0, 0, 0),      // E00
      m3(0, r, 0, r, 0, 0, 0, 0, 0),      // E01
      m3(0, 0, r, 0, 0, 0, r, 0, 0),      // E02
      m3(0, ir, 0, -ir, 0, 0, 0, 0, 0),   // E10
      m3(0, 0, 0, 0, 1, 0, 0, 0, 0),      // E11
      m3(0, 0, 0, 0, 0, r, 0, r, 0),      // E12
      m3(0, 0, ir, 0, 0, 0, -ir, 0, 0),   // E20
      m3(0, 0, 0, 0, 0, ir, 0, -ir, 0),   // E21
      m3(0, 0, 0, 0, 0, 0, 0, 0, 1),      // E22
  };
}

// --- rotation relations among kernels --------------------------------------

inline ComplexMatrix rot2(double alpha) {
  ComplexMatrix r(2, 2);
  r << std::cos(alpha), -std::sin(alpha),
       std::sin(alpha), std::cos(alpha);
  return r;
}

inline std::array<ComplexMatrix, 5> tetrahedron_rotations() {
  return {
      m3(-1, 0, 0, 0, 1, 0, 0, 0, -1),  // R0
      m3(0, 1, 0, 0, 0, 1, 1, 0, 0),    // R1
      m3(0, 1, 0, 0, 0, -1, -1, 0, 0),  // R2
      m3(0, 0, -1, -1, 0, 0, 0, 1, 0),  // R3
      m3(0, 0, 1, -1, 0, 0, 0, -1, 0),  // R4
  };
}

// W_target = R W_source R†  (R already adjointed where the listing uses R†).
struct KernelRelation {
  int tj, tk;  // target (j,k)
  int sj, sk;  // source (j,k)
  ComplexMatrix r;
};

inline std::vector<KernelRelation> tetrahedron_relations() {
  const auto rot = tetrahedron_rotations();
  auto dag = [](const ComplexMatrix& m) { return ComplexMatrix(m.adjoint()); };
  return {
      {0, 0, 3, 3, rot[4]},      {1, 1, 3, 3, dag(rot[2])},
      {2, 2, 3, 3, rot[3]},      {0, 2, 0, 1, rot[1]},
      {0, 3, 0, 1, rot[3]},      {1, 2, 0, 1, rot[4]},
      {1, 3, 0, 1, rot[2]},      {2, 3, 0, 1, rot[0]},
      {2, 0, 1, 0, dag(rot[3])}, {2, 1, 1, 0, dag(rot[1])},
      {3, 0, 1, 0, rot[3]},      {3, 1, 1, 0, rot[2]},
      {3, 2, 1, 0, rot[0]},
  };
}

inline std::vector<KernelRelation> triangle_relations() {
  using std::numbers::pi;
  return {
      {1, 1, 0, 0, rot2(-pi / 3)},
      {2, 2, 0, 0, rot2(pi / 3)},
      {0, 1, 1, 2, rot2(pi / 3)},
      {0, 2, 1, 2, rot2(-pi / 3)},
  };
}

// --- published convergence and spectrum tables -----------------------------

inline const std::vector<int>& table1_m() {
  static const std::vector<int> m = {3,  4,  5,  6,  7,  8,  9,  10, 15,
                                     20, 30, 40, 50, 60, 70, 80, 90, 100};
  return m;
}

struct Table1Columns {
  std::vector<double> N;
  std::vector<double> C;
};

// State (1, -i)/sqrt(2).
inline Table1Columns table1_pure() {
  return {{0.3035, 0.1875, 0.2595, 0.2388, 0.2490, 0.2263, 0.2449, 0.2387,
           0.2409, 0.2367, 0.2387, 0.2382, 0.2387, 0.2385, 0.2387, 0.2386,
           0.2387, 0.2386},
          {0.6439, 0.5303, 0.7514, 0.7618, 0.7955, 0.7651, 0.8194, 0.8221,
           0.8523, 0.8575, 0.8759, 0.8807, 0.8858, 0.8877, 0.8900, 0.8910,
           0.8923, 0.8929}};
}

// State (1/3) [[1, i], [-i, 2]].
inline Table1Columns table1_mixed() {
  return {{0.2769, 0.1250, 0.1921, 0.1840, 0.1770, 0.1587, 0.1713, 0.1686,
           0.1654, 0.1618, 0.1631, 0.1623, 0.1627, 0.1624, 0.1626, 0.1624,
           0.1625, 0.1624},
          {0.5078, 0.4124, 0.6091, 0.6257, 0.6569, 0.6523, 0.6822, 0.6798,
           0.7144, 0.7239, 0.7380, 0.7443, 0.7483, 0.7507, 0.7525, 0.7538,
           0.7548, 0.7556}};
}

struct Table2Row {
  double kappa;
  int m;
  double lambda1;
  double lambda2;
};

// Eigenvalue pairs of the Gaussian qubit states. The published lambda1 at
// (kappa = 1/2, m = 21) reads 0.997449, which contradicts the unit trace of
// the state (the printed pair sums to 0.99995895, yet lambda1 + lambda2 = 1
// holds exactly by construction); its own lambda2 pins the corrected value
// 1 - 0.00250995 = 0.99749005 used here.
inline const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = {
      {0.5, 3, 0.935639, 0.0643606},  {0.5, 5, 0.865239, 0.134761},
      {0.5, 7, 0.949816, 0.0501843},  {0.5, 9, 0.977093, 0.0229066},
      {0.5, 11, 0.987222, 0.0127781}, {0.5, 21, 0.99749005, 0.00250995},
      {1.0, 3, 0.928317, 0.0716833},  {1.0, 5, 0.949233, 0.0507668},
      {1.0, 7, 0.976296, 0.023707},   {1.0, 9, 0.986562, 0.0134375},
      {1.0, 11, 0.991348, 0.0086524}, {1.0, 21, 0.997774, 0.00222598},
  };
  return rows;
}

// The two reference qubit states of the convergence table.
inline ComplexMatrix pure_state_rho() {
  ComplexVector psi(2);
  psi << 1.0, ComplexScalar(0, -1);
  psi /= std::sqrt(2.0);
  return psi * psi.adjoint();
}

inline ComplexMatrix mixed_state_rho() {
  ComplexMatrix rho(2, 2);
  rho << 1.0, ComplexScalar(0, 1), ComplexScalar(0, -1), 2.0;
  return rho / 3.0;
}

}  // namespace qfix
