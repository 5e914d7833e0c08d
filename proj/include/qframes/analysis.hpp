#pragma once

// State-analysis functionals on Wigner tables: the negative-volume fraction
// N_m, the off-diagonal coherence C_m, their convergence over the regular
// m-vertex frames, and the Gaussian qubit states synthesized from a wrapped
// 2-D Gaussian coefficient table.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qframes/frames.hpp"
#include "qframes/matrix.hpp"
#include "qframes/opframes.hpp"

namespace qframes {

// Hermitian, unit trace, positive semidefinite (up to -1e-10 eigenvalue
// slack). Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho, double eig_slack = 1e-10)
      : rho_(require_hermitian(rho, kInputTol, "DensityMatrix")) {
    if (std::abs(rho_.trace().real() - 1.0) > 1e-10 ||
        std::abs(rho_.trace().imag()) > 1e-10) {
      throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_,
                                                    Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -eig_slack) {
      throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
  }

  static DensityMatrix pure(const ComplexVector& psi) {
    const double n2 = psi.squaredNorm();
    if (n2 <= 0) throw std::invalid_argument("DensityMatrix: zero vector");
    return DensityMatrix(ComplexMatrix(psi * psi.adjoint() / n2));
  }

  const ComplexMatrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }

 private:
  ComplexMatrix rho_;
};

// N_m = sum(|W| - W) / (2 m^2 max|W|); zero exactly when no entry is
// negative. Undefined on the all-zero table.
inline double negativity(const WignerTable& t) {
  const double peak = t.cwiseAbs().maxCoeff();
  if (peak == 0.0) {
    throw std::invalid_argument("negativity: all-zero table");
  }
  const double neg = (t.cwiseAbs() - t).sum();
  const double m = static_cast<double>(t.rows());
  return neg / (2.0 * m * m * peak);
}

// C_m = (1/m) sum_{j != k} |W(j,k)|.
inline double coherence(const WignerTable& t) {
  const double all = t.cwiseAbs().sum();
  const double diag = t.diagonal().cwiseAbs().sum();
  return (all - diag) / static_cast<double>(t.rows());
}

struct ConvergenceRecord {
  std::vector<int> m_values;
  std::vector<double> N_values;
  std::vector<double> C_values;
  double N_limit = 0.0;
  double C_limit = 0.0;
  // Max spread of either functional over the last three m entries.
  double limit_spread = 0.0;
};

namespace detail {
inline double tail_spread(const std::vector<double>& v) {
  const std::size_t n = v.size();
  const std::size_t take = n < 3 ? n : 3;
  double lo = v[n - take], hi = v[n - take];
  for (std::size_t i = n - take; i < n; ++i) {
    lo = std::min(lo, v[i]);
    hi = std::max(hi, v[i]);
  }
  return hi - lo;
}
}  // namespace detail

// Evaluates N_m and C_m of a qubit state over the regular m-vertex frames.
// The limit estimate is the value at the largest m; no extrapolation.
inline ConvergenceRecord convergence_scan(const DensityMatrix& rho,
                                          const std::vector<int>& m_list) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("convergence_scan: qubit states only");
  }
  if (m_list.empty()) {
    throw std::invalid_argument("convergence_scan: empty m list");
  }
  ConvergenceRecord rec;
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    const int m = m_list[i];
    if (m < 3 || (i > 0 && m <= m_list[i - 1])) {
      throw std::invalid_argument(
          "convergence_scan: m list must be ascending with m >= 3");
    }
    const HermitianFrame w =
        build_hermitian_frame(standard_frame(FrameKind::polygon, m));
    const WignerTable t = wigner(rho.matrix(), w);
    rec.m_values.push_back(m);
    rec.N_values.push_back(negativity(t));
    rec.C_values.push_back(coherence(t));
  }
  rec.N_limit = rec.N_values.back();
  rec.C_limit = rec.C_values.back();
  rec.limit_spread = std::max(detail::tail_spread(rec.N_values),
                              detail::tail_spread(rec.C_values));
  return rec;
}

// f_kappa(j,k) = e^{-kappa (j^2 + k^2)} on the centered grid {-l..l}^2,
// l = (m-1)/2; row index j+l.
inline RealMatrix gaussian_2d(int m, double kappa) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("gaussian_2d: m must be odd and >= 3");
  }
  const int l = (m - 1) / 2;
  RealMatrix f(m, m);
  for (int j = -l; j <= l; ++j) {
    for (int k = -l; k <= l; ++k) {
      f(j + l, k + l) = std::exp(-kappa * (j * j + k * k));
    }
  }
  return f;
}

// Trace-normalized synthesis of the Gaussian coefficient table over the
// regular m-frame kernels with wrapped indices. Positivity is reported, not
// assumed: callers must check `positive` before treating rho as a state.
struct GaussianState {
  ComplexMatrix rho;             // Hermitian, unit trace
  std::vector<double> spectrum;  // descending
  bool positive = false;         // min eigenvalue >= -1e-10
};

inline std::vector<double> spectrum(const ComplexMatrix& A);

inline GaussianState gaussian_state(int m, double kappa) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("gaussian_state: m must be odd and >= 3");
  }
  if (!(kappa > 0)) {
    throw std::invalid_argument("gaussian_state: kappa must be positive");
  }
  const HermitianFrame w =
      build_hermitian_frame(standard_frame(FrameKind::polygon, m));
  const int l = (m - 1) / 2;
  const RealMatrix f = gaussian_2d(m, kappa);
  WignerTable coeffs = WignerTable::Zero(m, m);
  for (int j = -l; j <= l; ++j) {
    for (int k = -l; k <= l; ++k) {
      coeffs(((j % m) + m) % m, ((k % m) + m) % m) += f(j + l, k + l);
    }
  }
  ComplexMatrix raw = reconstruct(coeffs, w);
  const double tr = raw.trace().real();
  if (!(tr > 0)) {
    throw NumericalError("gaussian_state: non-positive trace");
  }
  GaussianState out;
  out.rho = raw / tr;
  out.spectrum = spectrum(out.rho);
  out.positive = out.spectrum.back() >= -1e-10;
  return out;
}

// Real eigenvalues of a Hermitian matrix, descending.
inline std::vector<double> spectrum(const ComplexMatrix& A) {
  const ComplexMatrix a = require_hermitian(A, kInputTol, "spectrum");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
  const RealVector& ev = es.eigenvalues();  // ascending
  std::vector<double> out(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out[static_cast<std::size_t>(i)] = ev(ev.size() - 1 - i);
  }
  return out;
}

}  // namespace qframes
