#pragma once

// Finite frames of C^d: construction, frame bounds, canonical tightening,
// the built-in frame families (polygon, mercedes, tetrahedron, icosahedron,
// orthonormal), and the Naimark embedding of a tight frame into the larger
// space where it becomes the shadow of an orthonormal basis.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qframes/matrix.hpp"

namespace qframes {

// An ordered family of vectors v_0..v_r of C^d, stored as the columns of a
// d x (r+1) matrix. Tightness is measured against sum_k |v_k><v_k| = I.
class Frame {
 public:
  explicit Frame(ComplexMatrix columns, double tight_tol = kTightTol)
      : vecs_(std::move(columns)), tight_tol_(tight_tol) {
    if (vecs_.rows() < 1 || vecs_.cols() < 1) {
      throw std::invalid_argument("Frame: empty vector family");
    }
    if (tight_tol_ < 0) {
      throw std::invalid_argument("Frame: negative tight_tol");
    }
  }

  static Frame from_vectors(const std::vector<ComplexVector>& vs,
                            double tight_tol = kTightTol) {
    if (vs.empty()) throw std::invalid_argument("Frame: empty vector family");
    ComplexMatrix cols(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (vs[k].size() != cols.rows()) {
        throw std::invalid_argument("Frame: vectors of mixed dimension");
      }
      cols.col(static_cast<Eigen::Index>(k)) = vs[k];
    }
    return Frame(std::move(cols), tight_tol);
  }

  int dim() const { return static_cast<int>(vecs_.rows()); }
  int count() const { return static_cast<int>(vecs_.cols()); }
  ComplexVector vector(int k) const { return vecs_.col(k); }
  const ComplexMatrix& columns() const { return vecs_; }
  double tight_tol() const { return tight_tol_; }

  // max |sum_k v_k v_k† - I|, entrywise.
  double tightness_defect() const {
    ComplexMatrix s = vecs_ * vecs_.adjoint();
    return max_abs(s - ComplexMatrix::Identity(dim(), dim()));
  }

  bool is_tight() const { return tightness_defect() <= tight_tol_; }

 private:
  ComplexMatrix vecs_;
  double tight_tol_;
};

inline void require_tight(const Frame& f, const char* what = "frame") {
  if (!f.is_tight()) {
    throw std::invalid_argument(std::string(what) + ": frame is not tight");
  }
}

// S = sum_k |v_k><v_k|.
inline ComplexMatrix frame_operator(const Frame& f) {
  ComplexMatrix s = f.columns() * f.columns().adjoint();
  return 0.5 * (s + s.adjoint());
}

// (lambda_min(S), lambda_max(S)). The family is a frame iff alpha > 0.
inline std::pair<double, double> frame_bounds(const Frame& f) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(frame_operator(f),
                                                  Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

// v_k -> S^{-1/2} v_k. Rejects non-spanning families (eigenvalue floor).
inline Frame canonical_tight_frame(const Frame& f) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(frame_operator(f));
  const RealVector& ev = es.eigenvalues();
  if (ev(0) <= kEigenvalueFloor) {
    throw std::invalid_argument(
        "canonical_tight_frame: not a frame (frame operator is singular)");
  }
  ComplexMatrix inv_sqrt = es.eigenvectors() *
                           ev.cwiseInverse().cwiseSqrt().asDiagonal() *
                           es.eigenvectors().adjoint();
  return Frame(inv_sqrt * f.columns(), f.tight_tol());
}

enum class FrameKind { polygon, tetrahedron, icosahedron, orthonormal, mercedes };

// The built-in frame families. `param` is the vertex count for polygon and
// the dimension for orthonormal; the other kinds ignore it.
inline Frame standard_frame(FrameKind kind, int param = 0) {
  using std::numbers::pi;
  switch (kind) {
    case FrameKind::polygon: {
      if (param < 3) {
        throw std::invalid_argument("standard_frame: polygon needs m >= 3");
      }
      ComplexMatrix cols(2, param);
      const double scale = std::sqrt(2.0 / param);
      for (int k = 0; k < param; ++k) {
        const double t = 2.0 * pi * k / param;
        cols(0, k) = scale * std::cos(t);
        cols(1, k) = scale * std::sin(t);
      }
      return Frame(std::move(cols));
    }
    case FrameKind::mercedes: {
      // Same geometry as polygon(3), written with exact radicals.
      const double a = std::sqrt(2.0 / 3.0);
      const double b = 1.0 / std::sqrt(6.0);
      const double c = 1.0 / std::sqrt(2.0);
      ComplexMatrix cols(2, 3);
      cols << a, -b, -b,
              0, c, -c;
      return Frame(std::move(cols));
    }
    case FrameKind::tetrahedron: {
      ComplexMatrix cols(3, 4);
      cols << -1, 1, 1, -1,
              1, -1, 1, -1,
              1, 1, -1, -1;
      return Frame(0.5 * cols);
    }
    case FrameKind::icosahedron: {
      const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
      ComplexMatrix cols(3, 6);
      cols << 1, -1, -tau, 0, tau, 0,
              tau, tau, 0, -1, 0, 1,
              0, 0, 1, tau, 1, tau;
      return Frame(cols / std::sqrt(5.0 + std::sqrt(5.0)));
    }
    case FrameKind::orthonormal: {
      if (param < 1) {
        throw std::invalid_argument("standard_frame: orthonormal needs d >= 1");
      }
      return Frame(ComplexMatrix::Identity(param, param));
    }
  }
  throw std::invalid_argument("standard_frame: unknown kind");
}

// A tight frame realized as the orthogonal projection of the canonical basis
// of C^{m+1}: columns of `isometry` are the orthonormal images w_k of the
// basis of C^d, and `projector` is P = sum_k |w_k><w_k|, which maps the
// canonical basis vector eps_k onto the embedded frame vector.
struct NaimarkEmbedding {
  ComplexMatrix isometry;   // (m+1) x d
  ComplexMatrix projector;  // (m+1) x (m+1)

  ComplexVector embed(const ComplexVector& x) const { return isometry * x; }
};

inline NaimarkEmbedding naimark_embedding(const Frame& f) {
  require_tight(f, "naimark_embedding");
  NaimarkEmbedding e;
  e.isometry = f.columns().adjoint();
  e.projector = e.isometry * e.isometry.adjoint();
  return e;
}

// Analysis coefficients c_k = <v_k|x> of the canonical representation
// x = sum_k c_k v_k; for a tight frame this coefficient vector has minimal
// Euclidean norm among all vectors synthesizing x.
inline ComplexVector analyze(const Frame& f, const ComplexVector& x) {
  if (x.size() != f.dim()) {
    throw std::invalid_argument("analyze: vector dimension mismatch");
  }
  require_tight(f, "analyze");
  return f.columns().adjoint() * x;
}

inline ComplexVector synthesize(const Frame& f, const ComplexVector& coeffs) {
  if (coeffs.size() != f.count()) {
    throw std::invalid_argument("synthesize: coefficient count mismatch");
  }
  return f.columns() * coeffs;
}

}  // namespace qframes
