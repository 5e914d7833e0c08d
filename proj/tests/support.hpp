#pragma once

// Seeded generators shared by the test suites. Kept independent of the
// library internals: only public constructors are used.

#include <random>

#include "qframes/analysis.hpp"
#include "qframes/frames.hpp"
#include "qframes/matrix.hpp"

namespace qtest {

using qframes::ComplexMatrix;
using qframes::ComplexScalar;
using qframes::ComplexVector;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline ComplexMatrix random_matrix(std::mt19937_64& eng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = ComplexScalar(normal(eng), normal(eng));
    }
  }
  return m;
}

inline ComplexVector random_vector(std::mt19937_64& eng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = ComplexScalar(normal(eng), normal(eng));
  return v;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& eng, int dim) {
  ComplexMatrix g = random_matrix(eng, dim, dim);
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_psd(std::mt19937_64& eng, int dim) {
  ComplexMatrix g = random_matrix(eng, dim, dim);
  return g * g.adjoint();
}

inline qframes::DensityMatrix random_density(std::mt19937_64& eng, int dim) {
  ComplexMatrix p = random_psd(eng, dim);
  return qframes::DensityMatrix(ComplexMatrix(p / p.trace().real()));
}

// Random spanning set of C^d with `count` vectors, canonically tightened.
inline qframes::Frame random_tight_frame(std::mt19937_64& eng, int dim,
                                         int count) {
  return qframes::canonical_tight_frame(
      qframes::Frame(random_matrix(eng, dim, count)));
}

}  // namespace qtest
