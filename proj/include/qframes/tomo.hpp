#pragma once

// Measurement-oriented structure of frame kernels. rotation_cover discovers
// how the kernels W_jk of a group-generated frame reduce, via conjugation by
// group rotations (and signs), to a small set of representatives — the
// number of distinct experimental setups needed to measure a full Wigner
// table. noise_experiment quantifies the redundancy payoff: perturbing all
// frame coefficients with i.i.d. uniform noise hurts the reconstruction
// less than the same perturbation of an orthogonal-basis expansion.

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qframes/analysis.hpp"
#include "qframes/frames.hpp"
#include "qframes/matrix.hpp"
#include "qframes/opframes.hpp"
#include "qframes/weylref.hpp"

namespace qframes {

// W_target = factor * R W_source R†, factor in {+1, -1}.
struct RotationRelation {
  std::pair<int, int> target;
  std::pair<int, int> source;
  ComplexMatrix rotation;
  double factor = 1.0;
};

struct RotationCover {
  std::vector<RotationRelation> relations;
  std::vector<std::pair<int, int>> representatives;
  int num_setups = 0;
};

namespace detail {

// Closure of a finite set of unitaries under multiplication (hence under
// inverses). Capped; overflowing the cap means the input did not generate a
// small finite group.
inline std::vector<ComplexMatrix> group_closure(
    const std::vector<ComplexMatrix>& gens, std::size_t cap = 4096) {
  const int d = static_cast<int>(gens.front().rows());
  std::vector<ComplexMatrix> elems;
  elems.push_back(ComplexMatrix::Identity(d, d));
  auto contains = [&](const ComplexMatrix& m) {
    for (const auto& e : elems) {
      if (max_abs(e - m) <= 1e-9) return true;
    }
    return false;
  };
  for (const auto& g : gens) {
    if (!contains(g)) elems.push_back(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = elems.size();
    for (std::size_t i = 0; i < n && elems.size() < cap; ++i) {
      for (std::size_t j = 0; j < n && elems.size() < cap; ++j) {
        ComplexMatrix prod = elems[i] * elems[j];
        if (!contains(prod)) {
          elems.push_back(std::move(prod));
          grew = true;
        }
      }
    }
    if (elems.size() >= cap) {
      throw std::invalid_argument(
          "rotation_cover: group closure exceeds cap; not a small finite "
          "group");
    }
  }
  return elems;
}

}  // namespace detail

// Builds rotation relations reducing every kernel W_jk of the frame to a
// small set of representatives. Each supplied group element must map every
// frame vector onto another frame vector up to a unimodular phase.
inline RotationCover rotation_cover(const Frame& frame,
                                    const std::vector<ComplexMatrix>& group) {
  require_tight(frame, "rotation_cover");
  if (group.empty()) {
    throw std::invalid_argument("rotation_cover: empty group");
  }
  for (std::size_t g = 0; g < group.size(); ++g) {
    if (group[g].rows() != frame.dim() || group[g].cols() != frame.dim()) {
      throw std::invalid_argument("rotation_cover: group element " +
                                  std::to_string(g) +
                                  " has wrong dimension");
    }
    require_unitary(group[g], kInputTol, "rotation_cover: group element");
    // Phase-permutation action check.
    for (int j = 0; j < frame.count(); ++j) {
      const ComplexVector image = group[g] * frame.vector(j);
      bool matched = false;
      for (int p = 0; p < frame.count() && !matched; ++p) {
        const ComplexVector vp = frame.vector(p);
        const ComplexScalar phase =
            vp.dot(image) / vp.squaredNorm();  // <v_p|image>/|v_p|^2
        if (std::abs(std::abs(phase) - 1.0) <= 1e-8 &&
            (image - phase * vp).cwiseAbs().maxCoeff() <= 1e-10) {
          matched = true;
        }
      }
      if (!matched) {
        std::ostringstream msg;
        msg << "rotation_cover: group element " << g
            << " does not map frame vector " << j
            << " onto the frame (up to phase)";
        throw std::invalid_argument(msg.str());
      }
    }
  }

  const std::vector<ComplexMatrix> closure = detail::group_closure(group);
  const HermitianFrame w = build_hermitian_frame(frame);
  const int n = w.count();
  std::vector<ComplexMatrix> kernels;
  kernels.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) kernels.push_back(w.matrix(j, k));
  }
  auto kernel = [&](std::pair<int, int> jk) -> const ComplexMatrix& {
    return kernels[static_cast<std::size_t>(jk.first) * n + jk.second];
  };

  RotationCover cover;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const std::pair<int, int> target{j, k};
      bool related = false;
      for (const auto& rep : cover.representatives) {
        for (const auto& r : closure) {
          const ComplexMatrix conj = r * kernel(rep) * r.adjoint();
          if (max_abs(kernel(target) - conj) <= 1e-12) {
            cover.relations.push_back({target, rep, r, +1.0});
            related = true;
          } else if (max_abs(kernel(target) + conj) <= 1e-12) {
            cover.relations.push_back({target, rep, r, -1.0});
            related = true;
          }
          if (related) break;
        }
        if (related) break;
      }
      if (!related) cover.representatives.push_back(target);
    }
  }
  cover.num_setups = static_cast<int>(cover.representatives.size());
  return cover;
}

struct NoiseExperimentReport {
  double epsilon = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> frame_errors;
  std::vector<double> basis_errors;
  double mean_frame = 0.0;
  double mean_basis = 0.0;
  double stderr_frame = 0.0;
  double stderr_basis = 0.0;
  // Fixed algorithm identifier for reproducibility.
  std::string rng = "mt19937_64/splitmix64-subseed/53-bit-uniform";
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform on (-eps, eps) from the top 53 bits of the engine output; avoids
// std::uniform_real_distribution so streams are identical across standard
// libraries.
inline double uniform_pm(std::mt19937_64& eng, double eps) {
  const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return eps * (2.0 * u - 1.0);
}

inline std::pair<double, double> mean_and_stderr(
    const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var = xs.size() > 1 ? var / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

}  // namespace detail

// Monte-Carlo comparison of coefficient-noise sensitivity: per trial, every
// frame coefficient Tr(rho W_jk) gets an independent uniform(-eps,eps)
// perturbation and the Hilbert-Schmidt reconstruction error is recorded;
// likewise for the displaced-parity basis coefficients (1/d) Tr(rho Pi).
// Trials are sub-seeded by counter, so the report is reproducible and
// parallel evaluation order cannot change it.
inline NoiseExperimentReport noise_experiment(const DensityMatrix& rho,
                                              const HermitianFrame& w,
                                              double epsilon, int trials,
                                              std::uint64_t seed) {
  if (rho.dim() != w.dim()) {
    throw std::invalid_argument("noise_experiment: dimension mismatch");
  }
  if (w.dim() % 2 == 0) {
    throw std::invalid_argument(
        "noise_experiment: basis baseline needs odd dimension");
  }
  if (!(epsilon > 0)) {
    throw std::invalid_argument("noise_experiment: epsilon must be positive");
  }
  if (trials < 1) {
    throw std::invalid_argument("noise_experiment: trials must be >= 1");
  }

  const int d = w.dim();
  const int n = w.count();
  const OddDimension dim(d);
  const PhasePointOperators ops = phase_point_operators(dim);

  // Exact coefficients and kernels, fixed across trials.
  const WignerTable table = wigner(rho.matrix(), w);
  std::vector<ComplexMatrix> wk;
  wk.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) wk.push_back(w.matrix(j, k));
  }
  std::vector<double> pi_coeff(static_cast<std::size_t>(d) * d);
  for (std::size_t i = 0; i < pi_coeff.size(); ++i) {
    pi_coeff[i] = (rho.matrix() * ops.Pi[i]).trace().real() / d;
  }

  NoiseExperimentReport rep;
  rep.epsilon = epsilon;
  rep.trials = trials;
  rep.seed = seed;
  rep.frame_errors.reserve(static_cast<std::size_t>(trials));
  rep.basis_errors.reserve(static_cast<std::size_t>(trials));

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 eng(
        detail::splitmix64(seed ^ detail::splitmix64(static_cast<std::uint64_t>(t))));
    ComplexMatrix frame_rec = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double lambda = detail::uniform_pm(eng, epsilon);
        frame_rec +=
            (table(j, k) + lambda) * wk[static_cast<std::size_t>(j) * n + k];
      }
    }
    ComplexMatrix basis_rec = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < pi_coeff.size(); ++i) {
      const double mu = detail::uniform_pm(eng, epsilon);
      basis_rec += (pi_coeff[i] + mu) * ops.Pi[i];
    }
    rep.frame_errors.push_back(hs_norm(rho.matrix() - frame_rec));
    rep.basis_errors.push_back(hs_norm(rho.matrix() - basis_rec));
  }

  std::tie(rep.mean_frame, rep.stderr_frame) =
      detail::mean_and_stderr(rep.frame_errors);
  std::tie(rep.mean_basis, rep.stderr_basis) =
      detail::mean_and_stderr(rep.basis_errors);
  return rep;
}

}  // namespace qframes
