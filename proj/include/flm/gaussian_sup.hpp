#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "flm/rng.hpp"

namespace flm {

/// Covariance function of the limiting Gaussian process, indexed by unit-ball
/// coordinate vectors. Weights are lambda_j * fvals_j^2; a_n is the additive
/// denominator floor.
struct GpKernel {
  Eigen::VectorXd lambda;
  Eigen::VectorXd fvals;
  double a_n = 0.0;

  Eigen::Index dim() const { return lambda.size(); }
  double eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
};

/// Uniform boundary points (Gaussian draws normalized) followed by interior
/// points (boundary draw scaled by U^(1/dim)).
std::vector<Eigen::VectorXd> sample_index_points(int dim, int n_boundary,
                                                 int n_interior, Rng& rng);

struct SupSimResult {
  std::vector<double> samples;  // sorted ascending, before beta normalization
  std::uint64_t seed = 0;
  int reps = 0;
  int points = 0;
  double jitter = 0.0;       // diagonal jitter that made the factorization pass
  bool eigen_clipped = false;  // fell back to eigenvalue clipping
};

/// Simulates sup-of-path draws: builds the covariance matrix on the fixed
/// index points, factorizes it once (triangular factorization with an
/// escalating jitter ladder, then eigenvalue clipping at zero as a
/// fallback), and per repetition records the maximum coordinate of one
/// multivariate normal draw. Repetitions run in fixed-size batches with
/// seeds derived per batch, so the sorted output is identical for any
/// thread count.
SupSimResult simulate_sup(const GpKernel& kernel,
                          const std::vector<Eigen::VectorXd>& points, int reps,
                          std::uint64_t seed, int threads = 1);

/// Nearest-rank empirical (1 - alpha) quantile of samples / beta_n.
double sup_quantile(const SupSimResult& result, double beta_n, double alpha);

}  // namespace flm
