#pragma once

#include <Eigen/Dense>

#include "flm/fpca.hpp"
#include "flm/rng.hpp"

namespace flm {

/// Ratio objective maximized over the unit ball: the linear form slope.b
/// over the roughened scale sqrt(sum_j scale_j^2 b_j^2) + denom_floor. The
/// positive floor keeps the ratio finite everywhere; the gradient is still
/// undefined at b = 0.
struct FractionalObjective {
  Eigen::VectorXd slope;  // numerator coefficients
  Eigen::VectorXd scale;  // per-coordinate standard-deviation weights, > 0
  double denom_floor = 0.0;

  FractionalObjective(Eigen::VectorXd slope, Eigen::VectorXd scale,
                      double denom_floor);

  Eigen::Index dim() const { return slope.size(); }

  double value(const Eigen::VectorXd& b) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& b) const;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& b) const;
};

enum class BallParam { Cartesian, Spherical };

struct OptimizerSettings {
  int starts = 16;
  int max_iters = 500;
  double grad_tol = 1e-6;
  BallParam parameterization = BallParam::Cartesian;
};

struct OptimizerReport {
  double best_value = 0.0;
  Eigen::VectorXd best_point;
  int starts = 0;
  int converged_starts = 0;
  double grad_norm_at_best = 0.0;
};

/// Radius/angles to Euclidean coordinates. Angles 1..k-2 live in [0, pi],
/// the last angle in [0, 2pi); the output norm equals r. For dimension one
/// the map is just b = (r).
Eigen::VectorXd spherical_to_cartesian(double r, const Eigen::VectorXd& angles);

/// Multistart ascent over the unit ball. Start 0 is the normalized slope
/// direction (when nonzero); the rest alternate uniform sphere points with
/// interior points (sphere point scaled by U^(1/k)). Each start is refined
/// by projected gradient ascent with backtracking line search until the
/// projected gradient norm falls below grad_tol.
OptimizerReport maximize(const FractionalObjective& obj,
                         const OptimizerSettings& settings, Rng& rng);

struct StatisticResult {
  double w_n = 0.0;
  OptimizerReport report;
};

/// Small-uniform statistic of a fit: sqrt(n) / (sigma * beta_n) times the
/// maximum of the fractional objective built from the fit's coordinates and
/// spectral weights. Coordinates whose spectral weight vanishes (eigenvalue
/// below the scheme threshold) contribute nothing to either side of the
/// ratio and are dropped before optimization.
StatisticResult small_uniform_statistic(const FpcaFit& fit, double beta_n,
                                        const OptimizerSettings& settings,
                                        Rng& rng);

}  // namespace flm
