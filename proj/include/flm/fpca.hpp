#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flm/grid.hpp"

namespace flm {

enum class RegKind { Simple, Ridge };

RegKind reg_kind_from_string(const std::string& s);
std::string to_string(RegKind kind);

/// Regularized reciprocal used as a spectral weight: Simple is 1/x above the
/// threshold c_n and zero below it; Ridge shifts the reciprocal by alpha_n.
struct RegularizationScheme {
  RegKind kind = RegKind::Simple;
  double c_n = 0.0;
  double alpha_n = 0.0;

  double fn(double x) const;

  static RegularizationScheme simple(double c_n);
  static RegularizationScheme ridge(double c_n, double alpha_n);
};

/// Retained spectrum of an empirical covariance operator. Eigenfunction
/// columns are orthonormal in the quadrature inner product, eigenvalues are
/// strictly decreasing, and gaps[j] is the spectral gap used by the
/// truncation rule (for the last retained index only the backward gap is
/// available).
struct Eigensystem {
  GridPtr grid;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenfunctions;  // grid->size() rows, one column per mode
  Eigen::VectorXd gaps;
  std::vector<std::string> warnings;

  Eigen::Index count() const { return eigenvalues.size(); }
  FunctionalSample eigenfunction(Eigen::Index j) const;
};

/// Uncentered second-moment kernel (1/n) sum_i x_i(s) x_i(t).
Eigen::MatrixXd empirical_covariance(const Dataset& data);

/// Solves the quadrature-weighted operator eigenproblem by symmetrizing the
/// kernel with square-root weights, so that a standard symmetric solver
/// yields functions orthonormal in the L2 inner product. Eigenvalues at or
/// below floor_rel * (largest eigenvalue) are dropped; near-ties produce a
/// warning, exact ties are filtered.
Eigensystem eigensolve(const Eigen::MatrixXd& kernel, const GridPtr& grid,
                       double floor_rel = 1e-12);

/// Largest p with eigenvalue[p] + gap[p]/2 >= c_n (1-based count). Throws
/// PipelineError("truncation", ...) when no index qualifies.
int truncation_count(const Eigensystem& eig, double c_n);

/// Chooses how many leading modes a fit keeps: by the threshold rule applied
/// to the scheme's c_n, or pinned to a fixed count.
struct Truncation {
  std::optional<int> fixed_k;

  static Truncation from_threshold() { return {}; }
  static Truncation fixed(int k) { return {k}; }
};

/// Functional principal components regression fit: slope coordinates on the
/// retained eigenfunctions, the spectrum behind them, and the noise scale
/// (supplied or estimated from truncated-fit residuals).
struct FpcaFit {
  Eigen::Index n = 0;
  int k_hat = 0;
  Eigen::VectorXd rho_coords;
  Eigensystem eig;
  RegularizationScheme scheme;
  double a_n = 0.0;
  double sigma_eps = 0.0;
  bool sigma_estimated = false;

  /// Slope estimate as a function on the grid.
  FunctionalSample reconstruct() const;
};

FpcaFit fpca_fit(const Dataset& data, const Eigensystem& eig,
                 const RegularizationScheme& scheme, double a_n,
                 std::optional<double> sigma_known,
                 const Truncation& trunc = Truncation::from_threshold());

/// Convenience overload that decomposes the empirical covariance itself.
FpcaFit fpca_fit(const Dataset& data, const RegularizationScheme& scheme,
                 double a_n, std::optional<double> sigma_known,
                 const Truncation& trunc = Truncation::from_threshold());

/// Roughened standard deviation of the fitted projection in direction b:
/// sqrt(sum_j lambda_j f(lambda_j)^2 b_j^2) + a_n.
double roughened_sd(const FpcaFit& fit, const Eigen::VectorXd& b);

/// <slope estimate, x> through the retained modes.
double predict(const FpcaFit& fit, const FunctionalSample& x);

}  // namespace flm
