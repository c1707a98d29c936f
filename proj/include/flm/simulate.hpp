#pragma once

#include <string>
#include <utility>

#include "flm/grid.hpp"
#include "flm/rng.hpp"

namespace flm {

/// Slope functions used throughout the simulation study. Rho0 is the zero
/// function, Rho1 a three-mode sine mixture, Rho2 a cubed sine that no finite
/// set of Brownian eigenfunctions spans.
enum class CoefficientKind { Rho0, Rho1, Rho2 };

CoefficientKind coefficient_kind_from_string(const std::string& s);
std::string to_string(CoefficientKind kind);

FunctionalSample coefficient_function(CoefficientKind kind, const GridPtr& grid);

/// Standard Brownian path on the grid, generated by exact Gaussian
/// increments: values[0] = 0 and increment variance equals the grid spacing.
FunctionalSample brownian_sample(const GridPtr& grid, Rng& rng);

/// j-th eigenvalue of the Brownian covariance operator, 4/((2j-1)pi)^2.
double brownian_eigenvalue(int j);

/// (eigenvalue, eigenfunction) pair of the Brownian covariance operator,
/// with the eigenfunction sqrt(2) sin((2j-1) pi t / 2) sampled on the grid.
std::pair<double, FunctionalSample> brownian_eigenelement(int j, const GridPtr& grid);

/// min(s, t) kernel matrix on the grid.
Eigen::MatrixXd brownian_covariance(const Grid& grid);

/// Draws n Brownian regressors and responses y_i = <rho, x_i> + eps_i with
/// eps_i iid N(0, sigma_eps^2).
Dataset generate_dataset(Eigen::Index n, const FunctionalSample& rho,
                         double sigma_eps, Rng& rng);

/// Noise scale realizing a target signal-to-noise ratio for Brownian
/// regressors: sigma^2 = (1 - snr)/snr * Var(<X, rho>), with the signal
/// variance computed by double trapezoid quadrature of the min(s,t) kernel.
double snr_sigma(const FunctionalSample& rho, double snr);

}  // namespace flm
