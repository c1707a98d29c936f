#include "flm/simulate.hpp"

#include <cmath>
#include <numbers>

#include "flm/errors.hpp"

namespace flm {

namespace {
constexpr double kPi = std::numbers::pi;
}

CoefficientKind coefficient_kind_from_string(const std::string& s) {
  if (s == "rho0") return CoefficientKind::Rho0;
  if (s == "rho1") return CoefficientKind::Rho1;
  if (s == "rho2") return CoefficientKind::Rho2;
  throw PipelineError("config", "unknown coefficient kind '" + s + "'");
}

std::string to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::Rho0: return "rho0";
    case CoefficientKind::Rho1: return "rho1";
    case CoefficientKind::Rho2: return "rho2";
  }
  return "rho0";
}

FunctionalSample coefficient_function(CoefficientKind kind, const GridPtr& grid) {
  const Eigen::VectorXd& t = grid->points();
  Eigen::VectorXd v(t.size());
  switch (kind) {
    case CoefficientKind::Rho0:
      v.setZero();
      break;
    case CoefficientKind::Rho1:
      for (Eigen::Index i = 0; i < t.size(); ++i)
        v[i] = std::sin(0.5 * kPi * t[i]) + 0.5 * std::sin(1.5 * kPi * t[i]) +
               0.25 * std::sin(2.5 * kPi * t[i]);
      break;
    case CoefficientKind::Rho2:
      for (Eigen::Index i = 0; i < t.size(); ++i) {
        const double s = std::sin(2.0 * kPi * t[i] * t[i] * t[i]);
        v[i] = s * s * s;
      }
      break;
  }
  return FunctionalSample(grid, std::move(v));
}

FunctionalSample brownian_sample(const GridPtr& grid, Rng& rng) {
  const Eigen::VectorXd& t = grid->points();
  Eigen::VectorXd v(t.size());
  std::normal_distribution<double> gauss(0.0, 1.0);
  v[0] = 0.0;
  for (Eigen::Index i = 1; i < t.size(); ++i)
    v[i] = v[i - 1] + std::sqrt(t[i] - t[i - 1]) * gauss(rng);
  return FunctionalSample(grid, std::move(v));
}

double brownian_eigenvalue(int j) {
  if (j < 1) throw PipelineError("config", "eigenvalue index must be positive");
  const double d = (2.0 * j - 1.0) * kPi;
  return 4.0 / (d * d);
}

std::pair<double, FunctionalSample> brownian_eigenelement(int j,
                                                          const GridPtr& grid) {
  const double lambda = brownian_eigenvalue(j);
  const Eigen::VectorXd& t = grid->points();
  Eigen::VectorXd v(t.size());
  const double freq = 0.5 * (2.0 * j - 1.0) * kPi;
  for (Eigen::Index i = 0; i < t.size(); ++i)
    v[i] = std::numbers::sqrt2 * std::sin(freq * t[i]);
  return {lambda, FunctionalSample(grid, std::move(v))};
}

Eigen::MatrixXd brownian_covariance(const Grid& grid) {
  const Eigen::VectorXd& t = grid.points();
  const Eigen::Index m = t.size();
  Eigen::MatrixXd k(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) k(i, j) = std::min(t[i], t[j]);
  return k;
}

Dataset generate_dataset(Eigen::Index n, const FunctionalSample& rho,
                         double sigma_eps, Rng& rng) {
  if (n < 2) throw PipelineError("dataset", "need at least two observations");
  if (!(sigma_eps >= 0.0) || !std::isfinite(sigma_eps))
    throw PipelineError("dataset", "noise scale must be finite and nonnegative");
  const GridPtr& grid = rho.grid_ptr();
  const Eigen::Index m = grid->size();
  Eigen::MatrixXd x(n, m);
  Eigen::VectorXd y(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    FunctionalSample path = brownian_sample(grid, rng);
    x.row(i) = path.values().transpose();
    y[i] = inner_product(rho, path) + sigma_eps * gauss(rng);
  }
  return Dataset(grid, std::move(x), std::move(y));
}

double snr_sigma(const FunctionalSample& rho, double snr) {
  if (!(snr > 0.0 && snr < 1.0))
    throw PipelineError("config", "snr must lie in (0, 1)");
  if (rho.is_zero())
    throw PipelineError("config",
                        "snr calibration undefined for a zero slope; "
                        "supply the noise scale directly");
  const Grid& grid = rho.grid();
  // Var(<X, rho>) by double trapezoid quadrature of the min(s,t) kernel.
  Eigen::VectorXd wr = grid.weights().cwiseProduct(rho.values());
  const double v = wr.dot(brownian_covariance(grid) * wr);
  return std::sqrt((1.0 - snr) / snr * v);
}

}  // namespace flm
