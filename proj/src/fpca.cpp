#include "flm/fpca.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "flm/errors.hpp"

namespace flm {

RegKind reg_kind_from_string(const std::string& s) {
  if (s == "simple") return RegKind::Simple;
  if (s == "ridge") return RegKind::Ridge;
  throw PipelineError("config", "unknown regularization kind '" + s + "'");
}

std::string to_string(RegKind kind) {
  return kind == RegKind::Simple ? "simple" : "ridge";
}

double RegularizationScheme::fn(double x) const {
  if (x < c_n) return 0.0;
  return kind == RegKind::Simple ? 1.0 / x : 1.0 / (x + alpha_n);
}

RegularizationScheme RegularizationScheme::simple(double c_n) {
  if (!(c_n > 0.0)) throw PipelineError("config", "threshold c_n must be positive");
  return {RegKind::Simple, c_n, 0.0};
}

RegularizationScheme RegularizationScheme::ridge(double c_n, double alpha_n) {
  if (!(c_n > 0.0)) throw PipelineError("config", "threshold c_n must be positive");
  if (!(alpha_n > 0.0))
    throw PipelineError("config", "ridge shift alpha_n must be positive");
  return {RegKind::Ridge, c_n, alpha_n};
}

FunctionalSample Eigensystem::eigenfunction(Eigen::Index j) const {
  return FunctionalSample(grid, eigenfunctions.col(j));
}

Eigen::MatrixXd empirical_covariance(const Dataset& data) {
  const double n = static_cast<double>(data.n());
  return data.x.transpose() * data.x / n;
}

Eigensystem eigensolve(const Eigen::MatrixXd& kernel, const GridPtr& grid,
                       double floor_rel) {
  const Eigen::Index m = grid->size();
  if (kernel.rows() != m || kernel.cols() != m)
    throw PipelineError("eigensolve", "kernel does not match grid size");
  if (!kernel.allFinite())
    throw PipelineError("eigensolve", "non-finite kernel entries");
  if (!(floor_rel > 0.0))
    throw PipelineError("eigensolve", "eigenvalue floor must be positive");

  // Symmetrize with square-root quadrature weights so the ordinary symmetric
  // eigenproblem is equivalent to the weighted operator one and the mapped
  // eigenvectors come out orthonormal in the L2 inner product.
  const Eigen::VectorXd sqw = grid->weights().cwiseSqrt();
  Eigen::MatrixXd b = sqw.asDiagonal() * kernel * sqw.asDiagonal();
  b = 0.5 * (b + b.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success)
    throw PipelineError("eigensolve", "symmetric eigensolver failed");

  const Eigen::VectorXd& vals = solver.eigenvalues();  // ascending
  const double top = vals[m - 1];
  if (!(top > 0.0))
    throw PipelineError("eigensolve", "degenerate covariance: no positive spectrum");
  const double floor = floor_rel * top;

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = m - 1; i >= 0; --i) {
    if (vals[i] > floor) keep.push_back(i);
  }
  if (keep.empty())
    throw PipelineError("eigensolve", "degenerate covariance: spectrum below floor");

  Eigensystem eig;
  eig.grid = grid;

  // Filter exact ties: equal leading eigenvalues break the strict ordering
  // the truncation rule assumes, so only the first of a tied run is kept.
  std::vector<Eigen::Index> kept;
  std::vector<double> lambdas;
  for (Eigen::Index idx : keep) {
    const double v = vals[idx];
    if (!lambdas.empty() && !(v < lambdas.back())) {
      eig.warnings.push_back("dropped eigenvalue tied with its predecessor");
      continue;
    }
    lambdas.push_back(v);
    kept.push_back(idx);
  }

  const Eigen::Index count = static_cast<Eigen::Index>(kept.size());
  eig.eigenvalues.resize(count);
  eig.eigenfunctions.resize(m, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    eig.eigenvalues[j] = lambdas[static_cast<std::size_t>(j)];
    Eigen::VectorXd e =
        solver.eigenvectors().col(kept[static_cast<std::size_t>(j)]).cwiseQuotient(sqw);
    const double norm = std::sqrt((grid->weights().array() * e.array().square()).sum());
    e /= norm;
    // Deterministic orientation: largest-magnitude component positive.
    Eigen::Index peak = 0;
    e.cwiseAbs().maxCoeff(&peak);
    if (e[peak] < 0.0) e = -e;
    eig.eigenfunctions.col(j) = e;
  }

  eig.gaps.resize(count);
  if (count == 1) {
    // Single retained mode: the only usable gap is the drop to the rest of
    // the spectrum, which is stored as the eigenvalue itself.
    eig.gaps[0] = eig.eigenvalues[0];
  } else {
    eig.gaps[0] = eig.eigenvalues[0] - eig.eigenvalues[1];
    for (Eigen::Index j = 1; j + 1 < count; ++j)
      eig.gaps[j] = std::min(eig.eigenvalues[j] - eig.eigenvalues[j + 1],
                             eig.eigenvalues[j - 1] - eig.eigenvalues[j]);
    eig.gaps[count - 1] = eig.eigenvalues[count - 2] - eig.eigenvalues[count - 1];
  }

  const double tie_tol = 1e-10 * eig.eigenvalues[0];
  for (Eigen::Index j = 0; j + 1 < count; ++j) {
    if (eig.eigenvalues[j] - eig.eigenvalues[j + 1] < tie_tol) {
      std::ostringstream os;
      os << "near-tied eigenvalues at positions " << (j + 1) << " and " << (j + 2);
      eig.warnings.push_back(os.str());
    }
  }
  return eig;
}

int truncation_count(const Eigensystem& eig, double c_n) {
  if (!(c_n > 0.0))
    throw PipelineError("truncation", "threshold must be positive");
  int k = 0;
  for (Eigen::Index p = 0; p < eig.count(); ++p) {
    if (eig.eigenvalues[p] + 0.5 * eig.gaps[p] >= c_n)
      k = static_cast<int>(p) + 1;
  }
  if (k == 0)
    throw PipelineError("truncation",
                        "truncation empty: threshold exceeds the whole spectrum");
  return k;
}

FpcaFit fpca_fit(const Dataset& data, const Eigensystem& eig,
                 const RegularizationScheme& scheme, double a_n,
                 std::optional<double> sigma_known, const Truncation& trunc) {
  require_same_grid(*data.grid, *eig.grid, "fpca_fit");
  if (!(a_n > 0.0)) throw PipelineError("fit", "roughening a_n must be positive");

  int k;
  if (trunc.fixed_k) {
    k = *trunc.fixed_k;
    if (k < 1) throw PipelineError("fit", "fixed truncation must be at least 1");
    if (k > eig.count())
      throw PipelineError("fit", "fixed truncation exceeds the retained spectrum");
  } else {
    k = truncation_count(eig, scheme.c_n);
  }

  const double n = static_cast<double>(data.n());
  // scores(i, j) = <x_i, e_j> under the quadrature inner product
  const Eigen::MatrixXd scores =
      data.x * data.grid->weights().asDiagonal() * eig.eigenfunctions.leftCols(k);
  const Eigen::VectorXd delta = scores.transpose() * data.y / n;

  FpcaFit fit;
  fit.n = data.n();
  fit.k_hat = k;
  fit.rho_coords.resize(k);
  for (int j = 0; j < k; ++j)
    fit.rho_coords[j] = scheme.fn(eig.eigenvalues[j]) * delta[j];
  fit.eig = eig;
  fit.scheme = scheme;
  fit.a_n = a_n;

  if (sigma_known) {
    if (!(*sigma_known >= 0.0))
      throw PipelineError("fit", "known noise scale must be nonnegative");
    fit.sigma_eps = *sigma_known;
    fit.sigma_estimated = false;
  } else {
    const Eigen::VectorXd resid = data.y - scores * fit.rho_coords;
    fit.sigma_eps = std::sqrt(resid.squaredNorm() / n);
    fit.sigma_estimated = true;
  }
  return fit;
}

FpcaFit fpca_fit(const Dataset& data, const RegularizationScheme& scheme,
                 double a_n, std::optional<double> sigma_known,
                 const Truncation& trunc) {
  Eigensystem eig = eigensolve(empirical_covariance(data), data.grid);
  return fpca_fit(data, eig, scheme, a_n, sigma_known, trunc);
}

FunctionalSample FpcaFit::reconstruct() const {
  Eigen::VectorXd v = eig.eigenfunctions.leftCols(k_hat) * rho_coords;
  return FunctionalSample(eig.grid, std::move(v));
}

double roughened_sd(const FpcaFit& fit, const Eigen::VectorXd& b) {
  if (b.size() != fit.k_hat)
    throw PipelineError("fit", "direction length does not match truncation");
  double s = 0.0;
  for (int j = 0; j < fit.k_hat; ++j) {
    const double f = fit.scheme.fn(fit.eig.eigenvalues[j]);
    s += fit.eig.eigenvalues[j] * f * f * b[j] * b[j];
  }
  return std::sqrt(s) + fit.a_n;
}

double predict(const FpcaFit& fit, const FunctionalSample& x) {
  require_same_grid(*fit.eig.grid, x.grid(), "predict");
  const Eigen::VectorXd proj = fit.eig.eigenfunctions.leftCols(fit.k_hat).transpose() *
                               fit.eig.grid->weights().cwiseProduct(x.values());
  return proj.dot(fit.rho_coords);
}

}  // namespace flm
