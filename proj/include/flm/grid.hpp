#pragma once

#include <Eigen/Dense>
#include <memory>

namespace flm {

/// Discretization of [0, 1] with trapezoid quadrature weights. Points are
/// strictly increasing with points[0] = 0 and points[last] = 1, so the
/// weights are positive and sum to one.
class Grid {
 public:
  explicit Grid(Eigen::VectorXd points);

  static std::shared_ptr<const Grid> equispaced(Eigen::Index size);
  static std::shared_ptr<const Grid> make(Eigen::VectorXd points);

  const Eigen::VectorXd& points() const { return points_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  Eigen::Index size() const { return points_.size(); }

  bool same_as(const Grid& other) const;

 private:
  Eigen::VectorXd points_;
  Eigen::VectorXd weights_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Throws PipelineError("grid", ...) unless the two grids are identical.
void require_same_grid(const Grid& a, const Grid& b, const char* where);

/// One discretized element of L2([0,1]): finite values sampled on a grid.
class FunctionalSample {
 public:
  FunctionalSample(GridPtr grid, Eigen::VectorXd values);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const Eigen::VectorXd& values() const { return values_; }
  bool is_zero() const;

 private:
  GridPtr grid_;
  Eigen::VectorXd values_;
};

/// Trapezoid approximation of the L2 inner product.
double inner_product(const FunctionalSample& f, const FunctionalSample& g);

double l2_norm(const FunctionalSample& f);

/// Regression sample: n functional regressors (rows of x) sharing one grid,
/// with scalar responses y.
struct Dataset {
  GridPtr grid;
  Eigen::MatrixXd x;  // n rows, grid->size() columns
  Eigen::VectorXd y;  // length n

  Dataset(GridPtr grid, Eigen::MatrixXd x, Eigen::VectorXd y);

  Eigen::Index n() const { return y.size(); }
  FunctionalSample sample(Eigen::Index i) const;
};

}  // namespace flm
