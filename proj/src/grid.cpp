#include "flm/grid.hpp"

#include <cmath>
#include <utility>

#include "flm/errors.hpp"

namespace flm {

Grid::Grid(Eigen::VectorXd points) : points_(std::move(points)) {
  const Eigen::Index m = points_.size();
  if (m < 2) throw PipelineError("grid", "need at least two points");
  if (points_[0] != 0.0 || points_[m - 1] != 1.0)
    throw PipelineError("grid", "points must start at 0 and end at 1");
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    if (!(points_[i] < points_[i + 1]))
      throw PipelineError("grid", "points must be strictly increasing");
  }

  weights_.resize(m);
  weights_[0] = 0.5 * (points_[1] - points_[0]);
  for (Eigen::Index i = 1; i + 1 < m; ++i)
    weights_[i] = 0.5 * (points_[i + 1] - points_[i - 1]);
  weights_[m - 1] = 0.5 * (points_[m - 1] - points_[m - 2]);
}

std::shared_ptr<const Grid> Grid::equispaced(Eigen::Index size) {
  if (size < 2) throw PipelineError("grid", "need at least two points");
  Eigen::VectorXd pts = Eigen::VectorXd::LinSpaced(size, 0.0, 1.0);
  pts[0] = 0.0;
  pts[size - 1] = 1.0;
  return std::make_shared<const Grid>(std::move(pts));
}

std::shared_ptr<const Grid> Grid::make(Eigen::VectorXd points) {
  return std::make_shared<const Grid>(std::move(points));
}

bool Grid::same_as(const Grid& other) const {
  if (this == &other) return true;
  return points_.size() == other.points_.size() && points_ == other.points_;
}

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (!a.same_as(b))
    throw PipelineError("grid", std::string("grid mismatch in ") + where);
}

FunctionalSample::FunctionalSample(GridPtr grid, Eigen::VectorXd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw PipelineError("grid", "null grid");
  if (values_.size() != grid_->size())
    throw PipelineError("grid", "value vector does not match grid length");
  if (!values_.allFinite())
    throw PipelineError("grid", "non-finite sample values");
}

bool FunctionalSample::is_zero() const {
  return (values_.array() == 0.0).all();
}

double inner_product(const FunctionalSample& f, const FunctionalSample& g) {
  require_same_grid(f.grid(), g.grid(), "inner_product");
  return (f.grid().weights().array() * f.values().array() * g.values().array())
      .sum();
}

double l2_norm(const FunctionalSample& f) {
  return std::sqrt(
      (f.grid().weights().array() * f.values().array().square()).sum());
}

Dataset::Dataset(GridPtr grid_in, Eigen::MatrixXd x_in, Eigen::VectorXd y_in)
    : grid(std::move(grid_in)), x(std::move(x_in)), y(std::move(y_in)) {
  if (!grid) throw PipelineError("dataset", "null grid");
  if (x.rows() != y.size())
    throw PipelineError("dataset", "row count does not match response length");
  if (x.cols() != grid->size())
    throw PipelineError("dataset", "column count does not match grid length");
  if (y.size() < 2) throw PipelineError("dataset", "need at least two observations");
  if (!x.allFinite() || !y.allFinite())
    throw PipelineError("dataset", "non-finite entries");
}

FunctionalSample Dataset::sample(Eigen::Index i) const {
  return FunctionalSample(grid, x.row(i).transpose());
}

}  // namespace flm
