#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flm/fpca.hpp"
#include "flm/hypothesis.hpp"
#include "flm/simulate.hpp"

namespace flm {

enum class TruncationMode { Deterministic, DataBased };

TruncationMode truncation_mode_from_string(const std::string& s);
std::string to_string(TruncationMode mode);

/// Monte Carlo study over (sample size, threshold exponent, scheme) cells.
/// With the deterministic mode the truncation and threshold come from the
/// known Brownian eigenvalues; with the data-based mode each replication
/// uses its own empirical threshold and truncation, and the cell's null
/// distribution is built at the ceiling of the average truncation.
struct StudyConfig {
  CoefficientKind rho_kind = CoefficientKind::Rho0;
  std::optional<double> snr;  // absent: use sigma_eps directly
  double sigma_eps = 1.0;     // noise scale when snr is absent
  std::vector<int> n_list{50, 200, 1000};
  int n_sims = 200;
  std::vector<double> c_exponents{2, 3, 4, 5, 7, 8};
  TruncationMode truncation_mode = TruncationMode::Deterministic;
  std::vector<RegKind> schemes{RegKind::Simple, RegKind::Ridge};
  double alpha = 0.05;
  GpSettings gp;
  OptimizerSettings optimizer;
  std::uint64_t master_seed = 0;
  std::string output_path = "study.csv";
  int grid_size = 100;
  int threads = 1;
};

struct CellReport {
  int n = 0;
  double c = 0.0;
  RegKind scheme = RegKind::Simple;
  double mean_k_hat = 0.0;
  double reject_rate_w = 0.0;
  std::optional<double> reject_rate_d;
  std::optional<double> reject_rate_t;
  double mean_log_error = 0.0;
  int failures = 0;
};

/// Quadratic error of the reconstructed slope against the truth:
/// integral of (rho - rho_hat)^2, divided by the integral of rho^2 unless
/// rho is the zero function.
double error_measure(const FunctionalSample& rho_true, const FpcaFit& fit);

/// Truncation count from the analytic Brownian eigenvalues at threshold
/// lambda_1^c / log log n.
int deterministic_k(Eigen::Index n, double c);

using ProgressFn = std::function<void(const std::string&)>;

/// Runs every (n, c, scheme) cell; per-replication failures are counted in
/// the cell report, never aborting the study. Bit-reproducible for a given
/// master seed across runs and thread counts.
std::vector<CellReport> run_study(const StudyConfig& cfg,
                                  const ProgressFn& progress = {});

}  // namespace flm
