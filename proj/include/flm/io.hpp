#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flm/fpca.hpp"
#include "flm/gaussian_sup.hpp"
#include "flm/grid.hpp"
#include "flm/hypothesis.hpp"
#include "flm/study.hpp"

namespace flm {

/// Dataset CSV: one row per observation, response first, then the regressor
/// values. An optional header row (first cell non-numeric) lists the grid
/// points; without it the grid is equispaced on [0, 1]. Parse failures carry
/// line/column diagnostics.
Dataset read_dataset_csv(const std::string& path);
void write_dataset_csv(const Dataset& data, const std::string& path);

nlohmann::json fit_to_json(const FpcaFit& fit);
FpcaFit fit_from_json(const nlohmann::json& j);
void write_fit(const FpcaFit& fit, const std::string& path);
FpcaFit read_fit(const std::string& path);

nlohmann::json test_result_to_json(const TestResult& r);

/// One sorted sample per line.
void write_sup_samples(const SupSimResult& result, const std::string& path);

StudyConfig study_config_from_json(const nlohmann::json& j);
nlohmann::json study_config_to_json(const StudyConfig& cfg);
StudyConfig read_study_config(const std::string& path);

std::string study_csv(const std::vector<CellReport>& cells);
void write_study_csv(const std::vector<CellReport>& cells,
                     const std::string& path);

/// Deterministic "%.*g" formatting used in all text outputs.
std::string format_double(double v, int precision = 12);

}  // namespace flm
