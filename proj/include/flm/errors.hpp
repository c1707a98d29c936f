#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace flm {

/// Failure raised by any stage of the estimation/testing pipeline. The stage
/// label lets batch drivers record a failed replication instead of aborting a
/// whole study.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace flm
