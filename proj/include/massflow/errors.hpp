#pragma once

#include <stdexcept>
#include <string>

namespace massflow {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadGrid : Error {
  explicit BadGrid(const std::string& msg) : Error("BadGrid: " + msg) {}
};
struct GridTooCoarse : Error {
  explicit GridTooCoarse(const std::string& msg) : Error("GridTooCoarse: " + msg) {}
};
struct NonPositiveU : Error {
  explicit NonPositiveU(const std::string& msg) : Error("NonPositiveU: " + msg) {}
};
struct NonPositiveArea : Error {
  explicit NonPositiveArea(const std::string& msg) : Error("NonPositiveArea: " + msg) {}
};
struct HorizonInsideGrid : Error {
  explicit HorizonInsideGrid(const std::string& msg) : Error("HorizonInsideGrid: " + msg) {}
};
struct PerturbationTooLarge : Error {
  explicit PerturbationTooLarge(const std::string& msg) : Error("PerturbationTooLarge: " + msg) {}
};
struct RejectionLimitExceeded : Error {
  explicit RejectionLimitExceeded(const std::string& msg) : Error("RejectionLimitExceeded: " + msg) {}
};
struct NonConvergent : Error {
  explicit NonConvergent(const std::string& msg) : Error("NonConvergent: " + msg) {}
};
struct InsufficientDecay : Error {
  explicit InsufficientDecay(const std::string& msg) : Error("InsufficientDecay: " + msg) {}
};
struct GaugeBreakdown : Error {
  explicit GaugeBreakdown(const std::string& msg) : Error("GaugeBreakdown: " + msg) {}
};
struct StepSizeUnderflow : Error {
  explicit StepSizeUnderflow(const std::string& msg) : Error("StepSizeUnderflow: " + msg) {}
};
struct ResidualExceeded : Error {
  explicit ResidualExceeded(const std::string& msg) : Error("ResidualExceeded: " + msg) {}
};
struct AllStrategiesFailed : Error {
  explicit AllStrategiesFailed(const std::string& msg) : Error("AllStrategiesFailed: " + msg) {}
};
struct NoSolution : Error {
  explicit NoSolution(const std::string& msg) : Error("NoSolution: " + msg) {}
};
struct OutOfRange : Error {
  explicit OutOfRange(const std::string& msg) : Error("OutOfRange: " + msg) {}
};
struct NoHorizon : Error {
  explicit NoHorizon(const std::string& msg) : Error("NoHorizon: " + msg) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("ConfigError: " + msg) {}
};
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("IoError: " + msg) {}
};

}  // namespace massflow
