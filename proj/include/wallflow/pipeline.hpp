/// @file pipeline.hpp
/// @brief Orchestration: solve, derivative solve, certification, pressure, checks,
///        and deterministic report files.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wallflow/checks.hpp"
#include "wallflow/config.hpp"
#include "wallflow/pressure.hpp"

namespace wallflow {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitNoConvergence = 2;
inline constexpr int kExitConfig = 3;

struct PipelineResult {
    int exit_code = kExitOk;
    std::string error;
    std::optional<SolverState> state;
    std::vector<FittedNorm> norms;
    std::optional<DecayReport> decay;
    std::optional<PressureResult> pressure;
    std::optional<RealField> omega_x, u_x, v_x;
    std::vector<BoundReport> bounds;
    std::vector<CheckResult> checks;
};

/// Runs every enabled stage; no file output. Solver failures set exit code 2.
PipelineResult run_pipeline(const PipelineConfig& cfg, std::ostream& log);

/// summary.json, fields/*.csv, decay.csv, bounds/*.csv under out_dir.
/// All numbers in CSV files use 17 significant digits.
void emit_reports(const PipelineResult& r, const PipelineConfig& cfg, const std::string& out_dir);

/// Load, run, emit. checks_override is empty or one of all|fast|none.
/// Returns the process exit code.
int run(const std::string& config_path, const std::string& out_dir, const std::string& checks_override,
        std::ostream& log);

}  // namespace wallflow
