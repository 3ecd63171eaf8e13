/// @file config.hpp
/// @brief JSON run configuration. Every key is optional; unknown keys are rejected.
///
/// Defaults:
///   grid:    k_min 1e-6, k_max 64, k_nodes_per_side 256, t_max 128, t_nodes 256
///   force:   x0 -1, x1 1, y0 2, y1 4, epsilon 1e-3, amp1 1, amp2 0.5, smoothness 1
///   solver:  tol 1e-10, max_iter 60, relaxation 1, d_tol 1e-10, d_max_iter 60
///   alpha:   3.5 (weight exponent of the fitted norms)
///   x_nodes: n_per_side 160, x_min 0.05, x_max_factor 4 (x_max = factor * t_max^2)
///   stages:  derivative true, certificate true, pressure true
///   checks:  "all" | "fast" | "none" (default "fast")
///   write_fields: true
#pragma once

#include <string>

#include "json.hpp"
#include "wallflow/force.hpp"
#include "wallflow/grid.hpp"
#include "wallflow/solver.hpp"

namespace wallflow {

struct XNodeConfig {
    std::size_t n_per_side = 160;
    double x_min = 0.05;
    double x_max_factor = 4.0;
};

struct PipelineConfig {
    GridConfig grid;
    ForceSpec force;
    SolverOptions solver;
    double alpha = 3.5;
    XNodeConfig x_nodes;
    bool derivative = true;
    bool certificate = true;
    bool pressure = true;
    std::string checks = "fast";
    bool write_fields = true;

    /// Throws ConfigError on unknown keys, wrong types or invalid values.
    static PipelineConfig from_json(const nlohmann::json& j);
    static PipelineConfig load(const std::string& path);
    nlohmann::json to_json() const;
    void validate() const;
};

}  // namespace wallflow
