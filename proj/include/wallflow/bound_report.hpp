/// @file bound_report.hpp
/// @brief Verification record for one inequality: sup of LHS/RHS on a sweep,
///        the same sup on a refined sweep, and the pass verdict.
#pragma once

#include <string>
#include <vector>

namespace wallflow {

struct BoundReport {
    std::string name;
    double max_ratio = 0.0;
    double refined_max_ratio = 0.0;
    double relative_change = 0.0;
    bool pass = false;
    std::string note;

    /// Sweep table written to bounds/<name>.csv.
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Sets relative_change from the two sweeps and pass = finite and change < tol.
void finalize_refinement(BoundReport& r, double tol = 0.10);

}  // namespace wallflow
