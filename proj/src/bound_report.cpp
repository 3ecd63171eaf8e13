#include "wallflow/bound_report.hpp"

#include <cmath>

namespace wallflow {

void finalize_refinement(BoundReport& r, double tol) {
    const double a = r.max_ratio, b = r.refined_max_ratio;
    if (!std::isfinite(a) || !std::isfinite(b)) {
        r.relative_change = INFINITY;
        r.pass = false;
        return;
    }
    const double scale = std::max(std::abs(a), std::abs(b));
    r.relative_change = scale > 0.0 ? std::abs(b - a) / scale : 0.0;
    r.pass = r.relative_change < tol;
}

}  // namespace wallflow
