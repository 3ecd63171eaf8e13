/// @file checks.hpp
/// @brief Pass/fail checks shared by the solve pipeline and the acceptance run.
///        Each check records the observed value next to its pinned threshold.
#pragma once

#include <string>
#include <vector>

#include "wallflow/bound_report.hpp"
#include "wallflow/direct_space.hpp"
#include "wallflow/solver.hpp"

namespace wallflow {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double threshold = 0.0;
    std::string detail;
};

/// Every d_k closed form against a centered difference of its parent, k in
/// {+-0.05, +-0.5, +-2, +-20}, argument in {0.1, 1, 5}. Observed = max relative error.
CheckResult check_kernel_derivatives(double tol = 1e-6);

/// Fused against naive products for the 24 (l,n,m) combinations where the naive
/// form is finite, and finiteness of the fused form at t = 128, |k| = 64.
CheckResult check_fused_products(double tol = 1e-12);

/// Envelope bookkeeping: u x d and v x d land in B(alpha,3/2,1) and B(alpha,3/2,2).
CheckResult check_product_map(double alpha = 3.5);

/// All bound reports. fast == true uses coarser sweep grids.
std::vector<BoundReport> bound_suite(bool fast);

/// max of |f(k) - conj f(-k)| over omega, u, v, Q0, Q1 and -i d.
CheckResult check_reality(const SolverState& s, double tol = 1e-10);

/// FD-in-t residuals of v' = iku and -u' - ikv = omega, relative to sup |omega|.
CheckResult check_incompressibility(const SolverState& s, double tol);
CheckResult check_vorticity_identity(const SolverState& s, double tol);

/// |u(k,1)| relative to sup |u|.
CheckResult check_wall_velocity(const SolverState& s, double tol = 1e-6);

/// Linear omega at k against the FD oracle (relative interior L2).
CheckResult check_oracle(const ForceSpec& f, const GridPtr& grid, double k, double tol = 1e-2);

/// d against a five-point FD in k of omega on 0.1 <= |k| <= 5.
/// Observed = max |d - FD| / max |FD|.
CheckResult check_dk_fd(const SolverState& s, double tol = 1e-2);

/// Composite quadrature tolerance of the product integration, pinned from the
/// adaptive-quadrature comparison in the unit tests.
inline constexpr double kQuadratureTolerance = 1e-4;

}  // namespace wallflow
