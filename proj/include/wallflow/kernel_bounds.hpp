/// @file kernel_bounds.hpp
/// @brief Ratio sweeps |kernel| / bound over k-grid x sigma set for the six
///        kernel bounds and the six kappa * d_k kernel bounds.
#pragma once

#include <vector>

#include "wallflow/bound_report.hpp"
#include "wallflow/grid.hpp"

namespace wallflow {

enum class KernelBoundKind { F, KappaDkF };

/// One report per (n,m). Sweeps every k-node of grid and sigma in
/// {0, 0.1, 1, 10, 100}; refinement reruns on grid.refined().
std::vector<BoundReport> kernel_bound_report(const SpectralGrid& grid, KernelBoundKind which);

/// Single ratio |LHS|/RHS at (k, sigma); growth factors are cancelled before
/// exponentiation so the ratio is finite wherever it is mathematically finite.
double kernel_bound_ratio(KernelBoundKind which, int n, int m, double k, double sigma);

}  // namespace wallflow
