/// @file oracle.hpp
/// @brief Independent check of the linear vorticity: centered finite differences for
///        w'' - kappa^2 w = -ik F2 - F1' on a uniform grid over [1, T].
#pragma once

#include <vector>

#include "wallflow/force.hpp"

namespace wallflow {

struct OracleSolution {
    std::vector<double> t;
    std::vector<cplx> omega;
    double diag_margin = 0.0;  ///< min over rows of |diag| - |off-diagonals|, scaled by h^2
};

/// Dirichlet values left = w(1), right = w(T). Throws DomainError if intervals < 4 or T <= 1.
OracleSolution oseen_oracle(const ForceSpec& f, double k, double t_box, std::size_t intervals, cplx left, cplx right);

struct OracleComparison {
    double k = 0.0;
    double t_box = 0.0;
    std::size_t intervals = 0;
    double rel_l2 = 0.0;  ///< interior relative L2 difference on the spectral t nodes
};

/// Spectral linear solution at k (product integration on grid t nodes) against
/// the oracle, with T the first grid node >= t_box.
OracleComparison oracle_compare(const ForceSpec& f, const GridPtr& grid, double k, std::size_t intervals = 1024,
                                double t_box = 9.0);

}  // namespace wallflow
