/// @file pressure.hpp
/// @brief Pressure modes from p'' - k^2 p = ik G1 - d_t G2, G = F + u.grad u, with
///        Neumann data d_t p(k,1) = d_t^2 v(k,1) and decay as t -> infinity.
#pragma once

#include <span>
#include <string>

#include "wallflow/solver.hpp"

namespace wallflow {

/// One column of p'' - k^2 p = S - d_t G2, p'(1) = g, p bounded. Uses the
/// Neumann Green's function with e^{-|k||t-s|} kernels; the G2 derivative is
/// moved onto the kernel by parts. Sources vanish beyond t_max. k != 0.
void pressure_column(double k, std::span<const double> t, const cplx* S, const cplx* G2, cplx g, cplx* out);

struct PressureResult {
    ModeField p;
    ModeField N1, N2;             ///< transforms of u.grad u and u.grad v
    double residual_x = 0.0;      ///< x-momentum residual / largest term (FD in t)
    double residual_y = 0.0;      ///< y-momentum residual / largest term
    std::string gauge;
};

/// Pressure for a solved state, plus the momentum residuals as a check.
PressureResult pressure_solve(const SolverState& s, const ConvolutionPlan& plan);

}  // namespace wallflow
