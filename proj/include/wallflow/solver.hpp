/// @file solver.hpp
/// @brief Picard iteration for (omega, u, v) and the affine fixed point for
///        d = d_k omega, with fitted weighted norms of every iterate field.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wallflow/companions.hpp"
#include "wallflow/convolution.hpp"
#include "wallflow/envelope.hpp"
#include "wallflow/force.hpp"

namespace wallflow {

struct SolverOptions {
    double tol = 1e-10;
    int max_iter = 60;
    double relaxation = 1.0;  ///< omega <- r omega_new + (1 - r) omega_old
    double d_tol = 1e-10;
    int d_max_iter = 60;
};

struct SolverState {
    GridPtr grid;
    ForceSpec spec;
    ForceSpectrum force;
    ModeField omega, eta, phi, psi, u, v, Q0, Q1;
    ModeField d1, d2, d3, d;  ///< order 1, stored as kappa * value
    ModeField dq0, dq1;       ///< L1 applied to the final d
    std::vector<double> residuals, d_residuals;
    int iterations = 0;
    bool converged = false;
    bool has_derivative = false;
    double contraction = 0.0;    ///< geometric mean of successive residual ratios
    double d_contraction = 0.0;
    double wall_u_max = 0.0;
};

/// Q0 = u*omega + F2, Q1 = v*omega - F1.
std::pair<ModeField, ModeField> q_assembly(const ModeField& u, const ModeField& v, const ModeField& omega,
                                           const ForceSpectrum& F, const ConvolutionPlan& plan);

ModeField omega_apply(const ModeField& Q0, const ModeField& Q1);

/// One pass with Q = (F2, -F1): the Oseen-linear solution.
SolverState linear_solve(const ForceSpec& spec, const GridPtr& grid);

/// Iterates Q -> omega -> companions -> Q until the relative sup change of omega
/// drops below tol. Throws ConvergenceError after three consecutive residual
/// increases, a non-finite residual, or max_iter.
SolverState picard_solve(const ForceSpec& spec, const ConvolutionPlan& plan, const SolverOptions& opt);

/// d1 = sum dK int f Q, d2 = sum K int df Q; order 1.
std::pair<ModeField, ModeField> d12_compute(const SolverState& s);

/// (u * d, v * d) for an order-1 d.
std::pair<ModeField, ModeField> L1_apply(const ModeField& d, const SolverState& s, const ConvolutionPlan& plan);

/// sum K int f dQ, stored as kappa * value.
ModeField L2_apply(const ModeField& dQ0, const ModeField& dQ1);

/// Solves x = L2[L1[d1 + d2 + x] + (dF2, -dF1)] from x = 0 and sets d, d1, d2, d3.
/// Throws ConvergenceError on three consecutive residual increases or max_iter.
void dk_fixed_point(SolverState& s, const ConvolutionPlan& plan, const SolverOptions& opt);

struct FittedNorm {
    std::string field;
    std::string target;
    NormResult norm;
};

/// Grid-max ratios of each field against its target envelope.
std::vector<FittedNorm> fitted_norms(const SolverState& s, double alpha);

}  // namespace wallflow
