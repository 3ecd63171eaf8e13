/// @file direct_space.hpp
/// @brief Inverse Fourier transform onto x nodes, Fourier-side L1 integrals and
///        the decay certificate for u, v, omega and x omega.
#pragma once

#include <span>
#include <vector>

#include "wallflow/solver.hpp"

namespace wallflow {

struct RealField {
    std::vector<double> x, t;
    std::vector<double> values;  ///< x-major, index ix * nt + it
    double imag_residue = 0.0;   ///< max |Im| / max |Re| before the imaginary part was dropped

    double operator()(std::size_t ix, std::size_t it) const noexcept { return values[ix * t.size() + it]; }
};

/// 0 and +-x geometric from x_min to x_max, n_per_side points each, sorted.
std::vector<double> graded_x_nodes(double x_max, std::size_t n_per_side, double x_min = 0.05);

/// f(x,t) = (1/2pi) int e^{-ikx} f(k,t) dk. Raw values are linear between k
/// nodes and each cell is integrated exactly against e^{-ikx}; for order-1
/// fields the cell around k = 0 uses the stored values against 1/kappa.
/// Throws DomainError when the imaginary residue exceeds 1e-8.
RealField inverse_transform(const ModeField& f, std::span<const double> x);

/// (1/2pi) int |f(k,t)| dk per t node; bounds sup_x |f(x,t)|.
std::vector<double> fourier_l1(const ModeField& f);

/// Least-squares slope of log|y| against log t over t in [t_lo, t_hi]; entries with y == 0 are skipped.
double log_slope(std::span<const double> t, std::span<const double> y, double t_lo, double t_hi);

struct DecayReport {
    std::vector<double> t;
    std::vector<double> sup_u, sup_v, sup_w, sup_xw;          ///< max_x of t^{3/2}|u|, t^{3/2}|v|, t^3|w|, t|x w|
    std::vector<double> chain_u, chain_v, chain_w, chain_xw;  ///< t^e (1/2pi) int |f| dk
    std::vector<double> omega_x0;                             ///< |omega(0,t)|
    double M_u = 0, M_v = 0, M_w = 0, M_x = 0;
    double slope_x0 = 0;       ///< fit of log|omega(0,t)| on the last decade
    double slope_sup = 0;      ///< fit of log max_x |omega(x,t)| on the last decade
    double chain_slope_max = 0; ///< largest last-decade slope among the chain products
    double imag_residue = 0;
    bool has_x = false;
};

/// Chain exponents: 3 for omega, 3/2 for u and v, 1 for x omega.
DecayReport decay_certificate(const SolverState& s, std::span<const double> x);

}  // namespace wallflow
