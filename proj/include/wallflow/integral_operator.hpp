/// @file integral_operator.hpp
/// @brief Sum over n, m of propagator(t) x int_{I_n} kernel_{n,m}(s) Q_m(s) ds, by
///        product integration: Q_m is linear between t nodes and every
///        exponential factor is integrated exactly.
///
/// Same-exponent pairs (e^{-kappa tau} against e^{+kappa sigma}, and the
/// converse for n = 3) are carried by a one-step recursion in e^{-kappa h}, so
/// no growing exponential is ever formed. All other pairs separate into a
/// propagator value times a cumulative integral. Sources vanish beyond t_max.
#pragma once

#include <span>

#include "wallflow/mode_field.hpp"

namespace wallflow {

enum class IntegralSlot {
    Omega,         ///< K_n  x f_{n,m}
    DkPropagator,  ///< dK_n x f_{n,m}
    DkKernel,      ///< K_n  x df_{n,m}
    Eta,           ///< -(1/ik) dK_n/dtau x f_{n,m}
};

/// One k column. Q0, Q1 and out have t.size() entries; out is overwritten.
void integral_column(IntegralSlot slot, double k, std::span<const double> t, const cplx* Q0,
                     const cplx* Q1, cplx* out);

/// Whole field, parallel over k. Q0, Q1 must be order-0 fields on one grid;
/// the result is stored with the requested order (multiplied by kappa^order).
ModeField integral_apply(IntegralSlot slot, const ModeField& Q0, const ModeField& Q1, int out_order = 0);

/// X(t_i) = int_{t_i}^{t_max} e^{-mu (s - t_i)} S(s) ds (backward == true) or
/// int_1^{t_i} e^{-mu (t_i - s)} S(s) ds, S linear between nodes. Re mu >= 0.
void exp_convolve_column(cplx mu, std::span<const double> t, const cplx* S, bool backward, cplx* out);

}  // namespace wallflow
