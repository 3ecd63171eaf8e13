/// @file envelope.hpp
/// @brief Weight envelopes t^{-p} mu_{alpha,1} + t^{-q} mu_{alpha,2} and the discrete
///        weighted sup-norms built on them.
#pragma once

#include <array>
#include <cstddef>

#include "wallflow/mode_field.hpp"

namespace wallflow {

struct WeightEnvelope {
    double alpha = 0.0;
    double p = 0.0;
    double q = 0.0;
    int n = 0;

    /// Throws DomainError on negative parameters or n outside {0,1}.
    void validate() const;

    double operator()(double k, double t) const;
};

struct NormResult {
    double value = 0.0;
    std::size_t excluded = 0;  ///< nodes skipped because the envelope underflowed
    std::size_t arg_k = 0;
    std::size_t arg_t = 0;
};

/// Grid max of |kappa^n f| / envelope. Requires f.order() == env.n.
NormResult weighted_norm(const ModeField& f, const WeightEnvelope& env);

/// Norm of a single order-1 field against the sum of the three component
/// envelopes (alpha, p_i, q_i) of a D^1 product space.
NormResult d1_norm(const ModeField& f, const std::array<WeightEnvelope, 3>& comps);

/// Component envelopes of D^1_{alpha-1,p,q}: the order-1 spaces
/// (alpha, p, q), (alpha - 1/2, p + 1/2, q + 1/2), (alpha - 1, p + 1/2, q + 1).
std::array<WeightEnvelope, 3> d1_components(double alpha, double p, double q);

}  // namespace wallflow
