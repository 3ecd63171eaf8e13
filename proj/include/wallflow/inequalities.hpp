/// @file inequalities.hpp
/// @brief Grid sweeps of the scalar inequalities relating |k|, |kappa|, Lambda_- and
///        the mu weights.
#pragma once

#include "wallflow/bound_report.hpp"
#include "wallflow/grid.hpp"

namespace wallflow {

/// |kappa| <= |k|^{1/2} + |k| <= 2^{3/4}|kappa| <= 2^{3/4}(1+|k|),
/// |k|^{1/2} <= C|kappa| (C recorded as the observed constant), and
/// exp(Lambda_- sigma) <= exp(-|k| sigma) for sigma in {0, 1, 10}.
/// Pass iff no violation beyond 1e-12 relative slack.
BoundReport kappa_inequality_report(const SpectralGrid& grid);

/// Sup ratios of exp(Lambda_-(t-1)) mu_{alpha,r} / mu_{alpha,2} and of
/// |k|^rho mu_{alpha,r} t^{rho r} / mu_{alpha-rho,r}; pass iff finite and
/// stable under 2x refinement.
BoundReport weight_inequality_report(const SpectralGrid& grid);

}  // namespace wallflow
