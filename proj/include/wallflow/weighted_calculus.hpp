/// @file weighted_calculus.hpp
/// @brief Numerical checks of the convolution bounds, the (p,q) bookkeeping for
///        products of weighted fields, and the semigroup integral bounds.
#pragma once

#include <vector>

#include "wallflow/bound_report.hpp"
#include "wallflow/convolution.hpp"
#include "wallflow/envelope.hpp"

namespace wallflow {

/// Grid used by the convolution checks: log-graded |k| in [1e-6, 64] and
/// t in {1, 2, 4, ..., 64}.
GridPtr convolution_check_grid(std::size_t k_nodes_per_side = 160);

/// a = mu_{alpha,r}, b = mu_{beta,s}; ratio |a*b| / (t^{-r} mu_{beta,s} + t^{-s} mu_{alpha,r}).
BoundReport conv_bound_report(double alpha, double beta, double r, double s, const GridPtr& grid);

/// a = mu_{alpha,r}, b = |kappa|^{-1} mu_{beta,s}. display = 1 checks the bound with
/// envelope mu_{beta,s'}; display = 2 checks the bound with mu_{beta+c,s'}.
BoundReport singular_conv_bound_report(int display, double alpha, double beta, double r, double s,
                                       double s_prime, double c, const GridPtr& grid);

/// (alpha, p1, q1) x D^1_{alpha-1,p2,q2} -> B_{alpha,p,q}; throws DomainError if alpha <= 2.
WeightEnvelope envelope_product_map(const WeightEnvelope& f, double p2, double q2);

enum class Semigroup { L1, L2, L3, K3 };

struct SemigroupParams {
    double alpha = 3.0;
    double r = 2.0;
    double beta = 0.0;
    double gamma = 0.0;  ///< used by L1 only
    double delta = 2.0;
};

/// Left-hand side integral, evaluated by adaptive Gauss-Kronrod.
double semigroup_lhs(Semigroup which, const SemigroupParams& p, double k, double t);

/// Right-hand side without its constant (including the log or power factor of L1).
double semigroup_rhs(Semigroup which, const SemigroupParams& p, double k, double t);

/// Least-squares slope of log(LHS / RHS) against log t at k = 0 on t in [t0, t1].
double semigroup_slope(Semigroup which, const SemigroupParams& p, double t0 = 1e2, double t1 = 1e4);

/// Sweep over the nonnegative k-nodes (plus k = 0) and all t-nodes of grid.
BoundReport semigroup_bound_report(Semigroup which, const SemigroupParams& p, const SpectralGrid& grid);

/// Grid for semigroup sweeps: |k| in [1e-6, 64], t geometric in [1, 1e4].
GridPtr semigroup_check_grid(std::size_t k_nodes = 48, std::size_t t_nodes = 33);

}  // namespace wallflow
