/// @file kernels.hpp
/// @brief Propagators K_n(k,tau), kernels f_{n,m}(k,sigma), their k-derivatives and
///        the exponent-fused products used by every quadrature in the solver.
///
/// Every closed form is a short sum of terms c * x^p * exp(lambda x) with
/// lambda in {+kappa, -kappa, -|k|}; the tables below are the single source
/// for naive evaluation, fused evaluation and product integration.
#pragma once

#include <vector>

#include "wallflow/symbols.hpp"

namespace wallflow {

enum class ExpKind { PlusKappa, MinusKappa, MinusAbsK };

struct ExpTerm {
    cplx c;
    int p = 0;  ///< power of the argument (tau or sigma)
    ExpKind kind = ExpKind::MinusKappa;
};

/// Exponent value for a term kind at k.
cplx exponent_of(ExpKind kind, cplx kap, double abs_k) noexcept;

/// Term tables. n in {1,2,3}, m in {0,1}; k != 0 (DomainError otherwise).
std::vector<ExpTerm> propagator_terms(int n, double k, bool dk);
std::vector<ExpTerm> kernel_terms(int n, int m, double k, bool dk);

/// d/dtau of K_n divided by -ik: the propagator that maps the kernel integrals
/// to eta = -(1/ik) sum_n dK_n/dtau int f_{n,m} Q_m.
std::vector<ExpTerm> eta_propagator_terms(int n, double k);

/// Sum of terms at x; throws OverflowGuardError when some Re(lambda x) > 500.
cplx eval_terms(const std::vector<ExpTerm>& terms, double k, double x);

cplx propagator(int n, double k, double tau);
cplx f_kernel(int n, int m, double k, double sigma);
cplx dk_propagator(int n, double k, double tau);
cplx dk_f_kernel(int n, int m, double k, double sigma);

/// Kernels and propagators without the check convention:
/// f_{3,m} = (ik/kappa) fcheck_{3,m}, K_3 = (kappa/ik) Kcheck_3, equal otherwise.
cplx f_kernel_plain(int n, int m, double k, double sigma);
cplx propagator_plain(int n, double k, double tau);

/// Fused propagator x kernel at (t, s), tau = t-1, sigma = s-1.
/// l = 0: K f; l = 1: dK f; l = 2: K df; l = 3: K f (derivative on the source).
/// Exponents are combined before exponentiation. s must lie in I_n.
cplx fused_integrand(int l, int n, int m, double k, double t, double s);

}  // namespace wallflow
