/// @file symbols.hpp
/// @brief Scalar symbols of the half-plane Oseen problem: the decay exponent
///        kappa(k) = sqrt(k^2 - i k), its k-derivative, Lambda_-(k) = -Re kappa,
///        and the algebraic weights mu_{alpha,r}(k,t) = 1 / (1 + (|k| t^r)^alpha).
#pragma once

#include <complex>

namespace wallflow {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

/// Principal branch of sqrt(k^2 - i k). Re kappa > 0 for k != 0.
/// Throws DomainError for k == 0.
cplx kappa(double k);

/// Same as kappa() but defined at k = 0 (returns 0). For internal sweeps.
cplx kappa_or_zero(double k) noexcept;

/// d kappa / dk = (2k - i) / (2 kappa). Throws DomainError for k == 0.
cplx dk_kappa(double k);

/// Lambda_-(k) = -1/2 sqrt(2 sqrt(k^2 + k^4) + 2 k^2); even, <= 0, zero at k = 0.
double lambda_minus(double k) noexcept;

/// mu_{alpha,r}(k,t) in (0,1]. Requires t >= 1 (DomainError otherwise).
double mu_weight(double alpha, double r, double k, double t);

inline double sign(double k) noexcept { return k > 0.0 ? 1.0 : (k < 0.0 ? -1.0 : 0.0); }

}  // namespace wallflow
