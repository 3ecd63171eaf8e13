/// @file quadrature.hpp
/// @brief Shared quadrature pieces: exponential moments for product integration,
///        fixed Gauss-Legendre rules and Fornberg finite-difference weights.
#pragma once

#include <array>
#include <span>
#include <vector>

#include "wallflow/symbols.hpp"

namespace wallflow {

/// m_j = int_0^h x^j exp(-mu x) dx for j = 0, 1, 2. Stable for Re mu >= 0
/// (series when |mu h| is small, closed recurrences otherwise).
std::array<cplx, 3> exp_moments(cplx mu, double h);

/// int_0^h (c0 + c1 x + c2 x^2) exp(-mu x) dx.
cplx exp_poly_integral(cplx mu, double h, cplx c0, cplx c1, cplx c2);

struct GaussRule {
    std::vector<double> x;  ///< nodes on [-1, 1]
    std::vector<double> w;
};

/// Gauss-Legendre rule with n in {2, 4, 8, 16} points.
const GaussRule& gauss_legendre(int n);

/// Fornberg weights for the m-th derivative at z from the nodes x.
std::vector<double> fd_weights(double z, std::span<const double> x, int m);

}  // namespace wallflow
