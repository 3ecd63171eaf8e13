/// @file force.hpp
/// @brief Compactly supported smooth forcing F = eps (a1, a2) B(x) B(y) and its
///        Fourier transform in x, with k-derivatives.
#pragma once

#include "wallflow/mode_field.hpp"

namespace wallflow {

struct ForceSpec {
    double x0 = -1.0, x1 = 1.0;
    double y0 = 2.0, y1 = 4.0;
    double epsilon = 1e-3;
    double amp1 = 1.0;  ///< amplitude of F_1 (x-component)
    double amp2 = 0.5;  ///< amplitude of F_2 (y-component)
    double smoothness = 1.0;

    /// Throws ConfigError unless the box is nondegenerate, y0 > 1 and smoothness > 0.
    void validate() const;
};

struct ForceSpectrum {
    ModeField F1, F2, dF1, dF2;
};

/// Bump exp(-s / (1 - xi^2)) on |xi| < 1, zero outside.
double bump(double xi, double s) noexcept;
double bump_derivative(double xi, double s) noexcept;

/// Direct-space component (1 or 2) and its y-derivative.
double force_value(const ForceSpec& f, int comp, double x, double y);
double force_dy(const ForceSpec& f, int comp, double x, double y);

/// int e^{ikx} B(xi(x)) dx and its k-derivative int i x e^{ikx} B dx (composite Gauss-Legendre).
cplx bump_hat(const ForceSpec& f, double k);
cplx bump_hat_dk(const ForceSpec& f, double k);

/// Profile in y of component comp and its y-derivative.
double force_profile_y(const ForceSpec& f, int comp, double y);
double force_profile_dy(const ForceSpec& f, int comp, double y);

/// F1, F2, d_k F1, d_k F2 on the grid; throws ConfigError if the support touches the wall.
ForceSpectrum force_spectrum(const ForceSpec& f, const GridPtr& grid);

}  // namespace wallflow
