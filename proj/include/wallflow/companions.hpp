/// @file companions.hpp
/// @brief Reconstruction of eta, phi, psi and the velocity modes u = -eta + phi,
///        v = omega + psi from omega and the sources Q0, Q1.
///
/// eta comes from the same product integration as omega with the propagator
/// -(1/ik) dK_n/dtau. The harmonic pair is diagonalized, chi_pm = phi +- i sg(k) psi:
/// chi_- decays and is integrated in from t_max; chi_+ carries the homogeneous
/// constant fixed by v(k,1) = 0. u(k,1) is kept as a diagnostic.
#pragma once

#include <vector>

#include "wallflow/mode_field.hpp"

namespace wallflow {

struct Companions {
    ModeField eta, phi, psi, u, v;
    std::vector<double> wall_u;  ///< |u(k,1)| per k node
    double wall_u_max = 0.0;     ///< max over k of |u(k,1)| / max(1e-300, sup |u|)
};

/// Throws DomainError on grid or order mismatch (all inputs order 0).
Companions companion_fields(const ModeField& omega, const ModeField& Q0, const ModeField& Q1);

/// Analytic t-derivatives: u' = -(ik+1) omega - ik psi, v' = ik u.
ModeField du_dt(const ModeField& omega, const Companions& c);
ModeField dv_dt(const Companions& c);

}  // namespace wallflow
