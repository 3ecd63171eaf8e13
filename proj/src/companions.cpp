#include "wallflow/companions.hpp"

#include <algorithm>
#include <cmath>

#include "wallflow/errors.hpp"
#include "wallflow/integral_operator.hpp"

namespace wallflow {

Companions companion_fields(const ModeField& omega, const ModeField& Q0, const ModeField& Q1) {
    if (omega.grid() != Q0.grid() || omega.grid() != Q1.grid())
        throw DomainError("companion_fields: grid mismatch");
    if (omega.order() != 0 || Q0.order() != 0 || Q1.order() != 0)
        throw DomainError("companion_fields: order-0 inputs required");
    const GridPtr& g = omega.grid();
    const std::size_t nk = g->nk(), nt = g->nt();
    const auto t = g->t();

    Companions c;
    c.eta = integral_apply(IntegralSlot::Eta, Q0, Q1);
    std::vector<cplx> phi(nk * nt), psi(nk * nt);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t sk = 0; sk < static_cast<std::ptrdiff_t>(nk); ++sk) {
        const auto ik = static_cast<std::size_t>(sk);
        const double k = g->k()[ik];
        const double a = std::abs(k), sg = sign(k);
        const cplx* q0 = Q0.column(ik);
        const cplx* q1 = Q1.column(ik);
        std::vector<cplx> sm(nt), sp(nt), xm(nt), xp(nt);
        for (std::size_t it = 0; it < nt; ++it) {
            sm[it] = q0[it] + I * sg * q1[it];
            sp[it] = q0[it] - I * sg * q1[it];
        }
        exp_convolve_column(a, t, sm.data(), true, xm.data());
        exp_convolve_column(a, t, sp.data(), false, xp.data());
        const cplx chi_m1 = -xm[0];
        const cplx C = chi_m1 - 2.0 * I * sg * omega(ik, 0);
        for (std::size_t it = 0; it < nt; ++it) {
            const cplx chi_m = -xm[it];
            const cplx chi_p = C * std::exp(-a * (t[it] - 1.0)) + xp[it];
            phi[ik * nt + it] = 0.5 * (chi_p + chi_m);
            psi[ik * nt + it] = (chi_p - chi_m) / (2.0 * I * sg);
        }
    }
    c.phi = ModeField(g, 0, std::move(phi));
    c.psi = ModeField(g, 0, std::move(psi));
    c.u = c.phi - c.eta;
    c.v = omega + c.psi;

    c.wall_u.resize(nk);
    const double su = std::max(c.u.sup(), 1e-300);
    for (std::size_t ik = 0; ik < nk; ++ik) {
        c.wall_u[ik] = std::abs(c.u(ik, 0));
        c.wall_u_max = std::max(c.wall_u_max, c.wall_u[ik] / su);
    }
    return c;
}

ModeField du_dt(const ModeField& omega, const Companions& c) {
    const GridPtr& g = omega.grid();
    return ModeField::generate(g, 0, [&](std::size_t ik, std::size_t it) {
        const double k = g->k()[ik];
        return -(I * k + 1.0) * omega(ik, it) - I * k * c.psi(ik, it);
    });
}

ModeField dv_dt(const Companions& c) {
    const GridPtr& g = c.u.grid();
    return ModeField::generate(g, 0, [&](std::size_t ik, std::size_t it) { return I * g->k()[ik] * c.u(ik, it); });
}

}  // namespace wallflow
