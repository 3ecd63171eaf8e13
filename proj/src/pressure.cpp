#include "wallflow/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wallflow/errors.hpp"
#include "wallflow/integral_operator.hpp"
#include "wallflow/quadrature.hpp"

namespace wallflow {

void pressure_column(double k, std::span<const double> t, const cplx* S, const cplx* G2, cplx g, cplx* out) {
    if (k == 0.0) throw DomainError("pressure_column: k = 0");
    const std::size_t N = t.size();
    const double a = std::abs(k);
    std::vector<cplx> fs(N), bs(N), fg(N), bg(N);
    exp_convolve_column(a, t, S, false, fs.data());
    exp_convolve_column(a, t, S, true, bs.data());
    exp_convolve_column(a, t, G2, false, fg.data());
    exp_convolve_column(a, t, G2, true, bg.data());
    for (std::size_t i = 0; i < N; ++i) {
        const double e = std::exp(-a * (t[i] - 1.0));
        // G(t,s) = -(e^{-a|t-s|} + e^{-a(t+s-2)}) / 2a
        const cplx ps = -(fs[i] + bs[i] + e * bs[0]) / (2.0 * a);
        const cplx pg = -0.5 * (fg[i] - bg[i] - e * bg[0]) - e * G2[0] / a;
        out[i] = ps + pg - g / a * e;
    }
}

PressureResult pressure_solve(const SolverState& s, const ConvolutionPlan& plan) {
    const GridPtr& g = s.grid;
    const std::size_t nk = g->nk(), nt = g->nt();
    const auto t = g->t();
    Companions c;
    c.psi = s.psi;
    c.u = s.u;
    const ModeField du = du_dt(s.omega, c);
    const ModeField dv = dv_dt(c);
    auto dx = [&](const ModeField& f) {
        return ModeField::generate(g, 0, [&](std::size_t ik, std::size_t it) { return -I * g->k()[ik] * f(ik, it); });
    };
    PressureResult r;
    r.N1 = plan.convolve(s.u, dx(s.u)) + plan.convolve(s.v, du);
    r.N2 = plan.convolve(s.u, dx(s.v)) + plan.convolve(s.v, dv);
    const ModeField G1 = s.force.F1 + r.N1;
    const ModeField G2 = s.force.F2 + r.N2;

    std::vector<cplx> p(nk * nt);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t sk = 0; sk < static_cast<std::ptrdiff_t>(nk); ++sk) {
        const auto ik = static_cast<std::size_t>(sk);
        const double k = g->k()[ik];
        std::vector<cplx> S(nt);
        for (std::size_t it = 0; it < nt; ++it) S[it] = I * k * G1(ik, it);
        const cplx neumann = I * k * du(ik, 0);  // v'' = ik u'
        pressure_column(k, t, S.data(), G2.column(ik), neumann, p.data() + ik * nt);
    }
    r.p = ModeField(g, 0, std::move(p));
    r.gauge = "p(k,t) -> 0 as t -> infinity for every k != 0; the k = 0 constant is fixed by the same limit";

    // Momentum residuals, interior nodes, five-point FD in t.
    double rx = 0, ry = 0, sx = 0, sy = 0;
    for (std::size_t ik = 0; ik < nk; ++ik) {
        const double k = g->k()[ik];
        for (std::size_t it = 2; it + 2 < nt; ++it) {
            std::vector<double> x(t.begin() + it - 2, t.begin() + it + 3);
            const auto w = fd_weights(t[it], x, 1);
            cplx duu{}, dp{};
            for (int j = 0; j < 5; ++j) {
                duu += w[j] * du(ik, it - 2 + j);
                dp += w[j] * r.p(ik, it - 2 + j);
            }
            const cplx kk = k * k;
            const cplx tx[5] = {I * k * s.u(ik, it), duu, -kk * s.u(ik, it), -G1(ik, it), I * k * r.p(ik, it)};
            const cplx ty[5] = {I * k * s.v(ik, it), I * k * du(ik, it), -kk * s.v(ik, it), -G2(ik, it), -dp};
            cplx ex{}, ey{};
            for (int j = 0; j < 5; ++j) {
                ex += tx[j];
                ey += ty[j];
                sx = std::max(sx, std::abs(tx[j]));
                sy = std::max(sy, std::abs(ty[j]));
            }
            rx = std::max(rx, std::abs(ex));
            ry = std::max(ry, std::abs(ey));
        }
    }
    r.residual_x = rx == 0.0 ? 0.0 : rx / std::max(sx, 1e-300);
    r.residual_y = ry == 0.0 ? 0.0 : ry / std::max(sy, 1e-300);
    return r;
}

}  // namespace wallflow
