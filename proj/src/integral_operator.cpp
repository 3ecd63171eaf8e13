#include "wallflow/integral_operator.hpp"

#include <cmath>
#include <vector>

#include "wallflow/errors.hpp"
#include "wallflow/kernels.hpp"
#include "wallflow/quadrature.hpp"

namespace wallflow {

namespace {

// int_0^h (base + sgn x)^b e^{-mu x} (qa + dq x) dx
cplx cell(cplx mu, double h, double base, double sgn, int b, cplx qa, cplx dq) {
    if (b == 0) return exp_poly_integral(mu, h, qa, dq, 0.0);
    return exp_poly_integral(mu, h, base * qa, base * dq + sgn * qa, sgn * dq);
}

// G(t_i) = int_1^{t_i} (s-1)^b e^{-mu (t_i - s)} Q(s) ds
void forward_recursion(cplx mu, std::span<const double> t, const cplx* Q, int b, cplx* G) {
    G[0] = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double h = t[i + 1] - t[i];
        const cplx dq = (Q[i] - Q[i + 1]) / h;
        G[i + 1] = std::exp(-mu * h) * G[i] + cell(mu, h, t[i + 1] - 1.0, -1.0, b, Q[i + 1], dq);
    }
}

// G(t_i) = int_{t_i}^{t_max} (s-1)^b e^{-mu (s - t_i)} Q(s) ds
void backward_recursion(cplx mu, std::span<const double> t, const cplx* Q, int b, cplx* G) {
    const std::size_t N = t.size();
    G[N - 1] = 0.0;
    for (std::size_t i = N - 1; i-- > 0;) {
        const double h = t[i + 1] - t[i];
        const cplx dq = (Q[i + 1] - Q[i]) / h;
        G[i] = std::exp(-mu * h) * G[i + 1] + cell(mu, h, t[i] - 1.0, 1.0, b, Q[i], dq);
    }
}

// J(t_i) = int over [1, t_i] (forward) or [t_i, t_max] of (s-1)^b e^{lambda (s-1)} Q(s) ds
void cumulative(cplx lambda, std::span<const double> t, const cplx* Q, int b, bool forward, cplx* J) {
    const std::size_t N = t.size();
    std::vector<cplx> c(N - 1);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        const double h = t[i + 1] - t[i];
        const double s0 = t[i] - 1.0;
        c[i] = std::exp(lambda * s0) * cell(-lambda, h, s0, 1.0, b, Q[i], (Q[i + 1] - Q[i]) / h);
    }
    if (forward) {
        J[0] = 0.0;
        for (std::size_t i = 0; i + 1 < N; ++i) J[i + 1] = J[i] + c[i];
    } else {
        J[N - 1] = 0.0;
        for (std::size_t i = N - 1; i-- > 0;) J[i] = J[i + 1] + c[i];
    }
}

std::vector<ExpTerm> prop_table(IntegralSlot slot, int n, double k) {
    switch (slot) {
        case IntegralSlot::Eta: return eta_propagator_terms(n, k);
        case IntegralSlot::DkPropagator: return propagator_terms(n, k, true);
        default: return propagator_terms(n, k, false);
    }
}

}  // namespace

void exp_convolve_column(cplx mu, std::span<const double> t, const cplx* S, bool backward, cplx* out) {
    if (backward)
        backward_recursion(mu, t, S, 0, out);
    else
        forward_recursion(mu, t, S, 0, out);
}

void integral_column(IntegralSlot slot, double k, std::span<const double> t, const cplx* Q0,
                     const cplx* Q1, cplx* out) {
    const std::size_t N = t.size();
    const cplx kap = kappa(k);
    const double a = std::abs(k);
    std::vector<cplx> G(N);
    for (std::size_t i = 0; i < N; ++i) out[i] = 0.0;

    for (int n = 1; n <= 3; ++n) {
        const auto P = prop_table(slot, n, k);
        const bool forward = n == 1;
        for (int m = 0; m <= 1; ++m) {
            const cplx* Q = m == 0 ? Q0 : Q1;
            const auto F = kernel_terms(n, m, k, slot == IntegralSlot::DkKernel);
            for (const auto& f : F) {
                const cplx lf = exponent_of(f.kind, kap, a);
                bool separable_done = false;
                for (const auto& p : P) {
                    const cplx lp = exponent_of(p.kind, kap, a);
                    const bool fused = (n == 1 && p.kind == ExpKind::MinusKappa && f.kind == ExpKind::PlusKappa) ||
                                       (n == 3 && p.kind == ExpKind::PlusKappa);
                    if (fused) {
                        if (n == 1)
                            forward_recursion(kap, t, Q, f.p, G.data());
                        else
                            backward_recursion(kap, t, Q, f.p, G.data());
                        for (std::size_t i = 0; i < N; ++i)
                            out[i] += p.c * f.c * std::pow(t[i] - 1.0, p.p) * G[i];
                        continue;
                    }
                    if (lp.real() > 0.0) throw DomainError("integral_column: unpaired growing propagator");
                    if (!separable_done) {
                        cumulative(lf, t, Q, f.p, forward, G.data());
                        separable_done = true;
                    }
                    for (std::size_t i = 0; i < N; ++i) {
                        const double tau = t[i] - 1.0;
                        out[i] += p.c * f.c * std::pow(tau, p.p) * std::exp(lp * tau) * G[i];
                    }
                }
            }
        }
    }
}

ModeField integral_apply(IntegralSlot slot, const ModeField& Q0, const ModeField& Q1, int out_order) {
    if (Q0.grid() != Q1.grid()) throw DomainError("integral_apply: grid mismatch");
    if (Q0.order() != 0 || Q1.order() != 0) throw DomainError("integral_apply: sources must be order 0");
    if (out_order < 0 || out_order > 1) throw DomainError("integral_apply: order must be 0 or 1");
    const GridPtr& g = Q0.grid();
    const std::size_t nk = g->nk(), nt = g->nt();
    std::vector<cplx> out(nk * nt);
    const auto t = g->t();
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t ik = 0; ik < static_cast<std::ptrdiff_t>(nk); ++ik) {
        const double k = g->k()[static_cast<std::size_t>(ik)];
        cplx* col = out.data() + static_cast<std::size_t>(ik) * nt;
        integral_column(slot, k, t, Q0.column(static_cast<std::size_t>(ik)),
                        Q1.column(static_cast<std::size_t>(ik)), col);
        if (out_order == 1) {
            const cplx kap = kappa(k);
            for (std::size_t it = 0; it < nt; ++it) col[it] *= kap;
        }
    }
    return ModeField(g, out_order, std::move(out));
}

}  // namespace wallflow
