#include "wallflow/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "wallflow/errors.hpp"
#include "wallflow/inequalities.hpp"
#include "wallflow/kernel_bounds.hpp"
#include "wallflow/kernels.hpp"
#include "wallflow/oracle.hpp"
#include "wallflow/quadrature.hpp"
#include "wallflow/weighted_calculus.hpp"

namespace wallflow {

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

CheckResult verdict(std::string name, double observed, double tol, std::string detail = {}) {
    return {std::move(name), std::isfinite(observed) && observed < tol, observed, tol, std::move(detail)};
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

cplx naive(int l, int n, int m, double k, double t, double s) {
    const cplx K = l == 1 ? dk_propagator(n, k, t - 1) : propagator(n, k, t - 1);
    const cplx f = l == 2 ? dk_f_kernel(n, m, k, s - 1) : f_kernel(n, m, k, s - 1);
    return K * f;
}

// Residual of an FD t-derivative of a against b, relative to scale.
double fd_residual(const ModeField& a, const ModeField& b, double scale) {
    const GridPtr& g = a.grid();
    const auto t = g->t();
    double r = 0.0;
    for (std::size_t ik = 0; ik < g->nk(); ++ik)
        for (std::size_t it = 2; it + 2 < g->nt(); ++it) {
            std::vector<double> x(t.begin() + it - 2, t.begin() + it + 3);
            const auto w = fd_weights(t[it], x, 1);
            cplx d{};
            for (int j = 0; j < 5; ++j) d += w[j] * a(ik, it - 2 + j);
            r = std::max(r, std::abs(d - b(ik, it)));
        }
    return r == 0.0 ? 0.0 : r / std::max(scale, 1e-300);
}

}  // namespace

CheckResult check_kernel_derivatives(double tol) {
    const double h = 1e-5;
    double worst = 0.0;
    for (double k : {-20.0, -2.0, -0.5, -0.05, 0.05, 0.5, 2.0, 20.0})
        for (double x : {0.1, 1.0, 5.0})
            for (int n = 1; n <= 3; ++n) {
                const cplx fd = (propagator(n, k + h, x) - propagator(n, k - h, x)) / (2 * h);
                worst = std::max(worst, rel(dk_propagator(n, k, x), fd));
                for (int m = 0; m <= 1; ++m) {
                    const cplx fdf = (f_kernel(n, m, k + h, x) - f_kernel(n, m, k - h, x)) / (2 * h);
                    worst = std::max(worst, rel(dk_f_kernel(n, m, k, x), fdf));
                }
            }
    return verdict("kernel_dk_consistency", worst, tol, "max relative error vs centered FD, h = 1e-5");
}

CheckResult check_fused_products(double tol) {
    double worst = 0.0;
    for (double k : {-6.0, -0.5, -0.05, 0.05, 0.5, 6.0})
        for (double t : {1.0, 1.7, 4.0})
            for (double ds : {0.0, 0.6, 2.5})
                for (int l = 0; l <= 3; ++l)
                    for (int n = 1; n <= 3; ++n)
                        for (int m = 0; m <= 1; ++m) {
                            const double s = n == 1 ? std::max(1.0, t - ds) : t + ds;
                            const double scale = std::abs(f_kernel(n, m, k, s - 1)) * std::abs(propagator(n, k, t - 1)) +
                                                 std::abs(dk_f_kernel(n, m, k, s - 1)) +
                                                 std::abs(dk_propagator(n, k, t - 1)) + 1.0;
                            worst = std::max(worst, std::abs(fused_integrand(l, n, m, k, t, s) - naive(l, n, m, k, t, s)) / scale);
                        }
    bool finite = true;
    for (int l = 0; l <= 3; ++l)
        for (int n = 1; n <= 3; ++n)
            for (int m = 0; m <= 1; ++m)
                for (double k : {-64.0, 64.0}) {
                    const double s = n == 1 ? 127.0 : 128.0;
                    finite = finite && std::isfinite(std::abs(fused_integrand(l, n, m, k, 128.0, s)));
                }
    bool naive_overflows = false;
    try {
        (void)naive(0, 3, 1, 64.0, 128.0, 128.0);
    } catch (const OverflowGuardError&) {
        naive_overflows = true;
    }
    CheckResult r = verdict("fused_product_equivalence", worst, tol, "normalized max |fused - naive|");
    r.pass = r.pass && finite && naive_overflows;
    if (!finite) r.detail += "; fused form not finite at t = 128, |k| = 64";
    return r;
}

CheckResult check_product_map(double alpha) {
    const WeightEnvelope u{alpha, 0.5, 0.0, 0}, v{alpha, 0.5, 1.0, 0};
    const auto a = envelope_product_map(u, 1.5, 0.0);
    const auto b = envelope_product_map(v, 1.5, 0.0);
    const double dev = std::abs(a.alpha - alpha) + std::abs(a.p - 1.5) + std::abs(a.q - 1.0) +
                       std::abs(b.alpha - alpha) + std::abs(b.p - 1.5) + std::abs(b.q - 2.0);
    return {"product_map_bookkeeping", dev == 0.0, dev, 0.0,
            fmt("u*d -> B(alpha,%g,%g)", a.p, a.q) + fmt(", v*d -> B(alpha,%g,%g)", b.p, b.q)};
}

std::vector<BoundReport> bound_suite(bool fast) {
    std::vector<BoundReport> out;
    const GridPtr kg = SpectralGrid::make({1e-6, 64.0, fast ? 64u : 256u, 128.0, 16});
    out.push_back(kappa_inequality_report(*kg));
    out.push_back(weight_inequality_report(*SpectralGrid::make({1e-4, 64.0, 64, 128.0, 64})));
    for (auto which : {KernelBoundKind::F, KernelBoundKind::KappaDkF})
        for (auto& r : kernel_bound_report(*kg, which)) out.push_back(std::move(r));

    const GridPtr cg = convolution_check_grid(fast ? 64 : 128);
    out.push_back(conv_bound_report(3, 3, 0, 0, cg));
    out.push_back(conv_bound_report(3, 2, 1, 2, cg));
    out.push_back(singular_conv_bound_report(1, 3, 2, 2, 2, 2, 0.5, cg));
    out.push_back(singular_conv_bound_report(2, 3, 2, 2, 2, 1, 1.0, cg));
    out.push_back(singular_conv_bound_report(2, 3, 2, 2, 2, 1, 0.5, cg));

    const GridPtr sg = fast ? semigroup_check_grid(16, 13) : semigroup_check_grid();
    for (double d : {3.0, 2.0, 1.5}) out.push_back(semigroup_bound_report(Semigroup::L1, {3.0, 2.0, 0.0, 1.0, d}, *sg));
    out.push_back(semigroup_bound_report(Semigroup::L2, {3.0, 2.0, 0.0, 0.0, 2.5}, *sg));
    out.push_back(semigroup_bound_report(Semigroup::L2, {3.0, 2.0, 1.0, 0.0, 2.5}, *sg));
    out.push_back(semigroup_bound_report(Semigroup::L3, {3.0, 2.0, 0.0, 0.0, 2.5}, *sg));
    out.push_back(semigroup_bound_report(Semigroup::L3, {3.0, 2.0, 1.0, 0.0, 2.5}, *sg));
    out.push_back(semigroup_bound_report(Semigroup::K3, {3.0, 2.0, 0.5, 0.0, 2.0}, *sg));
    return out;
}

CheckResult check_reality(const SolverState& s, double tol) {
    double r = std::max({s.omega.reality_residue(), s.u.reality_residue(), s.v.reality_residue(),
                         s.Q0.reality_residue(), s.Q1.reality_residue()});
    if (s.has_derivative) r = std::max(r, (s.d * cplx{0.0, -1.0}).reality_residue());
    return verdict("reality", r, tol, "max |f(k) - conj f(-k)| / max(1, sup)");
}

CheckResult check_incompressibility(const SolverState& s, double tol) {
    Companions c;
    c.u = s.u;
    const double r = fd_residual(s.v, dv_dt(c), s.omega.sup());
    return verdict("incompressibility", r, tol, "max |FD_t v - ik u| / sup |omega|");
}

CheckResult check_vorticity_identity(const SolverState& s, double tol) {
    // -u' - ikv = omega  <=>  FD_t u = -ikv - omega
    const GridPtr& g = s.grid;
    const ModeField target = ModeField::generate(g, 0, [&](std::size_t ik, std::size_t it) {
        return -I * g->k()[ik] * s.v(ik, it) - s.omega(ik, it);
    });
    const double r = fd_residual(s.u, target, s.omega.sup());
    return verdict("vorticity_identity", r, tol, "max |FD_t u + ikv + omega| / sup |omega|");
}

CheckResult check_wall_velocity(const SolverState& s, double tol) {
    return verdict("wall_u", s.wall_u_max, tol, "max_k |u(k,1)| / sup |u|");
}

CheckResult check_oracle(const ForceSpec& f, const GridPtr& grid, double k, double tol) {
    const OracleComparison c = oracle_compare(f, grid, k);
    return verdict(fmt("oracle_k%g", k), c.rel_l2, tol, fmt("relative L2 on (1, %.4g), 1024 FD intervals", c.t_box));
}

CheckResult check_dk_fd(const SolverState& s, double tol) {
    if (!s.has_derivative) return {"dk_vs_fd", false, NAN, tol, "no derivative solve"};
    const GridPtr& g = s.grid;
    const auto K = g->k();
    double err = 0, scale = 0;
    for (std::size_t ik = 2; ik + 2 < g->nk(); ++ik) {
        const double k = K[ik];
        if (std::abs(k) < 0.1 || std::abs(k) > 5.0) continue;
        std::vector<double> x(K.begin() + ik - 2, K.begin() + ik + 3);
        const auto w = fd_weights(k, x, 1);
        const cplx kap = kappa(k);
        for (std::size_t it = 0; it < g->nt(); ++it) {
            cplx fd{};
            for (int j = 0; j < 5; ++j) fd += w[j] * s.omega(ik - 2 + j, it);
            err = std::max(err, std::abs(fd - s.d(ik, it) / kap));
            scale = std::max(scale, std::abs(fd));
        }
    }
    const double r = err == 0.0 ? 0.0 : err / std::max(scale, 1e-300);
    return verdict("dk_vs_fd", r, tol, "max |d - FD_k omega| / max |FD_k omega| on 0.1 <= |k| <= 5");
}

}  // namespace wallflow
