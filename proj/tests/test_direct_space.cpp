/// @file test_direct_space.cpp
/// @brief Inverse transform, decay certificate, pressure and the finite-difference oracle.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "wallflow/direct_space.hpp"
#include "wallflow/errors.hpp"
#include "wallflow/oracle.hpp"
#include "wallflow/pressure.hpp"

using namespace wallflow;

namespace {

GridPtr grid(std::size_t nk, std::size_t nt, double t_max) {
    GridConfig c;
    c.k_nodes_per_side = nk;
    c.t_nodes = nt;
    c.t_max = t_max;
    return SpectralGrid::make(c);
}

}  // namespace

TEST_CASE("inverse transform of closed-form pairs") {
    auto g = grid(256, 4, 8.0);
    const auto x = graded_x_nodes(40.0, 30, 0.1);

    auto zero = inverse_transform(ModeField(g, 0), x);
    for (double v : zero.values) CHECK(v == 0.0);
    CHECK(zero.imag_residue == 0.0);

    // e^{-k^2} <-> e^{-x^2/4} / (2 sqrt(pi))
    auto gauss = ModeField::generate(g, 0, [&](std::size_t ik, std::size_t) {
        const double k = g->k()[ik];
        return cplx{std::exp(-k * k), 0.0};
    });
    auto r = inverse_transform(gauss, x);
    CHECK(r.imag_residue < 1e-12);
    const double peak = 1.0 / (2.0 * std::sqrt(std::numbers::pi));
    for (std::size_t ix = 0; ix < x.size(); ++ix)
        for (std::size_t it = 0; it < g->nt(); ++it)
            CHECK(std::abs(r(ix, it) - peak * std::exp(-x[ix] * x[ix] / 4.0)) < 1e-3 * peak);

    // Order 1: stored e^{-k^2}, raw e^{-k^2}/kappa. Oracle: tanh-sinh on each half line.
    auto s1 = ModeField(g, 1, std::vector<cplx>(gauss.data()));
    auto r1 = inverse_transform(s1, x);
    boost::math::quadrature::tanh_sinh<double> ts;
    for (double xv : {0.0, 0.7, -3.0, 12.0}) {
        auto re = [&](double k) { return (std::exp(cplx{0.0, -k * xv}) * std::exp(-k * k) / kappa(k)).real(); };
        const double ref = (ts.integrate(re, -20.0, 0.0) + ts.integrate(re, 0.0, 20.0)) / (2.0 * std::numbers::pi);
        const auto ix = static_cast<std::size_t>(std::find(x.begin(), x.end(), xv) - x.begin());
        if (ix == x.size()) {
            auto one = inverse_transform(s1, std::vector<double>{xv});
            CHECK(std::abs(one(0, 0) - ref) < 2e-3 * std::abs(ref) + 1e-6);
        } else {
            CHECK(std::abs(r1(ix, 0) - ref) < 2e-3 * std::abs(ref) + 1e-6);
        }
    }

    // Broken conjugate symmetry is refused.
    auto odd = ModeField::generate(g, 0, [&](std::size_t ik, std::size_t) {
        const double k = g->k()[ik];
        return cplx{0.0, std::exp(-k * k)};
    });
    CHECK_THROWS_AS(inverse_transform(odd, x), DomainError);
}

TEST_CASE("Fourier L1 bound and slope fit") {
    auto g = grid(128, 8, 8.0);
    auto gauss = ModeField::generate(g, 0, [&](std::size_t ik, std::size_t it) {
        const double k = g->k()[ik];
        return cplx{std::exp(-k * k) / g->t()[it], 0.0};
    });
    auto l1 = fourier_l1(gauss);
    const auto x = graded_x_nodes(20.0, 20, 0.1);
    auto r = inverse_transform(gauss, x);
    for (std::size_t it = 0; it < g->nt(); ++it) {
        CHECK(l1[it] == doctest::Approx(0.5 / std::sqrt(std::numbers::pi) / g->t()[it]).epsilon(1e-3));
        for (std::size_t ix = 0; ix < x.size(); ++ix) CHECK(std::abs(r(ix, it)) <= l1[it] * (1 + 1e-3));
    }

    std::vector<double> t = geometric_nodes(1.0, 100.0, 40), y(40);
    for (std::size_t i = 0; i < t.size(); ++i) y[i] = 5.0 / (t[i] * t[i] * t[i]);
    CHECK(log_slope(t, y, 10.0, 100.0) == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("pressure column: manufactured solutions") {
    const auto t = geometric_nodes(1.0, 40.0, 2000);
    const std::size_t n = t.size();
    std::vector<cplx> S(n), G2(n), p(n);
    for (double k : {-2.0, 0.3, 1.5}) {
        const double a = std::abs(k);
        // Homogeneous: p = e^{-a(t-1)}, p'(1) = -a. Exact up to roundoff.
        pressure_column(k, t, S.data(), G2.data(), -a, p.data());
        double err = 0;
        for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(p[i] - std::exp(-a * (t[i] - 1.0))));
        CHECK(err < 1e-8);

        // p = t e^{-(t-1)}: p'(1) = 0, R = (t - 2 - a^2 t) e^{-(t-1)}, once as S, once as -G2'.
        for (int form = 0; form < 2; ++form) {
            for (std::size_t i = 0; i < n; ++i) {
                const double e = std::exp(-(t[i] - 1.0));
                S[i] = form == 0 ? (t[i] - 2.0 - a * a * t[i]) * e : 0.0;
                G2[i] = form == 1 ? ((1.0 - a * a) * (t[i] + 1.0) - 2.0) * e : 0.0;
            }
            pressure_column(k, t, S.data(), G2.data(), 0.0, p.data());
            double e2 = 0;
            for (std::size_t i = 0; i < n; ++i) e2 = std::max(e2, std::abs(p[i] - t[i] * std::exp(-(t[i] - 1.0))));
            INFO("k=" << k << " form=" << form);
            CHECK(e2 < 1e-5);
        }
        std::fill(S.begin(), S.end(), 0.0);
        std::fill(G2.begin(), G2.end(), 0.0);
    }
    pressure_column(1.0, t, S.data(), G2.data(), 0.0, p.data());
    for (auto v : p) CHECK(v == cplx{});
    CHECK_THROWS_AS(pressure_column(0.0, t, S.data(), G2.data(), 0.0, p.data()), DomainError);
}

TEST_CASE("finite-difference oracle") {
    auto g = grid(16, 256, 128.0);
    ForceSpec f;
    for (double k : {0.25, 1.0, 4.0}) {
        auto c = oracle_compare(f, g, k, 1024);
        INFO("k=" << k);
        CHECK(c.rel_l2 < 1e-2);
    }

    // Second-order self-convergence of the oracle at fixed boundary values.
    const cplx left{1e-4, 2e-5}, right{3e-6, -1e-6};
    auto o1 = oseen_oracle(f, 1.0, 9.0, 128, left, right);
    auto o2 = oseen_oracle(f, 1.0, 9.0, 256, left, right);
    auto o4 = oseen_oracle(f, 1.0, 9.0, 512, left, right);
    double d12 = 0, d24 = 0;
    for (std::size_t j = 0; j <= 128; ++j) {
        d12 = std::max(d12, std::abs(o1.omega[j] - o2.omega[2 * j]));
        d24 = std::max(d24, std::abs(o2.omega[2 * j] - o4.omega[4 * j]));
    }
    CHECK(d12 / d24 == doctest::Approx(4.0).epsilon(0.1));

    ForceSpec z;
    z.epsilon = 0.0;
    auto oz = oseen_oracle(z, 1.0, 9.0, 64, 0.0, 0.0);
    for (auto v : oz.omega) CHECK(v == cplx{});
    CHECK_THROWS_AS(oseen_oracle(f, 1.0, 9.0, 2, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(oseen_oracle(f, 1.0, 1.0, 64, 0.0, 0.0), DomainError);
}

TEST_CASE("decay certificate and pressure on a small solved state") {
    auto g = grid(48, 96, 64.0);
    ConvolutionPlan plan(g);
    SolverOptions opt;
    const auto x = graded_x_nodes(4.0 * 64.0 * 64.0, 60);

    ForceSpec zero;
    zero.epsilon = 0.0;
    auto z = picard_solve(zero, plan, opt);
    dk_fixed_point(z, plan, opt);
    auto rz = decay_certificate(z, x);
    CHECK(rz.M_u == 0.0);
    CHECK(rz.M_v == 0.0);
    CHECK(rz.M_w == 0.0);
    CHECK(rz.M_x == 0.0);
    auto pz = pressure_solve(z, plan);
    CHECK(pz.p.sup() == 0.0);

    ForceSpec f;
    auto s = picard_solve(f, plan, opt);
    dk_fixed_point(s, plan, opt);
    auto r = decay_certificate(s, x);
    CHECK(r.imag_residue < 1e-10);
    for (double m : {r.M_u, r.M_v, r.M_w, r.M_x}) {
        CHECK(std::isfinite(m));
        CHECK(m > 0.0);
    }
    // Fourier-side chain dominates the direct-space sup at every t.
    for (std::size_t it = 0; it < r.t.size(); ++it) {
        const double y = r.t[it];
        CHECK(r.sup_w[it] <= r.chain_w[it] * (1 + 1e-2) + 1e-300);
        CHECK(r.sup_u[it] <= r.chain_u[it] * (1 + 1e-2) + 1e-300);
        (void)y;
    }
    CHECK(r.chain_slope_max < 0.1);
    CHECK(r.slope_sup == doctest::Approx(-3.0).epsilon(0.1));

    auto p = pressure_solve(s, plan);
    CHECK(p.p.reality_residue() < 1e-12);
    CHECK(!p.gauge.empty());

    // The FD residual is dominated by the edges of the force support and is
    // second order in the t spacing.
    auto g2 = grid(48, 192, 64.0);
    ConvolutionPlan plan2(g2);
    auto s2 = picard_solve(f, plan2, opt);
    auto p2 = pressure_solve(s2, plan2);
    CHECK(p.residual_x < 0.1);
    CHECK(p.residual_y < 0.1);
    CHECK(p.residual_x / p2.residual_x > 3.0);
    CHECK(p.residual_y / p2.residual_y > 3.0);
}
