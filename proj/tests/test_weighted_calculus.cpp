/// @file test_weighted_calculus.cpp
/// @brief Convolution quadrature, convolution and semigroup bound sweeps, envelope bookkeeping.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "wallflow/errors.hpp"
#include "wallflow/weighted_calculus.hpp"

using namespace wallflow;

namespace {

ModeField mu_field(const GridPtr& g, double alpha, double r) {
    return ModeField::generate(g, 0, [&](std::size_t ik, std::size_t it) {
        return cplx(mu_weight(alpha, r, g->k()[ik], g->t()[it]), 0.0);
    });
}

/// (1/2pi) int f(k-x) g(x) dx by tanh-sinh on pieces split at the given points.
template <class F>
double oracle(F&& integrand, std::vector<double> pts) {
    boost::math::quadrature::tanh_sinh<double> ts;
    double s = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += ts.integrate(integrand, pts[i], pts[i + 1]);
    return s / (2 * std::numbers::pi);
}

}  // namespace

TEST_CASE("convolution basic properties") {
    auto g = SpectralGrid::make({1e-6, 64, 96, 16, 5});
    ConvolutionPlan plan(g);
    auto f = mu_field(g, 3, 1);
    auto h = mu_field(g, 3, 2);
    CHECK(plan.convolve(f, ModeField(g, 0)).sup() == 0.0);
    auto fh = plan.convolve(f, h);
    auto hf = plan.convolve(h, f);
    CHECK((fh - hf).sup() <= 1e-12 * fh.sup());
    auto ff = plan.convolve(f, f);
    const std::size_t i0 = g->first_positive();
    for (std::size_t it = 0; it < g->nt(); ++it) {
        for (std::size_t ik = 0; ik < g->nk(); ++ik) {
            CHECK(ff(ik, it).real() > 0);
            CHECK(std::abs(ff(ik, it) - ff(g->mirror(ik), it)) <= 1e-13 * ff.sup());
            CHECK(ff(ik, it).real() <= ff(i0, it).real() * (1 + 1e-12));
        }
    }
    // Linearity
    const cplx a{0.3, -1.2}, b{2.0, 0.5};
    auto lin = plan.convolve(f, f * a + h * b);
    auto sep = plan.convolve(f, f) * a + plan.convolve(f, h) * b;
    CHECK((lin - sep).sup() <= 1e-14 * sep.sup());
    CHECK_THROWS_AS(plan.convolve(f.as_order(1), f.as_order(1)), DomainError);
}

TEST_CASE("smooth convolution against refinement and an adaptive oracle") {
    std::vector<double> t{1.0, 4.0};
    auto g = SpectralGrid::from_nodes(geometric_nodes(1e-6, 64, 256), t);
    auto g4 = g->refined()->refined();
    auto at0 = [&](const GridPtr& gg) {
        ConvolutionPlan p(gg);
        return p.convolve(mu_field(gg, 3, 1), mu_field(gg, 3, 2))(gg->first_positive(), gg->nt() - 1).real();
    };
    const double c1 = at0(g), c4 = at0(g4);
    CHECK(std::abs(c1 - c4) < 5e-3 * std::abs(c4));
    const double k = g->k_min();
    const double ref = oracle([&](double x) { return mu_weight(3, 1, k - x, 4) * mu_weight(3, 2, x, 4); },
                              {-64 + k, -1, 0, 1, 64});
    CHECK(std::abs(c1 - ref) < 5e-3 * ref);
}

TEST_CASE("singular convolution against an adaptive oracle") {
    auto g = SpectralGrid::make({1e-6, 64, 256, 2, 2});
    ConvolutionPlan plan(g);
    auto f = ModeField::generate(g, 0, [&](std::size_t ik, std::size_t) {
        return cplx(std::exp(-g->k()[ik] * g->k()[ik]), 0.0);
    });
    auto b = ModeField::generate(g, 1, [&](std::size_t ik, std::size_t) {
        const double k = g->k()[ik];
        const cplx kap = kappa(k);
        return kap / std::abs(kap) * std::exp(-k * k / 2);
    });
    auto c = plan.convolve(f, b);
    for (double kq : {0.05, 0.5, 2.0}) {
        const std::size_t ik = g->first_positive() + g->locate_k(kq) - g->first_positive();
        const double k = g->k()[ik];
        const double ref = oracle(
            [&](double x) { return std::exp(-(k - x) * (k - x)) * std::exp(-x * x / 2) / std::abs(kappa(x)); },
            {-12, 0, k, 12});
        CAPTURE(k);
        CHECK(std::abs(c(ik, 0).real() - ref) < 1e-2 * ref);  // linear interpolation on a 7% log step
        CHECK(std::abs(c(ik, 0).imag()) < 1e-12 + 1e-3 * ref);
    }
}

TEST_CASE("envelope product map") {
    auto u = envelope_product_map({3.0, 0.5, 0.0, 0}, 1.5, 0.0);
    CHECK(u.p == 1.5);
    CHECK(u.q == 1.0);
    auto v = envelope_product_map({3.0, 0.5, 1.0, 0}, 1.5, 0.0);
    CHECK(v.p == 1.5);
    CHECK(v.q == 2.0);
    auto z = envelope_product_map({3.0, 0.0, 0.0, 0}, 0.0, 0.0);
    CHECK(z.p == 0.5);
    CHECK(z.q == 0.5);
    CHECK_THROWS_AS(envelope_product_map({2.0, 0, 0, 0}, 0, 0), DomainError);
}

TEST_CASE("convolution bound sweeps") {
    auto g = convolution_check_grid(96);
    for (auto r : {conv_bound_report(3, 3, 0, 0, g), conv_bound_report(3, 2, 1, 2, g),
                   singular_conv_bound_report(1, 3, 2, 2, 2, 2, 0.5, g),
                   singular_conv_bound_report(2, 3, 2, 2, 2, 1, 1.0, g),
                   singular_conv_bound_report(2, 3, 2, 2, 2, 1, 0.5, g)}) {
        CAPTURE(r.name);
        CAPTURE(r.max_ratio);
        CAPTURE(r.refined_max_ratio);
        CHECK(std::isfinite(r.max_ratio));
        CHECK(r.pass);
    }
}

TEST_CASE("semigroup integrals") {
    SemigroupParams p{3.0, 2.0, 0.0, 0.0, 2.0};
    for (double t : {1.0, 3.0, 50.0})
        CHECK(semigroup_lhs(Semigroup::K3, p, 0.0, t) / semigroup_rhs(Semigroup::K3, p, 0.0, t) ==
              doctest::Approx(1.0).epsilon(1e-8));
    SemigroupParams q{3.0, 1.0, 1.0, 0.0, 2.5};
    const double r = semigroup_lhs(Semigroup::L2, q, 1.0, 8.0) / semigroup_rhs(Semigroup::L2, q, 1.0, 8.0);
    CHECK(std::isfinite(r));
    CHECK(r > 0);
    for (double d : {3.0, 2.0, 1.5}) {
        SemigroupParams s{3.0, 2.0, 0.0, 1.0, d};
        CAPTURE(d);
        CHECK(std::abs(semigroup_slope(Semigroup::L1, s)) < 0.1);
    }
    // The wrong shape is detected: the log case fitted against a constant.
    SemigroupParams s{3.0, 2.0, 0.0, 1.0, 2.0};
    const double naive = semigroup_slope(Semigroup::L1, {3.0, 2.0, 0.0, 1.0, 2.0 + 1e-9});
    CHECK(std::abs(naive) > 0.1);
    CHECK_THROWS_AS(semigroup_lhs(Semigroup::L3, {3, 1, 0, 0, 1.0}, 1, 1), DomainError);
}

TEST_CASE("semigroup sweep") {
    auto g = semigroup_check_grid(16, 13);
    auto r = semigroup_bound_report(Semigroup::K3, {3.0, 2.0, 0.5, 0.0, 2.0}, *g);
    CHECK(std::isfinite(r.max_ratio));
    CHECK(r.pass);
}
