#include "wallflow/weighted_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "wallflow/errors.hpp"

namespace wallflow {

GridPtr convolution_check_grid(std::size_t k_nodes_per_side) {
    std::vector<double> t;
    for (double v = 1.0; v <= 64.0; v *= 2.0) t.push_back(v);
    return SpectralGrid::from_nodes(geometric_nodes(1e-6, 64.0, k_nodes_per_side), t);
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

template <class Bound>
double conv_sweep(const GridPtr& g, const ModeField& a, const ModeField& b, Bound&& bound, BoundReport* out) {
    ConvolutionPlan plan(g);
    const ModeField c = plan.convolve(a, b);
    double worst = 0.0;
    for (std::size_t ik = 0; ik < g->nk(); ++ik) {
        for (std::size_t it = 0; it < g->nt(); ++it) {
            const double k = g->k()[ik], t = g->t()[it];
            const double r = std::abs(c(ik, it)) / bound(k, t);
            worst = std::max(worst, r);
            if (out && k > 0) out->rows.push_back({k, t, r});
        }
    }
    return worst;
}

ModeField mu_field(const GridPtr& g, double alpha, double r) {
    return ModeField::generate(g, 0, [&](std::size_t ik, std::size_t it) {
        return cplx(mu_weight(alpha, r, g->k()[ik], g->t()[it]), 0.0);
    });
}

ModeField root_field(const GridPtr& g, double beta, double s) {
    return ModeField::generate(g, 1, [&](std::size_t ik, std::size_t it) {
        const cplx kap = kappa(g->k()[ik]);
        return kap / std::abs(kap) * mu_weight(beta, s, g->k()[ik], g->t()[it]);
    });
}

}  // namespace

BoundReport conv_bound_report(double alpha, double beta, double r, double s, const GridPtr& grid) {
    if (!(alpha > 1.0) || !(beta > 1.0)) throw DomainError("conv_bound_report: need alpha, beta > 1");
    BoundReport rep;
    rep.name = "conv_a" + num(alpha) + "_b" + num(beta) + "_r" +
               num(r) + "_s" + num(s);
    rep.columns = {"k", "t", "ratio"};
    auto bound = [&](double k, double t) {
        return std::pow(t, -r) * mu_weight(beta, s, k, t) + std::pow(t, -s) * mu_weight(alpha, r, k, t);
    };
    auto run = [&](const GridPtr& g, BoundReport* out) {
        return conv_sweep(g, mu_field(g, alpha, r), mu_field(g, beta, s), bound, out);
    };
    rep.max_ratio = run(grid, &rep);
    rep.refined_max_ratio = run(grid->refined(), nullptr);
    finalize_refinement(rep);
    return rep;
}

BoundReport singular_conv_bound_report(int display, double alpha, double beta, double r, double s, double s_prime,
                                       double c, const GridPtr& grid) {
    if (!(alpha > 1.0) || !(beta > 1.0)) throw DomainError("singular_conv_bound_report: need alpha, beta > 1");
    if (s_prime > s) throw DomainError("singular_conv_bound_report: need s' <= s");
    if (display != 1 && display != 2) throw DomainError("singular_conv_bound_report: display must be 1 or 2");
    if (display == 2 && c != 0.5 && c != 1.0) throw DomainError("singular_conv_bound_report: c must be 1/2 or 1");
    BoundReport rep;
    rep.name = display == 1 ? "conv_root_sp" + num(s_prime)
                            : "conv_root_gain_c" + num(c) + "_sp" +
                                  num(s_prime);
    rep.columns = {"k", "t", "ratio"};
    auto bound = [&](double k, double t) {
        const double tail = std::pow(t, -0.5 * s) * mu_weight(alpha, r, k, t);
        if (display == 1) {
            const double m = std::max(std::pow(t, -0.5 * s), std::pow(t, -0.5 * (s + r - s_prime)));
            return m * mu_weight(beta, s_prime, k, t) + tail;
        }
        const double m = std::max(std::pow(t, -0.5 * s), std::pow(t, -(r - c * s_prime)));
        return m * mu_weight(beta + c, s_prime, k, t) + tail;
    };
    auto run = [&](const GridPtr& g, BoundReport* out) {
        return conv_sweep(g, mu_field(g, alpha, r), root_field(g, beta, s), bound, out);
    };
    rep.max_ratio = run(grid, &rep);
    rep.refined_max_ratio = run(grid->refined(), nullptr);
    finalize_refinement(rep);
    return rep;
}

WeightEnvelope envelope_product_map(const WeightEnvelope& f, double p2, double q2) {
    if (!(f.alpha > 2.0)) throw DomainError("envelope_product_map: requires alpha > 2");
    if (f.n != 0) throw DomainError("envelope_product_map: first factor must have order 0");
    const double p1 = f.p, q1 = f.q;
    WeightEnvelope out;
    out.alpha = f.alpha;
    out.n = 0;
    out.p = std::min({p1 + p2 + 0.5, p1 + q2 + 1.0, q1 + p2 + 0.5});
    out.q = std::min(q1 + q2 + 1.0, q1 + p2 + 0.5);
    return out;
}

}  // namespace wallflow
