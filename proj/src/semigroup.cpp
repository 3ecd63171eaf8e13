#include "wallflow/weighted_calculus.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <functional>
#include <cmath>
#include <cstdio>
#include <string>

#include "wallflow/errors.hpp"

namespace wallflow {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

double gk(const std::function<double(double)>& f, double a, double b) {
    if (!(b > a)) return 0.0;
    return GK::integrate(f, a, b, 12, 1e-9);
}

/// int_t^inf g(s) ds with a leading stretch resolving exp(-rate (s - t)) and the
/// remainder mapped by u = 1/s.
double tail(const std::function<double(double)>& g, double t, double rate) {
    // A slowly decaying exponential is left to the u = 1/s map entirely.
    const double head = rate * t > 1.0 ? 40.0 / rate : 0.0;
    double sum = 0.0;
    double a = t;
    if (head > 0.0) {
        // Geometric pieces keep the exponential scale resolved near s = t.
        double w = std::min(head, 1.0 / rate);
        while (a < t + head) {
            const double b = std::min(t + head, a + w);
            sum += gk(g, a, b);
            a = b;
            w *= 2.0;
        }
    }
    sum += gk([&](double u) { return u > 0.0 ? g(1.0 / u) / (u * u) : 0.0; }, 0.0, 1.0 / a);
    return sum;
}

void check(Semigroup which, const SemigroupParams& p) {
    if (p.alpha < 0 || p.r < 0) throw DomainError("semigroup: alpha, r must be >= 0");
    switch (which) {
        case Semigroup::L1:
            if (!(p.gamma + 1.0 >= p.beta && p.beta >= 0.0) || p.delta < 0)
                throw DomainError("semigroup L1: need gamma+1 >= beta >= 0, delta >= 0");
            break;
        case Semigroup::L2:
            if (p.beta != 0.0 && p.beta != 1.0) throw DomainError("semigroup L2: beta in {0,1}");
            break;
        case Semigroup::L3:
            if ((p.beta != 0.0 && p.beta != 1.0) || !(p.delta > 1.0))
                throw DomainError("semigroup L3: beta in {0,1}, delta > 1");
            break;
        case Semigroup::K3:
            if (p.beta < 0.0 || p.beta > 1.0 || !(p.delta > 1.0))
                throw DomainError("semigroup K3: beta in [0,1], delta > 1");
            break;
    }
}

}  // namespace

double semigroup_lhs(Semigroup which, const SemigroupParams& p, double k, double t) {
    check(which, p);
    const double L = -lambda_minus(k);
    const double a = std::abs(k);
    switch (which) {
        case Semigroup::L1: {
            const double c = std::pow(L, p.beta);
            auto f = [&](double s) {
                return std::exp(-L * (t - s)) * c * std::pow(s - 1.0, p.gamma) * std::pow(s, -p.delta) *
                       mu_weight(p.alpha, p.r, k, s);
            };
            const double m = 0.5 * (t + 1.0);
            // Split where the exponential starts to matter.
            const double cut = std::max(1.0, m - 40.0 / std::max(L, 1e-300));
            return gk(f, 1.0, cut) + gk(f, cut, m);
        }
        case Semigroup::L2: {
            const double c = std::pow(L, p.beta);
            auto f = [&](double s) {
                return std::exp(-L * (t - s)) * c * std::pow(s, -p.delta) * mu_weight(p.alpha, p.r, k, s);
            };
            const double m = 0.5 * (t + 1.0);
            const double cut = std::max(m, t - 40.0 / std::max(L, 1e-300));
            return gk(f, m, cut) + gk(f, cut, t);
        }
        case Semigroup::L3: {
            const double c = std::pow(L, p.beta);
            auto f = [&](double s) {
                return std::exp(-L * (s - t)) * c * std::pow(s, -p.delta) * mu_weight(p.alpha, p.r, k, s);
            };
            return tail(f, t, L);
        }
        case Semigroup::K3: {
            const double c = std::pow(a, p.beta);
            auto f = [&](double s) {
                return std::exp(-a * (s - t)) * c * std::pow(s, -p.delta) * mu_weight(p.alpha, p.r, k, s);
            };
            return tail(f, t, a);
        }
    }
    return 0.0;
}

double semigroup_rhs(Semigroup which, const SemigroupParams& p, double k, double t) {
    if (which == Semigroup::L1) {
        const double mt = mu_weight(p.alpha, 2.0, k, t) * std::pow(t, -p.beta);
        const double e = p.gamma + 1.0;
        if (p.delta > e) return mt;
        if (p.delta == e) return std::log(1.0 + t) * mt;
        return std::pow(t, e - p.delta) * mt;
    }
    return std::pow(t, -(p.delta - 1.0 + p.beta)) * mu_weight(p.alpha, p.r, k, t);
}

double semigroup_slope(Semigroup which, const SemigroupParams& p, double t0, double t1) {
    const int n = 21;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double t = t0 * std::pow(t1 / t0, double(i) / (n - 1));
        const double x = std::log(t);
        const double y = std::log(semigroup_lhs(which, p, 0.0, t) / semigroup_rhs(which, p, 0.0, t));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

double sg_sweep(Semigroup which, const SemigroupParams& p, const SpectralGrid& g, BoundReport* out) {
    std::vector<double> ks{0.0};
    for (std::size_t ik = g.first_positive(); ik < g.nk(); ++ik) ks.push_back(g.k()[ik]);
    const auto ts = g.t();
    std::vector<double> ratio(ks.size() * ts.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
            const double rhs = semigroup_rhs(which, p, ks[i], ts[j]);
            const double lhs = semigroup_lhs(which, p, ks[i], ts[j]);
            ratio[i * ts.size() + j] = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? INFINITY : 0.0);
        }
    double worst = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
            const double r = ratio[i * ts.size() + j];
            worst = std::max(worst, r);
            if (out) out->rows.push_back({ks[i], ts[j], r});
        }
    return worst;
}

}  // namespace

BoundReport semigroup_bound_report(Semigroup which, const SemigroupParams& p, const SpectralGrid& grid) {
    static const char* names[] = {"sgL1", "sgL2", "sgL3", "sgk3"};
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s_a%g_r%g_b%g_g%g_d%g", names[int(which)], p.alpha, p.r, p.beta, p.gamma,
                  p.delta);
    BoundReport rep;
    rep.name = buf;
    rep.columns = {"k", "t", "ratio"};
    rep.max_ratio = sg_sweep(which, p, grid, &rep);
    rep.refined_max_ratio = sg_sweep(which, p, *grid.refined(), nullptr);
    finalize_refinement(rep);
    if (which == Semigroup::L1 && p.beta == 0.0) {
        const double sl = semigroup_slope(which, p);
        std::snprintf(buf, sizeof buf, "slope=%.4f", sl);
        rep.note = buf;
        rep.pass = rep.pass && std::abs(sl) < 0.1;
    }
    return rep;
}

GridPtr semigroup_check_grid(std::size_t k_nodes, std::size_t t_nodes) {
    return SpectralGrid::from_nodes(geometric_nodes(1e-6, 64.0, k_nodes), geometric_nodes(1.0, 1e4, t_nodes));
}

}  // namespace wallflow
