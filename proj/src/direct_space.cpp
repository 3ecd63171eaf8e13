#include "wallflow/direct_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wallflow/errors.hpp"
#include "wallflow/quadrature.hpp"

namespace wallflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// int_{-c}^{c} phi(k) e^{-ikx} / kappa(k) dk with phi the hat of the left
// (side = -1) or right node; k = +-w^2 removes the 1/sqrt|k| singularity.
cplx gap_weight(double c, double x, int side) {
    const GaussRule& g = gauss_legendre(16);
    const double wmax = std::sqrt(c);
    cplx s{};
    for (int half : {-1, 1})
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            const double w = 0.5 * wmax * (g.x[q] + 1.0);
            const double k = half * w * w;
            const double phi = side < 0 ? (c - k) / (2.0 * c) : (k + c) / (2.0 * c);
            s += 0.5 * wmax * g.w[q] * 2.0 * w * phi * std::exp(cplx{0.0, -k * x}) / kappa(k);
        }
    return s;
}

}  // namespace

std::vector<double> graded_x_nodes(double x_max, std::size_t n_per_side, double x_min) {
    auto pos = geometric_nodes(x_min, x_max, n_per_side);
    std::vector<double> x;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) x.push_back(-*it);
    x.push_back(0.0);
    x.insert(x.end(), pos.begin(), pos.end());
    return x;
}

RealField inverse_transform(const ModeField& f, std::span<const double> xs) {
    const GridPtr& g = f.grid();
    const std::size_t nk = g->nk(), nt = g->nt(), nx = xs.size();
    const auto K = g->k();
    const std::size_t gap = g->first_positive() - 1;

    std::vector<cplx> raw(nk * nt);
    for (std::size_t ik = 0; ik < nk; ++ik)
        for (std::size_t it = 0; it < nt; ++it) raw[ik * nt + it] = f.raw(ik, it);

    RealField out;
    out.x.assign(xs.begin(), xs.end());
    out.t.assign(g->t().begin(), g->t().end());
    out.values.assign(nx * nt, 0.0);
    std::vector<double> imag(nx * nt, 0.0);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t sx = 0; sx < static_cast<std::ptrdiff_t>(nx); ++sx) {
        const auto ix = static_cast<std::size_t>(sx);
        const double x = xs[ix];
        std::vector<cplx> W(nk, 0.0);
        for (std::size_t j = 0; j + 1 < nk; ++j) {
            if (j == gap && f.order() == 1) {
                W[j] += gap_weight(K[j + 1], x, -1) * kappa(K[j]);
                W[j + 1] += gap_weight(K[j + 1], x, 1) * kappa(K[j + 1]);
                continue;
            }
            const double h = K[j + 1] - K[j];
            const auto m = exp_moments(cplx{0.0, x * h}, 1.0);
            const cplx e = h * std::exp(cplx{0.0, -K[j] * x});
            W[j] += e * (m[0] - m[1]);
            W[j + 1] += e * m[1];
        }
        for (std::size_t it = 0; it < nt; ++it) {
            cplx s{};
            for (std::size_t j = 0; j < nk; ++j) s += W[j] * raw[j * nt + it];
            s /= kTwoPi;
            out.values[ix * nt + it] = s.real();
            imag[ix * nt + it] = s.imag();
        }
    }
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < nx * nt; ++i) {
        re = std::max(re, std::abs(out.values[i]));
        im = std::max(im, std::abs(imag[i]));
    }
    out.imag_residue = im == 0.0 ? 0.0 : im / std::max(re, 1e-300);
    if (out.imag_residue > 1e-8)
        throw DomainError("inverse_transform: imaginary residue " + std::to_string(out.imag_residue) +
                          " (conjugate symmetry broken)");
    return out;
}

std::vector<double> fourier_l1(const ModeField& f) {
    const GridPtr& g = f.grid();
    const std::size_t nk = g->nk(), nt = g->nt();
    const auto K = g->k();
    const std::size_t gap = g->first_positive() - 1;
    std::vector<double> out(nt, 0.0);
    for (std::size_t it = 0; it < nt; ++it) {
        double s = 0.0;
        for (std::size_t j = 0; j + 1 < nk; ++j) {
            const double h = K[j + 1] - K[j];
            if (j == gap && f.order() == 1)
                // int_{-c}^{c} |k|^{-1/2} dk = 4 sqrt(c), |kappa| ~ sqrt|k| there
                s += 0.5 * (std::abs(f(j, it)) + std::abs(f(j + 1, it))) * 4.0 * std::sqrt(K[j + 1]);
            else
                s += 0.5 * h * (std::abs(f.raw(j, it)) + std::abs(f.raw(j + 1, it)));
        }
        out[it] = s / kTwoPi;
    }
    return out;
}

double log_slope(std::span<const double> t, std::span<const double> y, double t_lo, double t_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi || !(std::abs(y[i]) > 0.0)) continue;
        const double a = std::log(t[i]), b = std::log(std::abs(y[i]));
        sx += a;
        sy += b;
        sxx += a * a;
        sxy += a * b;
        ++n;
    }
    if (n < 2) return std::nan("");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DecayReport decay_certificate(const SolverState& s, std::span<const double> xs) {
    DecayReport r;
    const GridPtr& g = s.grid;
    const auto t = g->t();
    const std::size_t nt = g->nt();
    r.t.assign(t.begin(), t.end());

    const RealField u = inverse_transform(s.u, xs);
    const RealField v = inverse_transform(s.v, xs);
    const RealField w = inverse_transform(s.omega, xs);
    r.imag_residue = std::max({u.imag_residue, v.imag_residue, w.imag_residue});
    RealField xw;
    r.has_x = s.has_derivative;
    if (r.has_x) {
        xw = inverse_transform(s.d * cplx{0.0, -1.0}, xs);
        r.imag_residue = std::max(r.imag_residue, xw.imag_residue);
    }

    const auto x0 = static_cast<std::size_t>(std::min_element(xs.begin(), xs.end(),
                                                              [](double a, double b) { return std::abs(a) < std::abs(b); }) -
                                             xs.begin());
    std::vector<double> wsup(nt, 0.0);
    r.sup_u.assign(nt, 0.0);
    r.sup_v.assign(nt, 0.0);
    r.sup_w.assign(nt, 0.0);
    r.sup_xw.assign(nt, 0.0);
    r.omega_x0.assign(nt, 0.0);
    for (std::size_t it = 0; it < nt; ++it) {
        const double y = t[it];
        for (std::size_t ix = 0; ix < xs.size(); ++ix) {
            r.sup_u[it] = std::max(r.sup_u[it], std::pow(y, 1.5) * std::abs(u(ix, it)));
            r.sup_v[it] = std::max(r.sup_v[it], std::pow(y, 1.5) * std::abs(v(ix, it)));
            r.sup_w[it] = std::max(r.sup_w[it], y * y * y * std::abs(w(ix, it)));
            wsup[it] = std::max(wsup[it], std::abs(w(ix, it)));
            if (r.has_x) r.sup_xw[it] = std::max(r.sup_xw[it], y * std::abs(xw(ix, it)));
        }
        r.omega_x0[it] = std::abs(w(x0, it));
    }
    r.M_u = *std::max_element(r.sup_u.begin(), r.sup_u.end());
    r.M_v = *std::max_element(r.sup_v.begin(), r.sup_v.end());
    r.M_w = *std::max_element(r.sup_w.begin(), r.sup_w.end());
    r.M_x = r.has_x ? *std::max_element(r.sup_xw.begin(), r.sup_xw.end()) : std::nan("");

    const double hi = g->t_max(), lo = hi / 10.0;
    r.slope_x0 = log_slope(t, r.omega_x0, lo, hi);
    r.slope_sup = log_slope(t, wsup, lo, hi);

    auto chain = [&](const ModeField& f, double e) {
        auto c = fourier_l1(f);
        for (std::size_t it = 0; it < nt; ++it) c[it] *= std::pow(t[it], e);
        const double sl = log_slope(t, c, lo, hi);
        if (std::isfinite(sl)) r.chain_slope_max = std::max(r.chain_slope_max, sl);
        return c;
    };
    r.chain_slope_max = -1e300;
    r.chain_u = chain(s.u, 1.5);
    r.chain_v = chain(s.v, 1.5);
    r.chain_w = chain(s.omega, 3.0);
    if (r.has_x) r.chain_xw = chain(s.d, 1.0);
    if (r.chain_slope_max == -1e300) r.chain_slope_max = 0.0;
    return r;
}

}  // namespace wallflow
