#include "wallflow/force.hpp"

#include <cmath>

#include "wallflow/errors.hpp"
#include "wallflow/quadrature.hpp"

namespace wallflow {

void ForceSpec::validate() const {
    if (!(x1 > x0) || !(y1 > y0)) throw ConfigError("force: degenerate support box");
    if (!(y0 > 1.0)) throw ConfigError("force: support must lie strictly above the wall y = 1");
    if (!(smoothness > 0.0)) throw ConfigError("force: smoothness must be positive");
    if (!std::isfinite(epsilon) || !std::isfinite(amp1) || !std::isfinite(amp2))
        throw ConfigError("force: non-finite amplitude");
}

double bump(double xi, double s) noexcept {
    if (!(std::abs(xi) < 1.0)) return 0.0;
    return std::exp(-s / (1.0 - xi * xi));
}

double bump_derivative(double xi, double s) noexcept {
    if (!(std::abs(xi) < 1.0)) return 0.0;
    const double d = 1.0 - xi * xi;
    return -2.0 * s * xi / (d * d) * std::exp(-s / d);
}

namespace {

double amp(const ForceSpec& f, int comp) { return f.epsilon * (comp == 1 ? f.amp1 : f.amp2); }
double xi(double v, double a, double b) { return (2.0 * v - (a + b)) / (b - a); }

constexpr int kPanels = 128;

template <class Fn>
cplx panel_integral(const ForceSpec& f, Fn&& fn) {
    const GaussRule& g = gauss_legendre(8);
    const double h = (f.x1 - f.x0) / kPanels;
    cplx s{};
    for (int p = 0; p < kPanels; ++p) {
        const double c = f.x0 + (p + 0.5) * h;
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            const double x = c + 0.5 * h * g.x[q];
            s += 0.5 * h * g.w[q] * fn(x) * bump(xi(x, f.x0, f.x1), f.smoothness);
        }
    }
    return s;
}

}  // namespace

double force_profile_y(const ForceSpec& f, int comp, double y) {
    return amp(f, comp) * bump(xi(y, f.y0, f.y1), f.smoothness);
}

double force_profile_dy(const ForceSpec& f, int comp, double y) {
    return amp(f, comp) * bump_derivative(xi(y, f.y0, f.y1), f.smoothness) * 2.0 / (f.y1 - f.y0);
}

double force_value(const ForceSpec& f, int comp, double x, double y) {
    return bump(xi(x, f.x0, f.x1), f.smoothness) * force_profile_y(f, comp, y);
}

double force_dy(const ForceSpec& f, int comp, double x, double y) {
    return bump(xi(x, f.x0, f.x1), f.smoothness) * force_profile_dy(f, comp, y);
}

cplx bump_hat(const ForceSpec& f, double k) {
    return panel_integral(f, [k](double x) { return std::exp(cplx{0.0, k * x}); });
}

cplx bump_hat_dk(const ForceSpec& f, double k) {
    return panel_integral(f, [k](double x) { return cplx{0.0, x} * std::exp(cplx{0.0, k * x}); });
}

ForceSpectrum force_spectrum(const ForceSpec& f, const GridPtr& grid) {
    f.validate();
    const std::size_t nk = grid->nk(), nt = grid->nt();
    std::vector<cplx> bh(nk), bd(nk);
    for (std::size_t ik = 0; ik < nk; ++ik) {
        bh[ik] = bump_hat(f, grid->k()[ik]);
        bd[ik] = bump_hat_dk(f, grid->k()[ik]);
    }
    std::vector<double> p1(nt), p2(nt);
    for (std::size_t it = 0; it < nt; ++it) {
        p1[it] = force_profile_y(f, 1, grid->t()[it]);
        p2[it] = force_profile_y(f, 2, grid->t()[it]);
    }
    auto make = [&](const std::vector<cplx>& h, const std::vector<double>& p) {
        return ModeField::generate(grid, 0, [&](std::size_t ik, std::size_t it) { return h[ik] * p[it]; });
    };
    return {make(bh, p1), make(bh, p2), make(bd, p1), make(bd, p2)};
}

}  // namespace wallflow
