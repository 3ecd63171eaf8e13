#include "wallflow/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "wallflow/errors.hpp"

namespace wallflow {

std::array<cplx, 3> exp_moments(cplx mu, double h) {
    const cplx z = mu * h;
    std::array<cplx, 3> m{};
    if (std::abs(z) < 1.0) {
        // m_j = h^{j+1} sum_n (-z)^n / (n! (n+j+1))
        cplx term{1.0, 0.0};
        for (int n = 0; n < 40; ++n) {
            for (int j = 0; j < 3; ++j) m[j] += term / double(n + j + 1);
            term *= -z / double(n + 1);
            if (std::abs(term) < 1e-18) break;
        }
        m[0] *= h;
        m[1] *= h * h;
        m[2] *= h * h * h;
        return m;
    }
    const cplx e = std::exp(-z);
    m[0] = (1.0 - e) / mu;
    m[1] = (m[0] - h * e) / mu;
    m[2] = (2.0 * m[1] - h * h * e) / mu;
    return m;
}

cplx exp_poly_integral(cplx mu, double h, cplx c0, cplx c1, cplx c2) {
    const auto m = exp_moments(mu, h);
    return c0 * m[0] + c1 * m[1] + c2 * m[2];
}

namespace {

template <int N>
GaussRule make_rule() {
    using G = boost::math::quadrature::gauss<double, N>;
    GaussRule r;
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0.0) continue;
        r.x.push_back(-a[i]);
        r.w.push_back(w[i]);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.x.push_back(a[i]);
        r.w.push_back(w[i]);
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static const GaussRule g2 = make_rule<2>(), g4 = make_rule<4>(), g8 = make_rule<8>(), g16 = make_rule<16>();
    switch (n) {
        case 2: return g2;
        case 4: return g4;
        case 8: return g8;
        case 16: return g16;
        default: throw DomainError("gauss_legendre: unsupported order");
    }
}

std::vector<double> fd_weights(double z, std::span<const double> x, int m) {
    // Fornberg (1988), weights c[j][k] for derivative k at z.
    const int n = static_cast<int>(x.size()) - 1;
    if (n < m) throw DomainError("fd_weights: too few nodes");
    std::vector<std::vector<double>> c(x.size(), std::vector<double>(m + 1, 0.0));
    double c1 = 1.0, c4 = x[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = c[j][m];
    return out;
}

}  // namespace wallflow
