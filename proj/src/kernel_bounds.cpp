#include "wallflow/kernel_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wallflow/kernels.hpp"
#include "wallflow/symbols.hpp"

namespace wallflow {

namespace {

const double kSigmas[] = {0.0, 0.1, 1.0, 10.0, 100.0};

/// Sum of c x^p exp(lambda x - shift), plus the sum of term magnitudes.
std::pair<cplx, double> shifted_sum(const std::vector<ExpTerm>& terms, cplx pre, double k, double x, double shift) {
    const cplx kap = kappa(k);
    const double a = std::abs(k);
    cplx s{};
    double mag = 0.0;
    for (const auto& tm : terms) {
        const cplx v = pre * tm.c * std::pow(x, tm.p) * std::exp(exponent_of(tm.kind, kap, a) * x - shift);
        s += v;
        mag += std::abs(v);
    }
    return {s, mag};
}

}  // namespace

double kernel_bound_ratio(KernelBoundKind which, int n, int m, double k, double sigma) {
    const double L = -lambda_minus(k);  // |Lambda_-|
    const double a = std::abs(k);
    const cplx kap = kappa(k);
    const bool grows = n == 1;
    const double shift = grows ? L * sigma : 0.0;
    // RHS with exp(|Lambda_-| sigma) removed when the kernel grows.
    const double eg = grows ? 1.0 : 0.0;
    const double ed = std::exp(-L * sigma), ek = std::exp(-a * sigma);
    double rhs = 0.0;
    cplx pre{1.0, 0.0};
    bool dk = false;
    if (which == KernelBoundKind::F) {
        if (n == 3) pre = I * k / kap;
        const int id = 10 * n + m;
        switch (id) {
            case 10: rhs = eg * std::min(L, L * L * L * sigma * sigma); break;
            case 20: rhs = (a + std::sqrt(a)) * ek; break;
            case 30: rhs = ed * std::min(1.0, L * L); break;
            case 11: rhs = (1.0 + L) * std::min(1.0, L * sigma); break;
            case 21: rhs = (1.0 + a) * ek; break;
            default: rhs = ed * std::min(1.0, L); break;
        }
    } else {
        dk = true;
        pre = kap;
        const double s = sigma + 1.0;
        const int id = 10 * n + m;
        switch (id) {
            case 10: rhs = std::min(1.0 + L * sigma, (s + L) * L * L * sigma); break;
            case 20: rhs = (std::sqrt(a) + a * a) * sigma * ek; break;
            case 30: rhs = (1.0 + L * sigma) * ed; break;
            case 11: rhs = (1.0 + L * L) * sigma; break;
            case 21: rhs = (1.0 + a * a) * sigma * ek; break;
            default: rhs = (1.0 + L) * sigma * ed; break;
        }
    }
    const auto [lhs, mag] = shifted_sum(kernel_terms(n, m, k, dk), pre, k, sigma, shift);
    const double al = std::abs(lhs);
    if (rhs > 0.0) return al / rhs;
    return al <= 1e-12 * std::max(mag, 1e-300) ? 0.0 : INFINITY;
}

namespace {

double sweep(const SpectralGrid& g, KernelBoundKind which, int n, int m, BoundReport* out) {
    double worst = 0.0;
    for (double k : g.k()) {
        for (double sigma : kSigmas) {
            const double r = kernel_bound_ratio(which, n, m, k, sigma);
            worst = std::max(worst, r);
            if (out) out->rows.push_back({k, sigma, r});
        }
    }
    return worst;
}

}  // namespace

std::vector<BoundReport> kernel_bound_report(const SpectralGrid& grid, KernelBoundKind which) {
    std::vector<BoundReport> out;
    const auto fine = grid.refined();
    for (int m = 0; m <= 1; ++m) {
        for (int n = 1; n <= 3; ++n) {
            BoundReport r;
            r.name = std::string(which == KernelBoundKind::F ? "bound_f" : "bound_kappa_dk_f") + std::to_string(n) +
                     std::to_string(m);
            r.columns = {"k", "sigma", "ratio"};
            r.max_ratio = sweep(grid, which, n, m, &r);
            r.refined_max_ratio = sweep(*fine, which, n, m, nullptr);
            finalize_refinement(r);
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace wallflow
