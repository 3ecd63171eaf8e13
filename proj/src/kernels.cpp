#include "wallflow/kernels.hpp"

#include <cmath>

#include "wallflow/errors.hpp"

namespace wallflow {

namespace {

constexpr double kOverflowLimit = 500.0;

void check_nm(int n, int m) {
    if (n < 1 || n > 3 || m < 0 || m > 1) throw DomainError("kernel index out of range");
}

using K = ExpKind;

}  // namespace

cplx exponent_of(ExpKind kind, cplx kap, double abs_k) noexcept {
    switch (kind) {
        case K::PlusKappa: return kap;
        case K::MinusKappa: return -kap;
        default: return cplx{-abs_k, 0.0};
    }
}

std::vector<ExpTerm> propagator_terms(int n, double k, bool dk) {
    check_nm(n, 0);
    const cplx kp = dk_kappa(k);  // also rejects k = 0
    if (!dk) {
        if (n < 3) return {{0.5, 0, K::MinusKappa}};
        return {{0.5, 0, K::PlusKappa}, {-0.5, 0, K::MinusKappa}};
    }
    if (n < 3) return {{-0.5 * kp, 1, K::MinusKappa}};
    return {{0.5 * kp, 1, K::PlusKappa}, {0.5 * kp, 1, K::MinusKappa}};
}

std::vector<ExpTerm> eta_propagator_terms(int n, double k) {
    check_nm(n, 0);
    const cplx kap = kappa(k);
    const cplx c = kap / (2.0 * I * k);
    if (n < 3) return {{c, 0, K::MinusKappa}};
    return {{-c, 0, K::PlusKappa}, {-c, 0, K::MinusKappa}};
}

std::vector<ExpTerm> kernel_terms(int n, int m, double k, bool dk) {
    check_nm(n, m);
    const cplx kap = kappa(k);
    const double a = std::abs(k);
    const cplx ik = I * k;
    const cplx apk = a + kap;
    const cplx k2k2 = k * k + kap * kap;
    if (!dk) {
        if (m == 0) {
            switch (n) {
                case 1: return {{ik / kap, 0, K::PlusKappa}, {-apk * apk / kap, 0, K::MinusKappa},
                                {2.0 * apk, 0, K::MinusAbsK}};
                case 2: return {{2.0 * apk, 0, K::MinusAbsK}, {-2.0 * apk, 0, K::MinusKappa}};
                default: return {{ik / kap, 0, K::MinusKappa}};
            }
        }
        switch (n) {
            case 1: return {{1.0, 0, K::PlusKappa}, {apk * apk / ik, 0, K::MinusKappa},
                            {-2.0 * a * apk / ik, 0, K::MinusAbsK}};
            case 2: return {{2.0 * (a * apk / ik - 1.0), 0, K::MinusKappa}, {-2.0 * a * apk / ik, 0, K::MinusAbsK}};
            default: return {{-1.0, 0, K::MinusKappa}};
        }
    }
    const cplx kap2 = kap * kap, kap3 = kap2 * kap;
    if (m == 0) {
        switch (n) {
            case 1: {
                const cplx B = (k * k + a * kap) / k;
                return {{I / (2.0 * kap), 0, K::PlusKappa},
                        {I / (2.0 * kap), 0, K::MinusKappa},
                        {-I / kap, 0, K::MinusAbsK},
                        {-I * k * k / (2.0 * kap3), 0, K::PlusKappa},
                        {I * k * k / (2.0 * kap3), 0, K::MinusKappa},
                        {2.0 * B / kap, 0, K::MinusAbsK},
                        {-2.0 * B / kap, 0, K::MinusKappa},
                        {I * k2k2 / (2.0 * kap2), 1, K::PlusKappa},
                        {-I * k2k2 / (2.0 * kap2), 1, K::MinusKappa},
                        {B * k2k2 / kap2, 1, K::MinusKappa},
                        {-2.0 * B, 1, K::MinusAbsK}};
            }
            case 2:
                return {{apk * apk / (kap * k), 0, K::MinusAbsK},
                        {-apk * apk / (kap * k), 0, K::MinusKappa},
                        {-2.0 * apk * a / k, 1, K::MinusAbsK},
                        {apk * k2k2 / (kap * k), 1, K::MinusKappa}};
            default:
                return {{k / (2.0 * kap3), 0, K::MinusKappa}, {-I * k2k2 / (2.0 * kap2), 1, K::MinusKappa}};
        }
    }
    switch (n) {
        case 1: {
            const cplx C = 2.0 * I * (k * k + a * kap) / (k * k);
            return {{I * apk * apk / (kap * a), 0, K::MinusAbsK},
                    {-I * apk * apk / (kap * a), 0, K::MinusKappa},
                    {k2k2 / (2.0 * kap * k), 1, K::PlusKappa},
                    {k2k2 / (2.0 * kap * k), 1, K::MinusKappa},
                    {C * k2k2 / (2.0 * kap), 1, K::MinusKappa},
                    {-C * a, 1, K::MinusAbsK}};
        }
        case 2:
            return {{I * apk * apk / (kap * a), 0, K::MinusAbsK},
                    {-I * apk * apk / (kap * a), 0, K::MinusKappa},
                    {I * apk * k2k2 / (k * k), 1, K::MinusKappa},
                    {-2.0 * I * apk, 1, K::MinusAbsK}};
        default: return {{k2k2 / (2.0 * kap * k), 1, K::MinusKappa}};
    }
}

cplx eval_terms(const std::vector<ExpTerm>& terms, double k, double x) {
    const cplx kap = kappa(k);
    const double a = std::abs(k);
    cplx sum{};
    for (const auto& tm : terms) {
        const cplx e = exponent_of(tm.kind, kap, a) * x;
        if (e.real() > kOverflowLimit)
            throw OverflowGuardError("exponential growth exp(" + std::to_string(e.real()) +
                                     ") refused; use fused_integrand");
        sum += tm.c * std::pow(x, tm.p) * std::exp(e);
    }
    return sum;
}

namespace {
void check_arg(double x, const char* what) {
    if (!(x >= 0.0)) throw DomainError(std::string(what) + " must be >= 0");
}
}  // namespace

cplx propagator(int n, double k, double tau) {
    check_arg(tau, "tau");
    return eval_terms(propagator_terms(n, k, false), k, tau);
}

cplx f_kernel(int n, int m, double k, double sigma) {
    check_arg(sigma, "sigma");
    return eval_terms(kernel_terms(n, m, k, false), k, sigma);
}

cplx dk_propagator(int n, double k, double tau) {
    check_arg(tau, "tau");
    return eval_terms(propagator_terms(n, k, true), k, tau);
}

cplx dk_f_kernel(int n, int m, double k, double sigma) {
    check_arg(sigma, "sigma");
    return eval_terms(kernel_terms(n, m, k, true), k, sigma);
}

cplx f_kernel_plain(int n, int m, double k, double sigma) {
    const cplx f = f_kernel(n, m, k, sigma);
    return n == 3 ? (I * k / kappa(k)) * f : f;
}

cplx propagator_plain(int n, double k, double tau) {
    const cplx p = propagator(n, k, tau);
    return n == 3 ? (kappa(k) / (I * k)) * p : p;
}

cplx fused_integrand(int l, int n, int m, double k, double t, double s) {
    check_nm(n, m);
    if (l < 0 || l > 3) throw DomainError("fused_integrand: l must be in 0..3");
    if (!(t >= 1.0) || !(s >= 1.0)) throw DomainError("fused_integrand: t, s must be >= 1");
    if (n == 1 ? s > t : s < t) throw DomainError("fused_integrand: s outside I_n");
    const auto P = propagator_terms(n, k, l == 1);
    const auto F = kernel_terms(n, m, k, l == 2);
    const cplx kap = kappa(k);
    const double a = std::abs(k);
    const double tau = t - 1.0, sigma = s - 1.0;
    cplx sum{};
    for (const auto& p : P) {
        const cplx ep = exponent_of(p.kind, kap, a);
        for (const auto& f : F) {
            const cplx e = ep * tau + exponent_of(f.kind, kap, a) * sigma;
            sum += p.c * f.c * std::pow(tau, p.p) * std::pow(sigma, f.p) * std::exp(e);
        }
    }
    return sum;
}

}  // namespace wallflow
