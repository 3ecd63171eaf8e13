#include "wallflow/symbols.hpp"

#include <cmath>

#include "wallflow/errors.hpp"

namespace wallflow {

cplx kappa(double k) {
    if (k == 0.0) throw DomainError("kappa: k = 0 is the singular point");
    return kappa_or_zero(k);
}

cplx kappa_or_zero(double k) noexcept { return std::sqrt(cplx{k * k, -k}); }

cplx dk_kappa(double k) {
    return cplx{2.0 * k, -1.0} / (2.0 * kappa(k));
}

double lambda_minus(double k) noexcept {
    const double k2 = k * k;
    return -0.5 * std::sqrt(2.0 * std::sqrt(k2 + k2 * k2) + 2.0 * k2);
}

double mu_weight(double alpha, double r, double k, double t) {
    if (!(t >= 1.0)) throw DomainError("mu_weight: t must be >= 1");
    if (k == 0.0) return 1.0;
    const double z = std::abs(k) * std::pow(t, r);
    return 1.0 / (1.0 + std::pow(z, alpha));
}

}  // namespace wallflow
