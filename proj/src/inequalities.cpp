#include "wallflow/inequalities.hpp"

#include <algorithm>
#include <cmath>

#include "wallflow/symbols.hpp"

namespace wallflow {

BoundReport kappa_inequality_report(const SpectralGrid& grid) {
    BoundReport r;
    r.name = "kappa_inequalities";
    r.columns = {"k", "abs_kappa", "sqrt_k_plus_k", "upper", "sqrt_k_over_kappa", "exp_ratio_sigma10"};
    constexpr double slack = 1e-12;
    const double c34 = std::pow(2.0, 0.75);
    std::size_t violations = 0;
    double best_const = 0.0;
    for (double k : grid.k()) {
        const double a = std::abs(k);
        const double mk = std::abs(kappa(k));
        const double mid = std::sqrt(a) + a;
        if (mk > mid * (1 + slack)) ++violations;
        if (mid > c34 * mk * (1 + slack)) ++violations;
        if (c34 * mk > c34 * (1 + a) * (1 + slack)) ++violations;
        const double c = std::sqrt(a) / mk;
        best_const = std::max(best_const, c);
        const double lm = lambda_minus(k);
        double worst = 0.0;
        for (double sigma : {0.0, 1.0, 10.0}) {
            const double lhs = std::exp(lm * sigma), rhs = std::exp(-a * sigma);
            if (lhs > rhs * (1 + slack) && lhs > 1e-300) ++violations;
            if (rhs > 0.0) worst = std::max(worst, lhs / rhs);
        }
        r.rows.push_back({k, mk, mid, c34 * mk, c, worst});
    }
    r.max_ratio = best_const;
    r.refined_max_ratio = best_const;
    r.pass = violations == 0;
    r.note = "violations=" + std::to_string(violations) + "; observed constant for |k|^(1/2) <= C|kappa|: C=" +
             std::to_string(best_const);
    return r;
}

namespace {

double weight_sweep(const SpectralGrid& g, BoundReport* rows) {
    double worst = 0.0;
    for (std::size_t ik = g.first_positive(); ik < g.nk(); ++ik) {
        const double k = g.k()[ik];
        const double lm = lambda_minus(k);
        for (double t : g.t()) {
            double m = 0.0;
            for (double alpha : {1.0, 3.0})
                for (double rr : {1.0, 2.0})
                    m = std::max(m, std::exp(lm * (t - 1.0)) * mu_weight(alpha, rr, k, t) /
                                        mu_weight(alpha, 2.0, k, t));
            for (double rho : {0.5, 1.0})
                for (double rr : {1.0, 2.0}) {
                    const double alpha = 3.0;
                    m = std::max(m, std::pow(k, rho) * mu_weight(alpha, rr, k, t) * std::pow(t, rho * rr) /
                                        mu_weight(alpha - rho, rr, k, t));
                }
            worst = std::max(worst, m);
            if (rows) rows->rows.push_back({k, t, m});
        }
    }
    return worst;
}

}  // namespace

BoundReport weight_inequality_report(const SpectralGrid& grid) {
    BoundReport r;
    r.name = "weight_inequalities";
    r.columns = {"k", "t", "ratio"};
    r.max_ratio = weight_sweep(grid, &r);
    r.refined_max_ratio = weight_sweep(*grid.refined(), nullptr);
    finalize_refinement(r);
    return r;
}

}  // namespace wallflow
