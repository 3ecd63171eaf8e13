#include "wallflow/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "wallflow/errors.hpp"
#include "wallflow/integral_operator.hpp"

namespace wallflow {

OracleSolution oseen_oracle(const ForceSpec& f, double k, double t_box, std::size_t intervals, cplx left, cplx right) {
    if (intervals < 4 || !(t_box > 1.0)) throw DomainError("oseen_oracle: need intervals >= 4 and T > 1");
    f.validate();
    const std::size_t n = intervals;
    const double h = (t_box - 1.0) / static_cast<double>(n);
    const cplx kap2 = cplx{k * k, -k};
    const cplx b = bump_hat(f, k);

    OracleSolution r;
    r.t.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) r.t[j] = 1.0 + h * static_cast<double>(j);

    // Thomas algorithm on the interior unknowns 1..n-1.
    const cplx diag = -2.0 - kap2 * h * h;
    r.diag_margin = std::abs(diag) - 2.0;
    std::vector<cplx> c(n + 1), d(n + 1);
    for (std::size_t j = 1; j < n; ++j) {
        const double y = r.t[j];
        cplx rhs = h * h * (-I * k * b * force_profile_y(f, 2, y) - b * force_profile_dy(f, 1, y));
        if (j == 1) rhs -= left;
        if (j == n - 1) rhs -= right;
        const cplx m = j == 1 ? diag : diag - c[j - 1];
        c[j] = 1.0 / m;
        d[j] = (rhs - (j == 1 ? cplx{} : d[j - 1])) / m;
    }
    r.omega.assign(n + 1, 0.0);
    r.omega[0] = left;
    r.omega[n] = right;
    for (std::size_t j = n - 1; j >= 1; --j) {
        r.omega[j] = d[j] - (j + 1 < n ? c[j] * r.omega[j + 1] : cplx{});
        if (j == 1) break;
    }
    return r;
}

OracleComparison oracle_compare(const ForceSpec& f, const GridPtr& grid, double k, std::size_t intervals,
                                double t_box) {
    const auto t = grid->t();
    const std::size_t nt = t.size();
    const cplx b = bump_hat(f, k);
    std::vector<cplx> q0(nt), q1(nt), w(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        q0[i] = b * force_profile_y(f, 2, t[i]);
        q1[i] = -b * force_profile_y(f, 1, t[i]);
    }
    integral_column(IntegralSlot::Omega, k, t, q0.data(), q1.data(), w.data());
    const auto it_box = static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), t_box) - t.begin());
    if (it_box >= nt) throw DomainError("oracle_compare: t_box beyond the grid");
    const double T = t[it_box];
    const OracleSolution o = oseen_oracle(f, k, T, intervals, w[0], w[it_box]);
    const double h = (T - 1.0) / static_cast<double>(intervals);

    double num = 0, den = 0;
    for (std::size_t i = 1; i < it_box; ++i) {
        const double pos = (t[i] - 1.0) / h;
        const auto j = std::min(static_cast<std::size_t>(pos), intervals - 1);
        const double th = pos - static_cast<double>(j);
        const cplx fd = (1.0 - th) * o.omega[j] + th * o.omega[j + 1];
        const double wt = 0.5 * (t[i + 1] - t[i - 1]);
        num += wt * std::norm(w[i] - fd);
        den += wt * std::norm(w[i]);
    }
    return {k, T, intervals, den > 0.0 ? std::sqrt(num / den) : std::sqrt(num)};
}

}  // namespace wallflow
