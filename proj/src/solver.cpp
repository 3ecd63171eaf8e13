#include "wallflow/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wallflow/errors.hpp"
#include "wallflow/integral_operator.hpp"

namespace wallflow {

namespace {

double rel_change(const ModeField& a, const ModeField& b) {
    const double d = (a - b).sup();
    const double s = a.sup();
    if (d == 0.0) return 0.0;
    return d / std::max(s, 1e-300);
}

double mean_ratio(const std::vector<double>& r) {
    double acc = 0.0;
    int n = 0;
    for (std::size_t j = 2; j < r.size(); ++j) {
        if (r[j] < 1e-14 || r[j - 1] <= 0.0) break;
        acc += std::log(r[j] / r[j - 1]);
        ++n;
    }
    return n ? std::exp(acc / n) : 0.0;
}

std::string history(const std::vector<double>& r, const std::vector<double>& norms) {
    std::ostringstream os;
    os << "iterate residuals [";
    for (double x : r) os << ' ' << x;
    os << " ], iterate sup norms [";
    for (double x : norms) os << ' ' << x;
    os << " ]";
    return os.str();
}

void watch(const std::vector<double>& r, const std::vector<double>& norms, int& rises, const char* what) {
    const double last = r.back();
    if (!std::isfinite(last))
        throw ConvergenceError(std::string(what) + ": non-finite residual; " + history(r, norms));
    if (r.size() >= 2 && last > r[r.size() - 2])
        ++rises;
    else
        rises = 0;
    if (rises >= 3) throw ConvergenceError(std::string(what) + ": residual rose three times in a row; " + history(r, norms));
}

void install(SolverState& s, const ModeField& omega, Companions&& c) {
    s.omega = omega;
    s.eta = std::move(c.eta);
    s.phi = std::move(c.phi);
    s.psi = std::move(c.psi);
    s.u = std::move(c.u);
    s.v = std::move(c.v);
    s.wall_u_max = c.wall_u_max;
}

}  // namespace

std::pair<ModeField, ModeField> q_assembly(const ModeField& u, const ModeField& v, const ModeField& omega,
                                           const ForceSpectrum& F, const ConvolutionPlan& plan) {
    return {plan.convolve(u, omega) + F.F2, plan.convolve(v, omega) - F.F1};
}

ModeField omega_apply(const ModeField& Q0, const ModeField& Q1) {
    return integral_apply(IntegralSlot::Omega, Q0, Q1);
}

SolverState linear_solve(const ForceSpec& spec, const GridPtr& grid) {
    SolverState s;
    s.grid = grid;
    s.spec = spec;
    s.force = force_spectrum(spec, grid);
    s.Q0 = s.force.F2;
    s.Q1 = s.force.F1 * -1.0;
    const ModeField omega = omega_apply(s.Q0, s.Q1);
    install(s, omega, companion_fields(omega, s.Q0, s.Q1));
    s.residuals = {omega.sup() > 0.0 ? 1.0 : 0.0};
    s.iterations = 1;
    s.converged = true;
    return s;
}

SolverState picard_solve(const ForceSpec& spec, const ConvolutionPlan& plan, const SolverOptions& opt) {
    SolverState s = linear_solve(spec, plan.grid());
    s.converged = s.residuals.back() < opt.tol;
    int rises = 0;
    std::vector<double> norms{s.omega.sup()};
    while (!s.converged) {
        if (s.iterations >= opt.max_iter)
            throw ConvergenceError("picard: no convergence in " + std::to_string(opt.max_iter) + " iterations; " +
                                   history(s.residuals, norms));
        auto [q0, q1] = q_assembly(s.u, s.v, s.omega, s.force, plan);
        ModeField omega = omega_apply(q0, q1);
        if (opt.relaxation != 1.0) omega = omega * opt.relaxation + s.omega * (1.0 - opt.relaxation);
        s.residuals.push_back(rel_change(omega, s.omega));
        ++s.iterations;
        norms.push_back(omega.sup());
        watch(s.residuals, norms, rises, "picard");
        s.Q0 = std::move(q0);
        s.Q1 = std::move(q1);
        install(s, omega, companion_fields(omega, s.Q0, s.Q1));
        s.converged = s.residuals.back() < opt.tol;
    }
    // Sources consistent with the final iterate.
    if (s.iterations > 1) {
        auto [q0, q1] = q_assembly(s.u, s.v, s.omega, s.force, plan);
        s.Q0 = std::move(q0);
        s.Q1 = std::move(q1);
    }
    s.contraction = mean_ratio(s.residuals);
    return s;
}

std::pair<ModeField, ModeField> d12_compute(const SolverState& s) {
    return {integral_apply(IntegralSlot::DkPropagator, s.Q0, s.Q1, 1),
            integral_apply(IntegralSlot::DkKernel, s.Q0, s.Q1, 1)};
}

std::pair<ModeField, ModeField> L1_apply(const ModeField& d, const SolverState& s, const ConvolutionPlan& plan) {
    if (d.order() != 1) throw DomainError("L1_apply: d must be order 1");
    return {plan.convolve(s.u, d), plan.convolve(s.v, d)};
}

ModeField L2_apply(const ModeField& dQ0, const ModeField& dQ1) {
    return integral_apply(IntegralSlot::Omega, dQ0, dQ1, 1);
}

void dk_fixed_point(SolverState& s, const ConvolutionPlan& plan, const SolverOptions& opt) {
    auto [d1, d2] = d12_compute(s);
    const ModeField base = d1 + d2;
    ModeField x(s.grid, 1);
    s.d_residuals.clear();
    int rises = 0;
    std::vector<double> norms;
    for (int it = 0;; ++it) {
        if (it >= opt.d_max_iter)
            throw ConvergenceError("derivative fixed point: no convergence in " + std::to_string(opt.d_max_iter) +
                                   " iterations; " + history(s.d_residuals, norms));
        auto [a0, a1] = L1_apply(base + x, s, plan);
        ModeField xn = L2_apply(a0 + s.force.dF2, a1 - s.force.dF1);
        const double diff = (xn - x).sup();
        const double scale = std::max((base + xn).sup(), 1e-300);
        s.d_residuals.push_back(diff == 0.0 ? 0.0 : diff / scale);
        x = std::move(xn);
        norms.push_back(x.sup());
        if (s.d_residuals.back() < opt.d_tol) break;
        watch(s.d_residuals, norms, rises, "derivative fixed point lost contraction");
    }
    s.d1 = std::move(d1);
    s.d2 = std::move(d2);
    s.d3 = x;
    s.d = base + x;
    auto [q0, q1] = L1_apply(s.d, s, plan);
    s.dq0 = std::move(q0);
    s.dq1 = std::move(q1);
    s.d_contraction = mean_ratio(s.d_residuals);
    s.has_derivative = true;
}

std::vector<FittedNorm> fitted_norms(const SolverState& s, double alpha) {
    std::vector<FittedNorm> out;
    auto b = [&](const char* name, const ModeField& f, double p, double q) {
        if (f.empty()) return;
        std::ostringstream t;
        t << "B(" << alpha << "," << p << "," << q << ")";
        out.push_back({name, t.str(), weighted_norm(f, WeightEnvelope{alpha, p, q, 0})});
    };
    auto d1 = [&](const char* name, const ModeField& f, double p, double q) {
        if (f.empty()) return;
        std::ostringstream t;
        t << "D1(" << alpha - 1.0 << "," << p << "," << q << ")";
        out.push_back({name, t.str(), d1_norm(f, d1_components(alpha, p, q))});
    };
    b("omega", s.omega, 2.5, 1.0);
    b("u", s.u, 0.5, 0.0);
    b("v", s.v, 0.5, 1.0);
    b("Q0", s.Q0, 3.5, 2.5);
    b("Q1", s.Q1, 3.5, 2.5);
    if (s.has_derivative) {
        d1("d", s.d, 1.5, 0.0);
        d1("d1", s.d1, 1.5, 0.0);
        d1("d2", s.d2, 1.5, 0.0);
        d1("d3", s.d3, 1.5, 1.0);
        b("u*d", s.dq0, 1.5, 1.0);
        b("v*d", s.dq1, 1.5, 2.0);
        b("dF2", s.force.dF2, 1.5, 1.0);
        b("dF1", s.force.dF1, 1.5, 2.0);
    }
    return out;
}

}  // namespace wallflow
