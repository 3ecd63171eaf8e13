#include "wallflow/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "wallflow/errors.hpp"

namespace wallflow {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_mode_field(const fs::path& p, const ModeField& f) {
    std::ofstream o(p);
    o << "k,t,re,im\n";
    const GridPtr& g = f.grid();
    for (std::size_t ik = 0; ik < g->nk(); ++ik)
        for (std::size_t it = 0; it < g->nt(); ++it) {
            const cplx v = f.raw(ik, it);
            o << num(g->k()[ik]) << ',' << num(g->t()[it]) << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
        }
}

void write_real_field(const fs::path& p, const RealField& f) {
    std::ofstream o(p);
    o << "x,t,re,im\n";
    for (std::size_t ix = 0; ix < f.x.size(); ++ix)
        for (std::size_t it = 0; it < f.t.size(); ++it)
            o << num(f.x[ix]) << ',' << num(f.t[it]) << ',' << num(f(ix, it)) << ",0\n";
}

json check_json(const CheckResult& c) {
    json j = {{"name", c.name}, {"pass", c.pass}, {"threshold", c.threshold}, {"detail", c.detail}};
    j["observed"] = std::isfinite(c.observed) ? json(c.observed) : json(nullptr);
    return j;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg, std::ostream& log) {
    PipelineResult r;
    const bool fast = cfg.checks == "fast";
    const bool any = cfg.checks != "none";
    if (any) {
        r.checks.push_back(check_kernel_derivatives());
        r.checks.push_back(check_fused_products());
        r.checks.push_back(check_product_map(cfg.alpha));
    }

    const GridPtr grid = SpectralGrid::make(cfg.grid);
    const ConvolutionPlan plan(grid);
    try {
        log << "picard: epsilon = " << cfg.force.epsilon << '\n';
        r.state = picard_solve(cfg.force, plan, cfg.solver);
        log << "picard: " << r.state->iterations << " iterations, contraction " << r.state->contraction << '\n';
        if (cfg.derivative) {
            dk_fixed_point(*r.state, plan, cfg.solver);
            log << "derivative: " << r.state->d_residuals.size() << " iterations, contraction "
                << r.state->d_contraction << '\n';
        }
    } catch (const ConvergenceError& e) {
        r.exit_code = kExitNoConvergence;
        r.error = e.what();
        log << "error: " << e.what() << '\n';
        r.state.reset();
        return r;
    }
    const SolverState& s = *r.state;
    r.norms = fitted_norms(s, cfg.alpha);

    if (cfg.certificate) {
        const auto x = graded_x_nodes(cfg.x_nodes.x_max_factor * cfg.grid.t_max * cfg.grid.t_max,
                                      cfg.x_nodes.n_per_side, cfg.x_nodes.x_min);
        r.decay = decay_certificate(s, x);
        if (cfg.write_fields) {
            r.omega_x = inverse_transform(s.omega, x);
            r.u_x = inverse_transform(s.u, x);
            r.v_x = inverse_transform(s.v, x);
        }
        log << "certificate: M_u " << r.decay->M_u << ", M_v " << r.decay->M_v << ", M_w " << r.decay->M_w
            << ", M_x " << r.decay->M_x << '\n';
    }
    if (cfg.pressure) r.pressure = pressure_solve(s, plan);

    if (any) {
        const double id_tol = 10.0 * kQuadratureTolerance;
        r.checks.push_back(check_reality(s));
        r.checks.push_back(check_incompressibility(s, id_tol));
        r.checks.push_back(check_vorticity_identity(s, id_tol));
        r.checks.push_back(check_wall_velocity(s));
        for (double k : {0.25, 1.0, 4.0}) r.checks.push_back(check_oracle(cfg.force, grid, k));
        r.checks.push_back({"picard_contraction", s.contraction < 1.0, s.contraction, 1.0, "geometric mean residual ratio"});
        double bad = 0;
        for (const auto& n : r.norms) bad += std::isfinite(n.norm.value) ? 0 : 1;
        r.checks.push_back({"fitted_norms_finite", bad == 0, bad, 1.0, "number of non-finite fitted norms"});
        if (cfg.derivative) {
            r.checks.push_back(check_dk_fd(s));
            r.checks.push_back({"derivative_contraction", s.d_contraction < 1.0, s.d_contraction, 1.0,
                                "geometric mean residual ratio of the d fixed point"});
        }
        if (r.decay) {
            const auto& d = *r.decay;
            const bool finite = std::isfinite(d.M_u) && std::isfinite(d.M_v) && std::isfinite(d.M_w) &&
                                (!d.has_x || std::isfinite(d.M_x));
            r.checks.push_back({"decay_sups_finite", finite, std::max({d.M_u, d.M_v, d.M_w, d.has_x ? d.M_x : 0.0}),
                                INFINITY, "largest of M_u, M_v, M_w, M_x"});
            r.checks.push_back({"fourier_chain_bounded", d.chain_slope_max < 0.1, d.chain_slope_max, 0.1,
                                "largest last-decade log slope of t^e int |f| dk"});
            const bool zero = s.omega.sup() == 0.0;
            const double dev = zero ? 0.0 : std::abs(d.slope_sup + 3.0);
            r.checks.push_back({"omega_sup_slope", zero || dev < 0.15, dev, 0.15,
                                zero ? "zero field" : "|slope of log max_x |omega| + 3| on the last decade"});
        }
        if (r.pressure) {
            const double m = std::max(r.pressure->residual_x, r.pressure->residual_y);
            r.checks.push_back({"momentum_residual", m < 5e-2, m, 5e-2, "FD-in-t momentum residual / largest term"});
        }
        if (cfg.checks == "all" || fast) {
            r.bounds = bound_suite(fast);
            for (const auto& b : r.bounds)
                r.checks.push_back({"bound:" + b.name, b.pass, b.relative_change, 0.10,
                                    "max ratio " + num(b.max_ratio) + (b.note.empty() ? "" : "; " + b.note)});
        }
    }
    for (const auto& c : r.checks)
        if (!c.pass) {
            r.exit_code = kExitCheckFailed;
            log << "check failed: " << c.name << " observed " << c.observed << " threshold " << c.threshold << '\n';
        }
    return r;
}

void emit_reports(const PipelineResult& r, const PipelineConfig& cfg, const std::string& out_dir) {
    const fs::path root(out_dir);
    fs::create_directories(root);
    json sum;
    sum["config"] = cfg.to_json();
    sum["exit_code"] = r.exit_code;
    if (!r.error.empty()) sum["error"] = r.error;
    if (r.state) {
        const auto& s = *r.state;
        sum["solver"] = {{"iterations", s.iterations},
                         {"residuals", s.residuals},
                         {"contraction", s.contraction},
                         {"wall_u_max", s.wall_u_max},
                         {"derivative_iterations", s.d_residuals.size()},
                         {"derivative_residuals", s.d_residuals},
                         {"derivative_contraction", s.d_contraction}};
        json norms = json::array();
        for (const auto& n : r.norms)
            norms.push_back({{"field", n.field}, {"target", n.target}, {"value", finite_or_null(n.norm.value)},
                             {"excluded_nodes", n.norm.excluded}});
        sum["fitted_norms"] = norms;
    }
    if (r.decay) {
        const auto& d = *r.decay;
        sum["decay"] = {{"M_u", d.M_u},
                        {"M_v", d.M_v},
                        {"M_w", d.M_w},
                        {"M_x", finite_or_null(d.M_x)},
                        {"slope_omega_x0", finite_or_null(d.slope_x0)},
                        {"slope_omega_sup", finite_or_null(d.slope_sup)},
                        {"chain_slope_max", d.chain_slope_max},
                        {"imag_residue", d.imag_residue}};
    }
    if (r.pressure)
        sum["pressure"] = {{"residual_x", r.pressure->residual_x},
                           {"residual_y", r.pressure->residual_y},
                           {"gauge", r.pressure->gauge}};
    json checks = json::array();
    bool all = true;
    for (const auto& c : r.checks) {
        checks.push_back(check_json(c));
        all = all && c.pass;
    }
    sum["checks"] = checks;
    sum["all_pass"] = all && r.exit_code == kExitOk;
    std::ofstream(root / "summary.json") << sum.dump(2) << '\n';

    if (r.state && cfg.write_fields) {
        fs::create_directories(root / "fields");
        const auto& s = *r.state;
        const std::pair<const char*, const ModeField*> fields[] = {
            {"omega", &s.omega}, {"eta", &s.eta}, {"phi", &s.phi}, {"psi", &s.psi}, {"u", &s.u},
            {"v", &s.v},         {"Q0", &s.Q0},   {"Q1", &s.Q1}};
        for (const auto& [name, f] : fields) write_mode_field(root / "fields" / (std::string(name) + ".csv"), *f);
        if (s.has_derivative) write_mode_field(root / "fields" / "dk_omega.csv", s.d);
        if (r.pressure) write_mode_field(root / "fields" / "p.csv", r.pressure->p);
        if (r.omega_x) write_real_field(root / "fields" / "omega_x.csv", *r.omega_x);
        if (r.u_x) write_real_field(root / "fields" / "u_x.csv", *r.u_x);
        if (r.v_x) write_real_field(root / "fields" / "v_x.csv", *r.v_x);
    }
    if (r.decay) {
        const auto& d = *r.decay;
        std::ofstream o(root / "decay.csv");
        o << "t,sup_u,sup_v,sup_w,sup_xw,omega_x0,chain_u,chain_v,chain_w,chain_xw\n";
        for (std::size_t i = 0; i < d.t.size(); ++i)
            o << num(d.t[i]) << ',' << num(d.sup_u[i]) << ',' << num(d.sup_v[i]) << ',' << num(d.sup_w[i]) << ','
              << num(d.has_x ? d.sup_xw[i] : NAN) << ',' << num(d.omega_x0[i]) << ',' << num(d.chain_u[i]) << ','
              << num(d.chain_v[i]) << ',' << num(d.chain_w[i]) << ',' << num(d.has_x ? d.chain_xw[i] : NAN) << '\n';
    }
    if (!r.bounds.empty()) {
        fs::create_directories(root / "bounds");
        for (const auto& b : r.bounds) {
            std::ofstream o(root / "bounds" / (b.name + ".csv"));
            for (std::size_t c = 0; c < b.columns.size(); ++c) o << (c ? "," : "") << b.columns[c];
            o << '\n';
            for (const auto& row : b.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) o << (c ? "," : "") << num(row[c]);
                o << '\n';
            }
        }
    }
}

int run(const std::string& config_path, const std::string& out_dir, const std::string& checks_override,
        std::ostream& log) {
    PipelineConfig cfg;
    try {
        cfg = PipelineConfig::load(config_path);
        if (!checks_override.empty()) {
            cfg.checks = checks_override;
            cfg.validate();
        }
        SpectralGrid::make(cfg.grid);
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        log << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    PipelineResult r = run_pipeline(cfg, log);
    if (!out_dir.empty()) emit_reports(r, cfg, out_dir);
    return r.exit_code;
}

}  // namespace wallflow
