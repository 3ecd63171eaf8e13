/// @file acceptance.cpp
/// @brief Acceptance run: one PASS/FAIL line per criterion, thresholds pinned below.
///        Exit status is the number of failing criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wallflow/pipeline.hpp"

using namespace wallflow;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kDerivTol = 1e-6;
constexpr double kFusedTol = 1e-12;
constexpr double kFastSeconds = 1.0;
constexpr double kBoundChange = 0.10;
constexpr double kBoundSeconds = 120.0;
constexpr double kOracleTol = 1e-2;
constexpr double kOracleSeconds = 30.0;
constexpr double kOrderLo = 1.7, kOrderHi = 2.3;
constexpr double kDkTol = 1e-2;
constexpr double kInflationTol = 0.05;
constexpr double kSlopeTarget = -3.0, kSlopeTol = 0.15;
constexpr double kEndToEndSeconds = 300.0;
constexpr double kIdentityTol = 10.0 * kQuadratureTolerance;
constexpr double kRealityTol = 1e-10;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail) {
    std::printf("CRITERION %d %s  %s: %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, auto... v) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, v...);
    return buf;
}

PipelineConfig default_config(double epsilon, double t_max, std::size_t t_nodes) {
    PipelineConfig c;
    c.force.epsilon = epsilon;
    c.grid.t_max = t_max;
    c.grid.t_nodes = t_nodes;
    c.checks = "none";
    c.write_fields = false;
    return c;
}

double rel_change(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main() {
    std::ostringstream log;

    {
        Stopwatch w;
        const CheckResult c = check_kernel_derivatives(kDerivTol);
        const double s = w.seconds();
        report(1, c.pass && s < kFastSeconds, "kernel-derivative consistency",
               fmt("max relative error %.3g (< %g), %.3f s (< %g s)", c.observed, kDerivTol, s, kFastSeconds));
    }
    {
        Stopwatch w;
        const CheckResult c = check_fused_products(kFusedTol);
        const double s = w.seconds();
        report(2, c.pass && s < kFastSeconds, "fused-product equivalence",
               fmt("max relative difference %.3g (< %g), fused finite at t = 128, |k| = 64 and naive overflows: %s, "
                   "%.3f s (< %g s)",
                   c.observed, kFusedTol, c.pass ? "yes" : "no", s, kFastSeconds));
    }
    {
        Stopwatch w;
        const auto reps = bound_suite(false);
        const double s = w.seconds();
        bool ok = s < kBoundSeconds;
        double worst = 0;
        std::string bad;
        for (const auto& r : reps) {
            const bool p = r.pass && std::isfinite(r.max_ratio) && r.relative_change < kBoundChange;
            ok = ok && p;
            worst = std::max(worst, r.relative_change);
            if (!p) bad += " " + r.name;
            std::printf("  bound %-32s max ratio %-12.6g refined %-12.6g change %-10.3g %s\n", r.name.c_str(),
                        r.max_ratio, r.refined_max_ratio, r.relative_change, r.note.c_str());
        }
        report(3, ok, "bound suite",
               fmt("%zu reports, largest refinement change %.3g (< %g)%s, %.1f s (< %g s)", reps.size(), worst,
                   kBoundChange, bad.empty() ? "" : (", failing:" + bad).c_str(), s, kBoundSeconds));
    }
    {
        const CheckResult c = check_product_map(3.5);
        report(4, c.pass, "product-map bookkeeping", c.detail);
    }

    const PipelineConfig base = default_config(1e-3, 128.0, 256);
    const GridPtr grid = SpectralGrid::make(base.grid);
    {
        Stopwatch w;
        bool ok = true;
        std::string d;
        for (double k : {0.25, 1.0, 4.0}) {
            const CheckResult c = check_oracle(base.force, grid, k, kOracleTol);
            ok = ok && c.pass;
            d += fmt("k=%g: %.3g  ", k, c.observed);
        }
        const double s = w.seconds();
        report(5, ok && s < kOracleSeconds, "linear solve vs FD oracle",
               d + fmt("(< %g), %.1f s (< %g s)", kOracleTol, s, kOracleSeconds));
    }

    // Full default pipeline, timed end to end for criterion 8.
    Stopwatch e2e;
    PipelineConfig full = base;
    full.checks = "fast";
    const PipelineResult res = run_pipeline(full, log);
    const double e2e_s = e2e.seconds();
    if (!res.state) {
        std::printf("default pipeline failed: %s\n", res.error.c_str());
        return 9;
    }
    const SolverState& s3 = *res.state;

    const ConvolutionPlan plan(s3.grid);
    std::vector<double> eps{4e-3, 2e-3, 1e-3}, contraction, d_contraction, diff;
    std::vector<SolverState> states;
    for (double e : eps) {
        ForceSpec f = base.force;
        f.epsilon = e;
        SolverState st = e == 1e-3 ? s3 : picard_solve(f, plan, base.solver);
        if (!st.has_derivative) dk_fixed_point(st, plan, base.solver);
        const SolverState lin = linear_solve(f, s3.grid);
        contraction.push_back(st.contraction);
        d_contraction.push_back(st.d_contraction);
        diff.push_back((st.omega - lin.omega).sup());
    }
    {
        const bool mono = contraction[0] > contraction[1] && contraction[1] > contraction[2];
        const double o1 = std::log2(diff[0] / diff[1]), o2 = std::log2(diff[1] / diff[2]);
        const bool order = o1 >= kOrderLo && o1 <= kOrderHi && o2 >= kOrderLo && o2 <= kOrderHi;
        report(6, mono && order, "Picard contraction and epsilon scaling",
               fmt("residual ratio %.3g, %.3g, %.3g for epsilon 4e-3, 2e-3, 1e-3 (monotone: %s); "
                   "sup|omega - omega_lin| %.3g, %.3g, %.3g, orders %.3f, %.3f (in [%g, %g])",
                   contraction[0], contraction[1], contraction[2], mono ? "yes" : "no", diff[0], diff[1], diff[2],
                   o1, o2, kOrderLo, kOrderHi));
    }
    {
        const CheckResult c = check_dk_fd(s3, kDkTol);
        const bool mono = d_contraction[0] > d_contraction[1] && d_contraction[1] > d_contraction[2];
        report(7, c.pass && mono, "derivative fixed point",
               fmt("max |d - FD_k omega| / max |FD_k omega| = %.3g (< %g) on 0.1 <= |k| <= 5; contraction %.3g, "
                   "%.3g, %.3g for epsilon 4e-3, 2e-3, 1e-3 (decreasing: %s)",
                   c.observed, kDkTol, d_contraction[0], d_contraction[1], d_contraction[2], mono ? "yes" : "no"));
    }
    {
        // t_max = 64 keeps the log-spacing of the default t grid.
        const auto n64 = static_cast<std::size_t>(std::lround(1.0 + 255.0 * 6.0 / 7.0));
        const PipelineResult r64 = run_pipeline(default_config(1e-3, 64.0, n64), log);
        bool ok = r64.decay.has_value() && res.decay.has_value() && e2e_s < kEndToEndSeconds;
        std::string d;
        if (ok) {
            const DecayReport &a = *r64.decay, &b = *res.decay;
            const double ch[] = {rel_change(a.M_u, b.M_u), rel_change(a.M_v, b.M_v), rel_change(a.M_w, b.M_w),
                                 rel_change(a.M_x, b.M_x)};
            double worst = 0;
            for (double c : ch) worst = std::max(worst, std::isfinite(c) ? c : INFINITY);
            const bool finite = std::isfinite(b.M_u) && std::isfinite(b.M_v) && std::isfinite(b.M_w) &&
                                std::isfinite(b.M_x);
            const bool slope = std::abs(b.slope_x0 - kSlopeTarget) < kSlopeTol;
            ok = finite && worst < kInflationTol && slope && e2e_s < kEndToEndSeconds;
            d = fmt("sups at t_max 128: y^1.5|u| %.4g, y^1.5|v| %.4g, y^3|omega| %.4g, |xy omega| %.4g; "
                    "changes 64->128 %.3g, %.3g, %.3g, %.3g (< %g); "
                    "slope of log|omega(0,t)| %.3f (target %g +- %g; slope of log max_x|omega| %.3f); "
                    "end-to-end %.1f s (< %g s)",
                    b.M_u, b.M_v, b.M_w, b.M_x, ch[0], ch[1], ch[2], ch[3], kInflationTol, b.slope_x0, kSlopeTarget,
                    kSlopeTol, b.slope_sup, e2e_s, kEndToEndSeconds);
        } else {
            d = "certificate missing";
        }
        report(8, ok, "decay certification", d);
    }
    {
        const CheckResult inc = check_incompressibility(s3, kIdentityTol);
        const CheckResult vor = check_vorticity_identity(s3, kIdentityTol);
        const CheckResult rea = check_reality(s3, kRealityTol);

        PipelineConfig small;
        small.grid = {1e-4, 32.0, 48, 24.0, 64};
        small.x_nodes.n_per_side = 32;
        small.checks = "none";
        const fs::path dir = fs::temp_directory_path() / "wallflow_acceptance";
        fs::remove_all(dir);
        for (const char* sub : {"a", "b"}) emit_reports(run_pipeline(small, log), small, (dir / sub).string());
        std::size_t files = 0, same = 0;
        for (const auto& e : fs::recursive_directory_iterator(dir / "a")) {
            if (!e.is_regular_file()) continue;
            ++files;
            same += slurp(e.path()) == slurp(dir / "b" / fs::relative(e.path(), dir / "a"));
        }
        const bool det = files > 0 && same == files;
        report(9, inc.pass && vor.pass && rea.pass && det, "structural identities",
               fmt("incompressibility %.3g, vorticity identity %.3g (< %g); reality %.3g (< %g); "
                   "%zu of %zu report files byte-identical across two runs",
                   inc.observed, vor.observed, kIdentityTol, rea.observed, kRealityTol, same, files));
    }

    std::printf("%d of 9 criteria failed\n", failures);
    return failures;
}
