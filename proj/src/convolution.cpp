#include "wallflow/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wallflow/errors.hpp"
#include "wallflow/quadrature.hpp"

namespace wallflow {

ConvolutionPlan::ConvolutionPlan(GridPtr grid) : grid_(std::move(grid)) {
    if (!grid_) throw DomainError("ConvolutionPlan: null grid");
}

const ConvolutionPlan::HalfPlan& ConvolutionPlan::half(int oa, int ob) const {
    const int id = 2 * oa + ob;
    std::call_once(once_[id], [&] { plans_[id] = build(oa, ob); });
    return plans_[id];
}

namespace {

struct NodeWeight {
    std::size_t node;
    cplx w;
};

/// Interpolation weights of a field of order `order` at argument y: 1 or 2 nodes.
int interp(const SpectralGrid& g, int order, double y, NodeWeight out[2]) {
    const std::size_t c = g.locate_k(y);
    if (c == SpectralGrid::npos) return 0;
    const auto k = g.k();
    const std::size_t gap = g.first_positive() - 1;
    if (order == 1) {
        const cplx inv = 1.0 / kappa(y);
        if (c == gap) {
            out[0] = {y > 0.0 ? c + 1 : c, inv};
            return 1;
        }
        const double th = (y - k[c]) / (k[c + 1] - k[c]);
        out[0] = {c, (1.0 - th) * inv};
        out[1] = {c + 1, th * inv};
        return 2;
    }
    const double th = (y - k[c]) / (k[c + 1] - k[c]);
    out[0] = {c, 1.0 - th};
    out[1] = {c + 1, th};
    return 2;
}

}  // namespace

ConvolutionPlan::HalfPlan ConvolutionPlan::build(int oa, int ob) const {
    const SpectralGrid& g = *grid_;
    const auto kn = g.k();
    const std::size_t nk = g.nk();
    const double kmax = g.k_max();
    const std::size_t gap = g.first_positive() - 1;
    const double scale = 1.0 / (2.0 * std::numbers::pi);
    const GaussRule& g2 = gauss_legendre(2);
    const GaussRule& g8 = gauss_legendre(8);

    std::vector<std::vector<Entry>> per_k(nk);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t ik = 0; ik < nk; ++ik) {
        const double k = kn[ik];
        double lo, hi;
        if (k > 0) {
            lo = std::max(-kmax, k - kmax);
            hi = 0.5 * k;
        } else {
            lo = 0.5 * k;
            hi = std::min(kmax, k + kmax);
        }
        std::vector<double> br{lo, hi, 0.0};
        for (double x : kn)
            if (x > lo && x < hi) br.push_back(x);
        for (double y : kn) {
            const double x = k - y;
            if (x > lo && x < hi) br.push_back(x);
        }
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end()), br.end());

        std::vector<Entry> ent;
        ent.reserve(8 * br.size());
        auto add_point = [&](double x, cplx wq) {
            NodeWeight wa[2], wb[2];
            const int na = interp(g, oa, x, wa);
            const int nb = interp(g, ob, k - x, wb);
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j)
                    ent.push_back({static_cast<std::uint32_t>(wa[i].node), static_cast<std::uint32_t>(wb[j].node),
                                   scale * wq * wa[i].w * wb[j].w});
        };
        for (std::size_t i = 0; i + 1 < br.size(); ++i) {
            const double x1 = br[i], x2 = br[i + 1];
            if (x1 < lo || x2 > hi || !(x2 > x1)) continue;
            const double xm = 0.5 * (x1 + x2);
            if (g.locate_k(k - xm) == SpectralGrid::npos) continue;
            const bool a_gap = g.locate_k(xm) == gap;
            const bool b_gap = g.locate_k(k - xm) == gap;
            if (a_gap && oa == 1) {
                // x = sgn w^2 removes the |x|^{-1/2} behaviour of 1/kappa(x).
                const double sg = xm > 0 ? 1.0 : -1.0;
                const double w1 = std::sqrt(std::abs(x1)), w2 = std::sqrt(std::abs(x2));
                const double wl = std::min(w1, w2), wh = std::max(w1, w2);
                for (std::size_t q = 0; q < g8.x.size(); ++q) {
                    const double w = 0.5 * (wl + wh) + 0.5 * (wh - wl) * g8.x[q];
                    add_point(sg * w * w, 0.5 * (wh - wl) * g8.w[q] * 2.0 * w);
                }
                continue;
            }
            const GaussRule& rule = (a_gap || b_gap) ? g8 : g2;
            for (std::size_t q = 0; q < rule.x.size(); ++q)
                add_point(xm + 0.5 * (x2 - x1) * rule.x[q], 0.5 * (x2 - x1) * rule.w[q]);
        }
        std::sort(ent.begin(), ent.end(),
                  [](const Entry& a, const Entry& b) { return a.ja != b.ja ? a.ja < b.ja : a.jb < b.jb; });
        std::vector<Entry> merged;
        merged.reserve(ent.size() / 2 + 1);
        for (const auto& e : ent) {
            if (!merged.empty() && merged.back().ja == e.ja && merged.back().jb == e.jb)
                merged.back().w += e.w;
            else
                merged.push_back(e);
        }
        per_k[ik] = std::move(merged);
    }

    HalfPlan plan;
    plan.offset.resize(nk + 1, 0);
    for (std::size_t ik = 0; ik < nk; ++ik) plan.offset[ik + 1] = plan.offset[ik] + per_k[ik].size();
    plan.entries.reserve(plan.offset[nk]);
    for (auto& v : per_k) plan.entries.insert(plan.entries.end(), v.begin(), v.end());
    return plan;
}

namespace {

/// o += w * a * b elementwise, written out to keep the loop free of the
/// library's NaN-recovering complex multiply.
inline void accumulate(cplx* o, cplx w, const cplx* a, const cplx* b, std::size_t n) {
    const double wr = w.real(), wi = w.imag();
    auto* od = reinterpret_cast<double*>(o);
    const auto* ad = reinterpret_cast<const double*>(a);
    const auto* bd = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < n; ++i) {
        const double pr = ad[2 * i] * bd[2 * i] - ad[2 * i + 1] * bd[2 * i + 1];
        const double pi = ad[2 * i] * bd[2 * i + 1] + ad[2 * i + 1] * bd[2 * i];
        od[2 * i] += wr * pr - wi * pi;
        od[2 * i + 1] += wr * pi + wi * pr;
    }
}

}  // namespace

ModeField ConvolutionPlan::convolve(const ModeField& f, const ModeField& g) const {
    if (f.grid() != grid_ || g.grid() != grid_) throw DomainError("convolve: grid mismatch");
    if (f.order() == 1 && g.order() == 1) throw DomainError("convolve: two singular factors");
    const std::size_t nk = grid_->nk(), nt = grid_->nt();
    std::vector<cplx> out(nk * nt, cplx{});
    // (f*g)(k) = H(g,f)(k) + H(f,g)(k), H(a,b) integrating a near zero.
    const HalfPlan& p1 = half(g.order(), f.order());
    const HalfPlan& p2 = half(f.order(), g.order());
    const cplx* fd = f.data().data();
    const cplx* gd = g.data().data();
#pragma omp parallel for schedule(static)
    for (std::size_t ik = 0; ik < nk; ++ik) {
        cplx* o = out.data() + ik * nt;
        for (std::size_t e = p1.offset[ik]; e < p1.offset[ik + 1]; ++e) {
            const Entry& en = p1.entries[e];
            const cplx* a = gd + en.ja * nt;
            const cplx* b = fd + en.jb * nt;
            accumulate(o, en.w, a, b, nt);
        }
        for (std::size_t e = p2.offset[ik]; e < p2.offset[ik + 1]; ++e) {
            const Entry& en = p2.entries[e];
            const cplx* a = fd + en.ja * nt;
            const cplx* b = gd + en.jb * nt;
            accumulate(o, en.w, a, b, nt);
        }
    }
    return ModeField(grid_, 0, std::move(out));
}

}  // namespace wallflow
