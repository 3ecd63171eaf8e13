#include "wallflow/grid.hpp"

#include <algorithm>
#include <cmath>

#include "wallflow/errors.hpp"

namespace wallflow {

std::vector<double> geometric_nodes(double a, double b, std::size_t n) {
    if (n < 2 || !(a > 0.0) || !(b > a)) throw DomainError("geometric_nodes: need 0 < a < b, n >= 2");
    std::vector<double> out(n);
    const double la = std::log(a), lb = std::log(b);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
    out.front() = a;
    out.back() = b;
    return out;
}

std::shared_ptr<const SpectralGrid> SpectralGrid::make(const GridConfig& cfg) {
    if (!(cfg.k_min > 0.0) || !(cfg.k_max > cfg.k_min)) throw DomainError("grid: need 0 < k_min < k_max");
    if (!(cfg.t_max > 1.0)) throw DomainError("grid: need t_max > 1");
    return from_nodes(geometric_nodes(cfg.k_min, cfg.k_max, cfg.k_nodes_per_side),
                      geometric_nodes(1.0, cfg.t_max, cfg.t_nodes));
}

std::shared_ptr<const SpectralGrid> SpectralGrid::from_nodes(std::vector<double> kp, std::vector<double> t) {
    if (kp.empty()) throw DomainError("grid: no k nodes");
    if (t.size() < 2) throw DomainError("grid: need at least two t nodes");
    if (!(kp.front() > 0.0)) throw DomainError("grid: k nodes must be positive (k = 0 excluded)");
    for (std::size_t i = 1; i < kp.size(); ++i)
        if (!(kp[i] > kp[i - 1])) throw DomainError("grid: k nodes must be strictly increasing");
    if (t.front() != 1.0) throw DomainError("grid: t nodes must start at 1");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1])) throw DomainError("grid: t nodes must be strictly increasing");

    std::vector<double> k;
    k.reserve(2 * kp.size());
    for (auto it = kp.rbegin(); it != kp.rend(); ++it) k.push_back(-*it);
    for (double v : kp) k.push_back(v);
    return std::shared_ptr<const SpectralGrid>(new SpectralGrid(std::move(k), std::move(t)));
}

SpectralGrid::SpectralGrid(std::vector<double> k, std::vector<double> t)
    : k_(std::move(k)), t_(std::move(t)), kw_(k_.size(), 0.0), tw_(t_.size(), 0.0) {
    // Trapezoid weights; the gap cell [-k_min, k_min] is a regular cell.
    for (std::size_t i = 0; i + 1 < k_.size(); ++i) {
        const double h = k_[i + 1] - k_[i];
        kw_[i] += 0.5 * h;
        kw_[i + 1] += 0.5 * h;
    }
    for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
        const double h = t_[i + 1] - t_[i];
        tw_[i] += 0.5 * h;
        tw_[i + 1] += 0.5 * h;
    }
}

std::size_t SpectralGrid::locate_k(double k) const noexcept {
    if (k < k_.front() || k > k_.back()) return npos;
    if (k == k_.back()) return k_.size() - 2;
    auto it = std::upper_bound(k_.begin(), k_.end(), k);
    return static_cast<std::size_t>(it - k_.begin()) - 1;
}

namespace {
std::vector<double> log_refine(std::span<const double> v) {
    std::vector<double> out;
    out.reserve(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out.push_back(std::sqrt(v[i - 1] * v[i]));
        out.push_back(v[i]);
    }
    return out;
}
}  // namespace

std::shared_ptr<const SpectralGrid> SpectralGrid::refined() const {
    std::vector<double> kp(k_.begin() + static_cast<std::ptrdiff_t>(first_positive()), k_.end());
    return from_nodes(log_refine(kp), log_refine(t_));
}

std::shared_ptr<const SpectralGrid> SpectralGrid::truncated_t(double t_cut) const {
    std::vector<double> t;
    for (double v : t_)
        if (v <= t_cut) t.push_back(v);
    if (t.size() < 2) t.assign(t_.begin(), t_.begin() + 2);
    std::vector<double> kp(k_.begin() + static_cast<std::ptrdiff_t>(first_positive()), k_.end());
    return from_nodes(std::move(kp), std::move(t));
}

}  // namespace wallflow
