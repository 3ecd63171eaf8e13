#include "wallflow/mode_field.hpp"

#include <algorithm>
#include <cmath>

#include "wallflow/errors.hpp"

namespace wallflow {

namespace {
void check_order(int order) {
    if (order != 0 && order != 1) throw DomainError("ModeField: order must be 0 or 1");
}
}  // namespace

ModeField::ModeField(GridPtr grid, int order) : grid_(std::move(grid)), order_(order) {
    check_order(order);
    if (!grid_) throw DomainError("ModeField: null grid");
    nt_ = grid_->nt();
    v_.assign(grid_->nk() * nt_, cplx{});
}

ModeField::ModeField(GridPtr grid, int order, std::vector<cplx> regularized)
    : grid_(std::move(grid)), order_(order), v_(std::move(regularized)) {
    check_order(order);
    if (!grid_) throw DomainError("ModeField: null grid");
    nt_ = grid_->nt();
    if (v_.size() != grid_->nk() * nt_) throw DomainError("ModeField: value count does not match grid");
    for (const cplx& z : v_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("ModeField: non-finite value");
}

ModeField ModeField::generate(GridPtr grid, int order,
                              const std::function<cplx(std::size_t, std::size_t)>& fn) {
    if (!grid) throw DomainError("ModeField: null grid");
    std::vector<cplx> v(grid->nk() * grid->nt());
    const std::size_t nt = grid->nt();
    for (std::size_t ik = 0; ik < grid->nk(); ++ik)
        for (std::size_t it = 0; it < nt; ++it) v[ik * nt + it] = fn(ik, it);
    return ModeField(std::move(grid), order, std::move(v));
}

cplx ModeField::raw(std::size_t ik, std::size_t it) const {
    const cplx z = (*this)(ik, it);
    return order_ == 0 ? z : z / kappa(grid_->k()[ik]);
}

ModeField ModeField::as_order(int order) const {
    check_order(order);
    if (order == order_) return *this;
    std::vector<cplx> v(v_.size());
    for (std::size_t ik = 0; ik < grid_->nk(); ++ik) {
        const cplx kap = kappa(grid_->k()[ik]);
        const cplx f = order > order_ ? kap : 1.0 / kap;
        for (std::size_t it = 0; it < nt_; ++it) v[ik * nt_ + it] = v_[ik * nt_ + it] * f;
    }
    return ModeField(grid_, order, std::move(v));
}

double ModeField::sup() const noexcept {
    double m = 0.0;
    for (const cplx& z : v_) m = std::max(m, std::abs(z));
    return m;
}

double ModeField::reality_residue() const {
    // kappa(-k) = conj kappa(k), so the regularized values share the symmetry.
    double m = 0.0;
    for (std::size_t ik = 0; ik < grid_->nk(); ++ik) {
        const std::size_t jk = grid_->mirror(ik);
        for (std::size_t it = 0; it < nt_; ++it)
            m = std::max(m, std::abs((*this)(ik, it) - std::conj((*this)(jk, it))));
    }
    return m / std::max(1.0, sup());
}

void ModeField::require_compatible(const ModeField& o) const {
    if (grid_ != o.grid_) throw DomainError("ModeField: grid mismatch");
    if (order_ != o.order_) throw DomainError("ModeField: order mismatch");
}

ModeField ModeField::operator+(const ModeField& o) const {
    require_compatible(o);
    std::vector<cplx> v(v_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v_[i];
    return ModeField(grid_, order_, std::move(v));
}

ModeField ModeField::operator-(const ModeField& o) const {
    require_compatible(o);
    std::vector<cplx> v(v_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v_[i];
    return ModeField(grid_, order_, std::move(v));
}

ModeField ModeField::operator*(cplx a) const {
    std::vector<cplx> v(v_);
    for (cplx& z : v) z *= a;
    return ModeField(grid_, order_, std::move(v));
}

}  // namespace wallflow
