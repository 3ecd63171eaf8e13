/// @file mode_field.hpp
/// @brief Complex field on a SpectralGrid with singularity order n in {0,1}.
///        Values are stored regularized, f_n = kappa^n f; raw() divides on demand.
#pragma once

#include <functional>
#include <vector>

#include "wallflow/grid.hpp"
#include "wallflow/symbols.hpp"

namespace wallflow {

class ModeField {
public:
    ModeField() = default;

    /// Zero field of the given order.
    ModeField(GridPtr grid, int order);

    /// Takes ownership of k-major regularized values (index ik * nt + it).
    ModeField(GridPtr grid, int order, std::vector<cplx> regularized);

    /// Builds from a callable returning the regularized value at (ik, it).
    static ModeField generate(GridPtr grid, int order,
                              const std::function<cplx(std::size_t, std::size_t)>& fn);

    const GridPtr& grid() const noexcept { return grid_; }
    int order() const noexcept { return order_; }
    bool empty() const noexcept { return !grid_; }

    /// Regularized value kappa^n f at node (ik, it).
    cplx operator()(std::size_t ik, std::size_t it) const noexcept { return v_[ik * nt_ + it]; }

    /// Raw value f = stored / kappa^n.
    cplx raw(std::size_t ik, std::size_t it) const;

    const std::vector<cplx>& data() const noexcept { return v_; }

    /// Column at fixed k (t-major contiguous slice).
    const cplx* column(std::size_t ik) const noexcept { return v_.data() + ik * nt_; }

    /// Same field re-expressed with a different order (multiplies or divides by kappa).
    ModeField as_order(int order) const;

    /// max |stored| over the grid.
    double sup() const noexcept;

    /// max over nodes of |f(k) - conj f(-k)| / max(1, sup); zero for a real direct-space field.
    double reality_residue() const;

    ModeField operator+(const ModeField& o) const;
    ModeField operator-(const ModeField& o) const;
    ModeField operator*(cplx a) const;

private:
    void require_compatible(const ModeField& o) const;

    GridPtr grid_;
    int order_ = 0;
    std::size_t nt_ = 0;
    std::vector<cplx> v_;
};

}  // namespace wallflow
