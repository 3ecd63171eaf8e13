/// @file convolution.hpp
/// @brief Quadrature for (f*g)(k,t) = (1/2pi) int f(k-x,t) g(x,t) dx on a SpectralGrid.
///
/// The integral is split at |x| = |k-x|. On each half the factor whose argument
/// is closer to zero sits on its own nodes and the other is interpolated, so an
/// order-1 factor is integrated against its kappa^{-1} singularity exactly once.
/// Both factors are piecewise linear in their regularized values; every
/// sub-interval between breakpoints of either factor gets a Gauss rule, and
/// the cell straddling k = 0 uses the substitution x = +-w^2.
#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <vector>

#include "wallflow/mode_field.hpp"

namespace wallflow {

class ConvolutionPlan {
public:
    explicit ConvolutionPlan(GridPtr grid);

    const GridPtr& grid() const noexcept { return grid_; }

    /// f * g for orders (0,0), (0,1) or (1,0); the result has order 0.
    /// Throws DomainError on grid mismatch or two order-1 inputs.
    ModeField convolve(const ModeField& f, const ModeField& g) const;

private:
    struct Entry {
        std::uint32_t ja;  ///< node of the near-zero factor
        std::uint32_t jb;  ///< node of the interpolated factor
        cplx w;
    };
    struct HalfPlan {
        std::vector<std::size_t> offset;  ///< per output k, into entries
        std::vector<Entry> entries;
    };

    const HalfPlan& half(int order_a, int order_b) const;
    HalfPlan build(int order_a, int order_b) const;

    GridPtr grid_;
    mutable std::array<std::once_flag, 4> once_;
    mutable std::array<HalfPlan, 4> plans_;
};

}  // namespace wallflow
