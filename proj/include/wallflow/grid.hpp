/// @file grid.hpp
/// @brief Tensor grid on (R \ {0}) x [1, inf): symmetric log-graded k-nodes that
///        skip k = 0, and geometric t-nodes starting at the wall t = 1.
#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace wallflow {

struct GridConfig {
    double k_min = 1e-6;
    double k_max = 64.0;
    std::size_t k_nodes_per_side = 256;
    double t_max = 128.0;
    std::size_t t_nodes = 256;
};

class SpectralGrid {
public:
    /// Log-graded |k| in [k_min, k_max], geometric t in [1, t_max].
    static std::shared_ptr<const SpectralGrid> make(const GridConfig& cfg);

    /// Explicit nodes: positive k values (mirrored to negative) and t nodes.
    /// Validates every invariant; throws DomainError on violation.
    static std::shared_ptr<const SpectralGrid> from_nodes(std::vector<double> k_positive,
                                                          std::vector<double> t_nodes);

    std::span<const double> k() const noexcept { return k_; }
    std::span<const double> t() const noexcept { return t_; }
    std::span<const double> k_weights() const noexcept { return kw_; }
    std::span<const double> t_weights() const noexcept { return tw_; }

    std::size_t nk() const noexcept { return k_.size(); }
    std::size_t nt() const noexcept { return t_.size(); }
    double k_min() const noexcept { return k_[nk() / 2]; }
    double k_max() const noexcept { return k_.back(); }
    double t_max() const noexcept { return t_.back(); }

    /// Index of the node mirrored through k = 0.
    std::size_t mirror(std::size_t ik) const noexcept { return nk() - 1 - ik; }

    /// Index of the first positive k node.
    std::size_t first_positive() const noexcept { return nk() / 2; }

    /// Interval index i with k_[i] <= k < k_[i+1] (the gap cell straddling 0 is the
    /// cell first_positive()-1). Returns npos outside [k_front, k_back].
    std::size_t locate_k(double k) const noexcept;

    /// Grid with every positive-k spacing halved in log scale and every t spacing
    /// halved in log scale (2x refinement on the same ranges).
    std::shared_ptr<const SpectralGrid> refined() const;

    /// Same k nodes, t nodes restricted to t <= t_cut (at least two nodes kept).
    std::shared_ptr<const SpectralGrid> truncated_t(double t_cut) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    SpectralGrid(std::vector<double> k, std::vector<double> t);

    std::vector<double> k_, t_, kw_, tw_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

/// Geometric sequence from a to b inclusive with n >= 2 points.
std::vector<double> geometric_nodes(double a, double b, std::size_t n);

}  // namespace wallflow
