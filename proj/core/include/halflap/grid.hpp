#ifndef HALFLAP_GRID_HPP
#define HALFLAP_GRID_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "halflap/errors.hpp"

namespace halflap {

/// Uniform periodic grid over the box [-L, L)^n, n in {1, 2}.
/// Nodes along each axis: x_i = -L + i*h, i in [0, N), h = 2L/N.
class Grid {
public:
    Grid(int dim, int points_per_axis, double half_extent)
        : n_(dim), N_(points_per_axis), L_(half_extent) {
        if (n_ != 1 && n_ != 2)
            throw ConfigError("grid: dim must be 1 or 2, got " + std::to_string(n_));
        if (L_ <= 0.0)
            throw ConfigError("grid: half_extent must be > 0");
        if (N_ < 16 || N_ % 2 != 0)
            throw ConfigError("grid: points_per_axis must be even and >= 16, got " +
                              std::to_string(N_));
        h_ = 2.0 * L_ / static_cast<double>(N_);
    }

    int dim() const { return n_; }
    int points_per_axis() const { return N_; }
    double half_extent() const { return L_; }
    double spacing() const { return h_; }

    /// Total number of nodes, N^n.
    std::size_t size() const {
        std::size_t s = static_cast<std::size_t>(N_);
        return n_ == 1 ? s : s * s;
    }

    /// Node coordinate along one axis.
    double node(int i) const { return -L_ + h_ * static_cast<double>(i); }

    /// Coordinates of the flat node index (row-major for n = 2).
    std::array<double, 2> coords(std::size_t flat) const {
        if (n_ == 1) return {node(static_cast<int>(flat)), 0.0};
        const int i = static_cast<int>(flat / static_cast<std::size_t>(N_));
        const int j = static_cast<int>(flat % static_cast<std::size_t>(N_));
        return {node(i), node(j)};
    }

    /// |x| of a node measured in the fundamental domain (no wrap).
    double radius(std::size_t flat) const {
        const auto c = coords(flat);
        return n_ == 1 ? (c[0] < 0 ? -c[0] : c[0]) : std::sqrt(c[0] * c[0] + c[1] * c[1]);
    }

    bool operator==(const Grid& o) const {
        return n_ == o.n_ && N_ == o.N_ && L_ == o.L_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

private:
    int n_;
    int N_;
    double L_;
    double h_;
};

} // namespace halflap

#endif
