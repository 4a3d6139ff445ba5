#ifndef HALFLAP_FIELD_HPP
#define HALFLAP_FIELD_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <utility>
#include <vector>

#include "halflap/grid.hpp"

namespace halflap {

/// Real values of a function on the nodes of a Grid.
class SampledField {
public:
    SampledField(Grid grid, std::vector<double> values)
        : grid_(grid), v_(std::move(values)) {
        if (v_.size() != grid_.size())
            throw ConfigError("sampled field: value count does not match grid");
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (!std::isfinite(v_[i])) {
                const auto c = grid_.coords(i);
                std::ostringstream os;
                os << "sampled field: non-finite value at node " << i
                   << " (x = " << c[0];
                if (grid_.dim() == 2) os << ", " << c[1];
                os << ")";
                throw NumericalGuard(os.str());
            }
        }
    }

    /// All-zero field.
    explicit SampledField(Grid grid)
        : grid_(grid), v_(grid.size(), 0.0) {}

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }
    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::fabs(x));
        return m;
    }

private:
    Grid grid_;
    std::vector<double> v_;
};

/// Complex Fourier coefficients of a SampledField. Storage is FFT order:
/// flat slot j along an axis holds integer wavevector k = j for j < N/2
/// and k = j - N otherwise, so k ranges over [-N/2, N/2). The physical
/// frequency is xi = pi*k/L per axis.
class SpectralField {
public:
    SpectralField(Grid grid, std::vector<std::complex<double>> coeffs)
        : grid_(grid), c_(std::move(coeffs)) {
        if (c_.size() != grid_.size())
            throw ConfigError("spectral field: coefficient count does not match grid");
    }

    const Grid& grid() const { return grid_; }
    const std::vector<std::complex<double>>& coefficients() const { return c_; }
    std::vector<std::complex<double>>& coefficients() { return c_; }
    std::size_t size() const { return c_.size(); }

    /// Signed integer wavevector of an axis slot.
    int wavevector(int slot) const {
        const int N = grid_.points_per_axis();
        return slot < N / 2 ? slot : slot - N;
    }

    /// Physical frequency xi_axis = pi*k/L of an axis slot.
    double xi(int slot) const {
        return M_PI * static_cast<double>(wavevector(slot)) / grid_.half_extent();
    }

    /// |xi| of a flat index (Euclidean over axes for n = 2).
    double xi_mag(std::size_t flat) const {
        const int N = grid_.points_per_axis();
        if (grid_.dim() == 1) return std::fabs(xi(static_cast<int>(flat)));
        const double a = xi(static_cast<int>(flat / static_cast<std::size_t>(N)));
        const double b = xi(static_cast<int>(flat % static_cast<std::size_t>(N)));
        return std::sqrt(a * a + b * b);
    }

    /// Coefficient by signed wavevector (n = 1).
    std::complex<double> coef(int k) const {
        const int N = grid_.points_per_axis();
        return c_[static_cast<std::size_t>((k % N + N) % N)];
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : c_) m = std::max(m, std::abs(z));
        return m;
    }

private:
    Grid grid_;
    std::vector<std::complex<double>> c_;
};

/// Evaluate f on all grid nodes. Non-finite evaluations are rejected with
/// the offending node location.
SampledField sample(const std::function<double(double)>& f, const Grid& grid);
SampledField sample2(const std::function<double(double, double)>& f, const Grid& grid);

} // namespace halflap

#endif
