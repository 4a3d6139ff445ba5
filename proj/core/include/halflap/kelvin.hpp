#ifndef HALFLAP_KELVIN_HPP
#define HALFLAP_KELVIN_HPP

#include <array>
#include <functional>
#include <vector>

#include "halflap/decay_fit.hpp"
#include "halflap/errors.hpp"

namespace halflap {

/// Point of R^(d) with d = n+1 in {2, 3}. The last coordinate is the
/// distinguished one (the half-space height / ball axis).
struct Point {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    int dim = 2;

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    double last() const { return c[static_cast<std::size_t>(dim - 1)]; }
    double norm() const;
    double prime_norm() const; // |z'|, all but the last coordinate
};

/// South pole (0, ..., 0, -1).
Point south_pole(int dim);

double distance(const Point& a, const Point& b);

/// Exclusion radius around the inversion centers; violations are hard
/// errors so that involution tests stay honest.
constexpr double kInversionExclusion = 1e-14;

/// x* = x / |x|^2.
Point inversion_star(const Point& x);

/// Phi(z) = 2 (z - s)* + s = (2 z', 1 - |z|^2) / (|z'|^2 + (1 + z_last)^2);
/// swaps the unit ball and the upper half-space, involution.
Point phi_map(const Point& z);

/// |Phi(z)| through the complex-modulus closed form
/// |((-z_last + 1) + i |z'|) / ((-z_last - 1) + i |z'|)|; an independent
/// code path from phi_map.
double abs_phi(const Point& z);

/// Kelvin transform K[w](z) = 2^((n-1)/2) |z - s|^(1-n) w(Phi(z));
/// n = dim - 1.
double kelvin_transform(const std::function<double(const Point&)>& w, const Point& z);

/// Axis-aligned evaluation region for the harmonicity stencil check.
struct Region {
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{0.0, 0.0, 0.0};
    int dim = 2;
};

/// Max 5/7-point Laplacian residual of z -> K[w](z) over the region at
/// step h. Converges at O(h^2) for w harmonic on Phi(region). The region
/// must avoid the south pole by a 10h margin.
double kelvin_harmonicity_check(const std::function<double(const Point&)>& w,
                                const Region& region, double h);

/// The decaying harmonic family on the half-plane y > 0:
///   h_alpha(x, y) = Re exp(-(-i (x + i y))^alpha), principal branch,
/// bounded by exp(-cos(alpha pi/2) |z|^alpha). Errors: y <= 0 (the trace
/// limit is exposed separately) or alpha outside (0, 1).
double sharpness_counterexample(double alpha, double x, double y);

/// Boundary trace h_alpha(x, 0+), defined for all real x.
double sharpness_trace(double alpha, double x);

/// |exp(-(-i z)^alpha)|: the modulus of the holomorphic exponential whose
/// real part is h_alpha. This is the smooth decay envelope; the real part
/// itself attains it along the imaginary axis but oscillates through
/// +-envelope across a shell, so shell decay is measured on the modulus.
double sharpness_envelope(double alpha, double x, double y);

/// Shell sups of the envelope over |z| in [R, R + dR), y > 0, sampled at
/// samples_per_shell arc points.
std::vector<DecayShell> sharpness_shells(double alpha, double r_min, double r_max,
                                         int shell_count, int samples_per_shell = 512);

} // namespace halflap

#endif
