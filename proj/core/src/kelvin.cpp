#include "halflap/kelvin.hpp"

#include <cmath>
#include <complex>

namespace halflap {

double Point::norm() const {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
    return std::sqrt(s);
}

double Point::prime_norm() const {
    double s = 0.0;
    for (int i = 0; i + 1 < dim; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
    return std::sqrt(s);
}

Point south_pole(int dim) {
    Point s;
    s.dim = dim;
    s[dim - 1] = -1.0;
    return s;
}

double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Point inversion_star(const Point& x) {
    const double r = x.norm();
    if (r <= kInversionExclusion)
        throw NumericalGuard("inversion_star: point within exclusion radius of 0");
    Point out = x;
    const double inv = 1.0 / (r * r);
    for (int i = 0; i < x.dim; ++i) out[i] = x[i] * inv;
    return out;
}

Point phi_map(const Point& z) {
    const Point s = south_pole(z.dim);
    if (distance(z, s) <= kInversionExclusion)
        throw NumericalGuard("phi_map: point within exclusion radius of the south pole");
    const double zp2 = z.prime_norm() * z.prime_norm();
    const double zl = z.last();
    const double denom = zp2 + (1.0 + zl) * (1.0 + zl);
    double n2 = zp2 + zl * zl; // |z|^2
    Point out = z;
    for (int i = 0; i + 1 < z.dim; ++i) out[i] = 2.0 * z[i] / denom;
    out[z.dim - 1] = (1.0 - n2) / denom;
    return out;
}

double abs_phi(const Point& z) {
    const Point s = south_pole(z.dim);
    if (distance(z, s) <= kInversionExclusion)
        throw NumericalGuard("abs_phi: point within exclusion radius of the south pole");
    const std::complex<double> num(-z.last() + 1.0, z.prime_norm());
    const std::complex<double> den(-z.last() - 1.0, z.prime_norm());
    return std::abs(num / den);
}

double kelvin_transform(const std::function<double(const Point&)>& w, const Point& z) {
    const int n = z.dim - 1;
    const Point s = south_pole(z.dim);
    const double d = distance(z, s);
    if (d <= kInversionExclusion)
        throw NumericalGuard("kelvin_transform: point within exclusion radius of the south pole");
    const double prefactor = std::pow(2.0, 0.5 * (n - 1)) * std::pow(d, 1.0 - n);
    return prefactor * w(phi_map(z));
}

double kelvin_harmonicity_check(const std::function<double(const Point&)>& w,
                                const Region& region, double h) {
    if (!(h > 0.0)) throw ConfigError("kelvin_harmonicity_check: h must be positive");
    const int d = region.dim;
    const Point s = south_pole(d);

    auto K = [&](const Point& z) { return kelvin_transform(w, z); };

    // region corners must keep a 10h margin from the pole
    // (checked pointwise below for every stencil node)
    std::array<int, 3> steps{1, 1, 1};
    for (int i = 0; i < d; ++i) {
        if (region.hi[static_cast<std::size_t>(i)] < region.lo[static_cast<std::size_t>(i)])
            throw ConfigError("kelvin_harmonicity_check: empty region");
        steps[static_cast<std::size_t>(i)] =
            std::max(1, static_cast<int>((region.hi[static_cast<std::size_t>(i)] -
                                          region.lo[static_cast<std::size_t>(i)]) / h));
    }

    double worst = 0.0;
    auto visit = [&](const Point& z) {
        Point probe = z;
        // all stencil nodes must stay clear of the pole
        for (int i = 0; i < d; ++i) {
            for (double off : {-h, 0.0, h}) {
                probe = z;
                probe[i] = z[i] + off;
                if (distance(probe, s) < 10.0 * h)
                    throw ConfigError("kelvin_harmonicity_check: region touches the south pole");
            }
        }
        const double center = K(z);
        double lap = 0.0;
        for (int i = 0; i < d; ++i) {
            Point zp = z, zm = z;
            zp[i] = z[i] + h;
            zm[i] = z[i] - h;
            lap += (K(zp) - 2.0 * center + K(zm)) / (h * h);
        }
        worst = std::max(worst, std::fabs(lap));
    };

    Point z;
    z.dim = d;
    for (int a = 0; a <= steps[0]; ++a) {
        z[0] = region.lo[0] + h * a;
        if (z[0] > region.hi[0] + 1e-12) break;
        for (int b = 0; b <= steps[1]; ++b) {
            if (d >= 2) {
                z[1] = region.lo[1] + h * b;
                if (z[1] > region.hi[1] + 1e-12) break;
            }
            if (d == 2) {
                visit(z);
                continue;
            }
            for (int e = 0; e <= steps[2]; ++e) {
                z[2] = region.lo[2] + h * e;
                if (z[2] > region.hi[2] + 1e-12) break;
                visit(z);
            }
        }
    }
    return worst;
}

namespace {

std::complex<double> holomorphic_exp(double alpha, double x, double y) {
    // w = -i z maps the upper half-plane to the right half-plane, where the
    // principal branch of w^alpha is holomorphic.
    const std::complex<double> z(x, y);
    const std::complex<double> w = std::complex<double>(0.0, -1.0) * z;
    return std::exp(-std::pow(w, alpha));
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw ConfigError("sharpness: alpha must lie in (0, 1)");
}

} // namespace

double sharpness_counterexample(double alpha, double x, double y) {
    require_alpha(alpha);
    if (!(y > 0.0)) throw ConfigError("sharpness_counterexample: require y > 0");
    return holomorphic_exp(alpha, x, y).real();
}

double sharpness_trace(double alpha, double x) {
    require_alpha(alpha);
    if (x == 0.0) return 1.0;
    // -i x sits on the imaginary axis; the principal branch is defined there
    return holomorphic_exp(alpha, x, 0.0).real();
}

double sharpness_envelope(double alpha, double x, double y) {
    require_alpha(alpha);
    if (!(y >= 0.0)) throw ConfigError("sharpness_envelope: require y >= 0");
    return std::abs(holomorphic_exp(alpha, x, y));
}

std::vector<DecayShell> sharpness_shells(double alpha, double r_min, double r_max,
                                         int shell_count, int samples_per_shell) {
    require_alpha(alpha);
    if (shell_count < 6) throw ConfigError("sharpness_shells: need at least 6 shells");
    std::vector<DecayShell> shells(static_cast<std::size_t>(shell_count));
    for (int k = 0; k < shell_count; ++k) {
        const double R = r_min + (r_max - r_min) * k / (shell_count - 1);
        double sup = 0.0;
        for (int j = 0; j < samples_per_shell; ++j) {
            // phi in (0, pi), clustered ends via uniform sampling plus the
            // near-boundary limits appended explicitly
            const double phi = M_PI * (j + 0.5) / samples_per_shell;
            sup = std::max(sup, sharpness_envelope(alpha, R * std::cos(phi), R * std::sin(phi)));
        }
        for (double phi : {1e-9, M_PI - 1e-9})
            sup = std::max(sup, sharpness_envelope(alpha, R * std::cos(phi), R * std::sin(phi)));
        shells[static_cast<std::size_t>(k)] = {R, sup};
    }
    return shells;
}

} // namespace halflap
