#include "halflap/families.hpp"

#include <cmath>
#include <random>

#include "halflap/field_io.hpp"
#include "halflap/kelvin.hpp"
#include "halflap/transforms.hpp"

namespace halflap {

std::function<double(double)> family_function(const FieldSpec& spec) {
    if (spec.family == "zero") return [](double) { return 0.0; };
    if (spec.family == "lorentzian") return [](double x) { return 1.0 / (1.0 + x * x); };
    if (spec.family == "exp_smooth") {
        const double lam = spec.lambda;
        return [lam](double x) { return std::exp(-lam * std::sqrt(1.0 + x * x)); };
    }
    if (spec.family == "cos") {
        const double k = spec.k;
        return [k](double x) { return std::cos(k * x); };
    }
    if (spec.family == "gaussian") {
        const double s = spec.sigma;
        return [s](double x) { return std::exp(-(x / s) * (x / s)); };
    }
    if (spec.family == "sharpness") {
        const double a = spec.alpha;
        if (!(a > 0.0) || !(a < 1.0))
            throw ConfigError("field family sharpness: alpha must lie in (0, 1)");
        return [a](double x) { return sharpness_trace(a, x); };
    }
    if (spec.family == "file")
        throw ConfigError("field family 'file' has no pointwise form");
    throw ConfigError("unknown field family: " + spec.family);
}

SampledField make_field(const FieldSpec& spec, const Grid& grid) {
    if (spec.family == "file") {
        const std::filesystem::path p(spec.path);
        SampledField f = p.extension() == ".csv" ? read_field_csv(p) : read_field_binary(p);
        if (f.grid() != grid)
            throw ConfigError("field file grid does not match the configured grid");
        return f;
    }
    const auto f = family_function(spec);
    if (grid.dim() == 1) return sample(f, grid);
    // radially symmetric lift for n = 2
    return sample2([&f](double x1, double x2) { return f(std::sqrt(x1 * x1 + x2 * x2)); }, grid);
}

namespace {

SampledField band_limited_impl(const Grid& grid, int k_lo, int k_hi, std::uint64_t seed) {
    if (k_lo < 1 || k_hi < k_lo || k_hi >= grid.points_per_axis() / 2)
        throw ConfigError("random_band_limited: bad mode band");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double L = grid.half_extent();

    if (grid.dim() == 1) {
        std::vector<double> amp, phs, frq;
        for (int k = k_lo; k <= k_hi; ++k) {
            amp.push_back(gauss(rng));
            phs.push_back(2.0 * M_PI * std::generate_canonical<double, 53>(rng));
            frq.push_back(M_PI * k / L);
        }
        const double norm = 1.0 / std::sqrt(static_cast<double>(amp.size()));
        return sample(
            [=](double x) {
                double s = 0.0;
                for (std::size_t m = 0; m < amp.size(); ++m)
                    s += amp[m] * std::cos(frq[m] * x + phs[m]);
                return norm * s;
            },
            grid);
    }

    struct Mode {
        double a, p, f1, f2;
    };
    std::vector<Mode> modes;
    for (int k1 = k_lo; k1 <= k_hi; ++k1)
        for (int k2 = k_lo; k2 <= k_hi; ++k2)
            modes.push_back({gauss(rng), 2.0 * M_PI * std::generate_canonical<double, 53>(rng),
                             M_PI * k1 / L, M_PI * k2 / L});
    const double norm = 1.0 / std::sqrt(static_cast<double>(modes.size()));
    return sample2(
        [=](double x1, double x2) {
            double s = 0.0;
            for (const auto& m : modes) s += m.a * std::cos(m.f1 * x1 + m.f2 * x2 + m.p);
            return norm * s;
        },
        grid);
}

} // namespace

SampledField random_band_limited(const Grid& grid, int k_lo, int k_hi, std::uint64_t seed) {
    SampledField f = band_limited_impl(grid, k_lo, k_hi, seed);
    // remove the residual mean so the field is exactly zero-mean
    SpectralField F = forward_transform(f);
    F.coefficients()[0] = 0.0;
    return inverse_transform(F);
}

SampledField random_band_limited_decaying(const Grid& grid, int k_lo, int k_hi,
                                          double width, std::uint64_t seed) {
    SampledField f = band_limited_impl(grid, k_lo, k_hi, seed);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double r = grid.radius(i) / width;
        f[i] *= std::exp(-r * r);
    }
    return f;
}

} // namespace halflap
