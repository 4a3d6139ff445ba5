#include "halflap/norms.hpp"

#include <cmath>

namespace halflap {

namespace {

double cell_measure(const Grid& g) {
    const double h = g.spacing();
    return g.dim() == 1 ? h : h * h;
}

} // namespace

double lp_norm(const SampledField& f, double p) {
    if (p == kPInf) return f.max_abs();
    if (!(p >= 1.0)) throw ConfigError("lp_norm: exponent must be >= 1 or inf");
    double s = 0.0;
    if (p == 2.0) {
        for (double v : f.values()) s += v * v;
    } else if (p == 1.0) {
        for (double v : f.values()) s += std::fabs(v);
    } else {
        for (double v : f.values()) s += std::pow(std::fabs(v), p);
    }
    s *= cell_measure(f.grid());
    return std::pow(s, 1.0 / p);
}

double weighted_norm(const SampledField& f, double mu, double p) {
    if (!(p >= 1.0)) throw ConfigError("weighted_norm: exponent must be >= 1");
    const Grid& g = f.grid();
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double w = std::exp(mu * g.radius(i));
        const double a = std::fabs(f[i]);
        const double t = (p == 2.0) ? w * a * a : w * std::pow(a, p);
        s += t;
        if (std::isinf(s)) return kPInf;
    }
    s *= cell_measure(g);
    return std::pow(s, 1.0 / p);
}

double inner_product(const SampledField& f, const SampledField& g) {
    if (f.grid() != g.grid()) throw ConfigError("inner_product: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
    return s * cell_measure(f.grid());
}

double linf_diff(const SampledField& f, const SampledField& g) {
    if (f.grid() != g.grid()) throw ConfigError("linf_diff: grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        m = std::max(m, std::fabs(f[i] - g[i]));
    return m;
}

} // namespace halflap
