#include "halflap/decay_fit.hpp"

#include <algorithm>
#include <cmath>

#include "halflap/errors.hpp"

namespace halflap {

namespace {

struct LinFit {
    double intercept, slope, sse, sst;
};

// least squares of y on x
LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    LinFit f{};
    f.slope = den != 0.0 ? (n * sxy - sx * sy) / den : 0.0;
    f.intercept = (sy - f.slope * sx) / n;
    const double ybar = sy / n;
    f.sse = 0.0;
    f.sst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        f.sse += r * r;
        f.sst += (y[i] - ybar) * (y[i] - ybar);
    }
    return f;
}

double sse_at_alpha(const std::vector<double>& R, const std::vector<double>& logS,
                    double alpha) {
    std::vector<double> x(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) x[i] = std::pow(R[i], alpha);
    return linear_fit(x, logS).sse;
}

} // namespace

DecayFit fit_decay_exponent(const std::vector<DecayShell>& shells) {
    DecayFit fit;
    std::vector<double> R, logS;
    for (const auto& s : shells) {
        if (s.sup > 0.0) {
            R.push_back(s.radius);
            logS.push_back(std::log(s.sup));
        } else {
            ++fit.shells_dropped;
        }
    }
    fit.shells_used = R.size();
    if (R.empty()) {
        fit.identically_zero = true;
        return fit;
    }
    if (R.size() < 6) throw ConfigError("fit_decay_exponent: need at least 6 nonzero shells");

    for (std::size_t i = 1; i < shells.size(); ++i)
        if (shells[i].sup > shells[i - 1].sup * (1.0 + 1e-12)) fit.non_monotone = true;

    // coarse grid then golden-section refinement in alpha
    constexpr double kAlphaLo = 0.05, kAlphaHi = 2.0;
    double best_a = kAlphaLo, best_sse = sse_at_alpha(R, logS, kAlphaLo);
    const int grid_pts = 240;
    for (int i = 1; i < grid_pts; ++i) {
        const double a = kAlphaLo + (kAlphaHi - kAlphaLo) * i / (grid_pts - 1);
        const double s = sse_at_alpha(R, logS, a);
        if (s < best_sse) {
            best_sse = s;
            best_a = a;
        }
    }
    const double step = (kAlphaHi - kAlphaLo) / (grid_pts - 1);
    double lo = std::max(kAlphaLo, best_a - step), hi = std::min(kAlphaHi, best_a + step);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
    double f1 = sse_at_alpha(R, logS, m1), f2 = sse_at_alpha(R, logS, m2);
    for (int it = 0; it < 120 && hi - lo > 1e-10; ++it) {
        if (f1 <= f2) {
            hi = m2;
            m2 = m1;
            f2 = f1;
            m1 = hi - gr * (hi - lo);
            f1 = sse_at_alpha(R, logS, m1);
        } else {
            lo = m1;
            m1 = m2;
            f1 = f2;
            m2 = lo + gr * (hi - lo);
            f2 = sse_at_alpha(R, logS, m2);
        }
    }
    fit.alpha = 0.5 * (lo + hi);

    std::vector<double> x(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) x[i] = std::pow(R[i], fit.alpha);
    const LinFit lf = linear_fit(x, logS);
    fit.c = -lf.slope;
    fit.C = std::exp(lf.intercept);
    fit.r_squared = lf.sst > 0.0 ? 1.0 - lf.sse / lf.sst : 1.0;

    std::vector<double> logR(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) logR[i] = std::log(R[i]);
    const LinFit pf = linear_fit(logR, logS);
    fit.power = -pf.slope;
    fit.C_pow = std::exp(pf.intercept);
    fit.r_squared_pow = pf.sst > 0.0 ? 1.0 - pf.sse / pf.sst : 1.0;
    fit.fallback_preferred = pf.sse < lf.sse;
    return fit;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::TRIVIAL_FIELD: return "TRIVIAL_FIELD";
        case Verdict::EXPONENTIAL_DECAY_HENCE_TRIVIAL: return "EXPONENTIAL_DECAY_HENCE_TRIVIAL";
        case Verdict::NO_CONTRADICTION: return "NO_CONTRADICTION";
    }
    return "NO_CONTRADICTION";
}

Verdict liouville_verdict(const DecayProfile& profile, double c_threshold,
                          const VerdictPolicy& policy) {
    if (profile.fit.identically_zero) return Verdict::TRIVIAL_FIELD;
    const DecayFit& f = profile.fit;
    if (f.alpha >= policy.alpha_min && f.c >= c_threshold && f.r_squared >= policy.r2_min)
        return Verdict::EXPONENTIAL_DECAY_HENCE_TRIVIAL;
    return Verdict::NO_CONTRADICTION;
}

} // namespace halflap
