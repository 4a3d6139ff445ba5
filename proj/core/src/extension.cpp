#include "halflap/extension.hpp"

#include <algorithm>
#include <cmath>

namespace halflap {

HalfSpaceField::HalfSpaceField(SampledField boundary, std::vector<double> heights,
                               std::vector<double> values)
    : boundary_(std::move(boundary)), heights_(std::move(heights)), values_(std::move(values)) {
    if (heights_.empty()) throw ConfigError("half-space field: no heights");
    double prev = 0.0;
    for (double y : heights_) {
        if (!(y > prev))
            throw ConfigError("half-space field: heights must be positive and strictly increasing");
        prev = y;
    }
    if (values_.size() != heights_.size() * boundary_.size())
        throw ConfigError("half-space field: value count mismatch");
}

SampledField HalfSpaceField::slice_field(std::size_t m) const {
    return SampledField(grid(), std::vector<double>(slice(m), slice(m) + boundary_.size()));
}

double HalfSpaceField::max_abs() const {
    double r = boundary_.max_abs();
    for (double v : values_) r = std::max(r, std::fabs(v));
    return r;
}

std::vector<double> geometric_heights(double y1, double rho, int count) {
    if (!(y1 > 0.0) || !(rho > 1.0) || count < 1)
        throw ConfigError("geometric_heights: need y1 > 0, rho > 1, count >= 1");
    std::vector<double> ys(static_cast<std::size_t>(count));
    double y = y1;
    for (auto& v : ys) {
        v = y;
        y *= rho;
    }
    return ys;
}

std::vector<double> uniform_heights(double y_max, int count) {
    if (!(y_max > 0.0) || count < 1)
        throw ConfigError("uniform_heights: need y_max > 0, count >= 1");
    std::vector<double> ys(static_cast<std::size_t>(count));
    const double dy = y_max / static_cast<double>(count);
    for (int m = 0; m < count; ++m) ys[static_cast<std::size_t>(m)] = dy * (m + 1);
    return ys;
}

HalfSpaceField extend(const SampledField& u, const std::vector<double>& heights) {
    SpectralField F = forward_transform(u);
    std::vector<double> values;
    values.reserve(heights.size() * u.size());
    for (double y : heights) {
        SpectralField Fy = F;
        auto& c = Fy.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) c[i] *= std::exp(-F.xi_mag(i) * y);
        SampledField s = inverse_transform(Fy);
        values.insert(values.end(), s.values().begin(), s.values().end());
    }
    return HalfSpaceField(u, heights, std::move(values));
}

SampledField dtn_map(const SampledField& u) {
    // d/dy exp(-|xi| y) at y = 0 is -|xi|; the Neumann trace negates it.
    return apply_multiplier(u, [](const SpectralField& F, std::size_t i) {
        const double deriv_at_zero = -F.xi_mag(i);
        return std::complex<double>(-deriv_at_zero, 0.0);
    });
}

SampledField finite_difference_dtn(const HalfSpaceField& hf, OpDiagnostics* diag) {
    const double y1 = hf.heights().front();
    if (diag && y1 > hf.grid().spacing())
        diag->warnings.push_back("finite_difference_dtn: y1 exceeds grid spacing, O(y1) error dominates");
    const SampledField& u = hf.boundary();
    std::vector<double> v(u.size());
    const double* s1 = hf.slice(0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -(s1[i] - u[i]) / y1;
    return SampledField(u.grid(), std::move(v));
}

ContractionCheck check_l2_contraction(const SampledField& u, const HalfSpaceField& hf) {
    ContractionCheck out;
    const double base = lp_norm(u, 2.0);
    if (base == 0.0) {
        out.trivial = true;
        out.ratios.assign(hf.slice_count(), 0.0);
        return out;
    }
    out.ratios.reserve(hf.slice_count());
    for (std::size_t m = 0; m < hf.slice_count(); ++m)
        out.ratios.push_back(lp_norm(hf.slice_field(m), 2.0) / base);
    return out;
}

namespace {

bool heights_uniform(const std::vector<double>& ys) {
    if (ys.size() < 2) return true;
    const double dy = ys[1] - ys[0];
    if (std::fabs(ys[0] - dy) > 1e-12 * dy) return false; // must start at dy
    for (std::size_t m = 1; m < ys.size(); ++m)
        if (std::fabs(ys[m] - ys[m - 1] - dy) > 1e-12 * dy) return false;
    return true;
}

// cubic Lagrange in y through the 4 nearest recorded heights (boundary
// y = 0 included as a node)
double interp_y(const HalfSpaceField& hf, std::size_t node, double y) {
    const auto& ys = hf.heights();
    std::vector<double> yy;
    std::vector<double> vv;
    yy.push_back(0.0);
    vv.push_back(hf.boundary()[node]);
    for (std::size_t m = 0; m < ys.size(); ++m) {
        yy.push_back(ys[m]);
        vv.push_back(hf.slice(m)[node]);
    }
    auto it = std::lower_bound(yy.begin(), yy.end(), y);
    std::size_t hi = static_cast<std::size_t>(it - yy.begin());
    std::size_t lo = hi > 2 ? hi - 2 : 0;
    if (lo + 4 > yy.size()) lo = yy.size() - 4;
    double acc = 0.0;
    for (std::size_t a = lo; a < lo + 4; ++a) {
        double term = vv[a];
        for (std::size_t b = lo; b < lo + 4; ++b)
            if (b != a) term *= (y - yy[b]) / (yy[a] - yy[b]);
        acc += term;
    }
    return acc;
}

} // namespace

double harmonic_residual(const HalfSpaceField& hf) {
    if (hf.slice_count() < 3)
        throw ConfigError("harmonic_residual: need at least 3 heights for the y-stencil");
    const Grid& g = hf.grid();
    const int N = g.points_per_axis();
    const double h = g.spacing();
    const std::size_t M = hf.slice_count();

    // resample onto uniform heights when needed
    const HalfSpaceField* use = &hf;
    HalfSpaceField resampled = hf;
    if (!heights_uniform(hf.heights())) {
        const double ymax = hf.heights().back();
        auto ys = uniform_heights(ymax, static_cast<int>(M));
        std::vector<double> vals(M * g.size());
        for (std::size_t m = 0; m < M; ++m)
            for (std::size_t i = 0; i < g.size(); ++i)
                vals[m * g.size() + i] = interp_y(hf, i, ys[m]);
        resampled = HalfSpaceField(hf.boundary(), ys, std::move(vals));
        use = &resampled;
    }

    const double dy = use->heights()[1] - use->heights()[0];
    const double scale = std::max(use->max_abs(), 1e-300);
    double worst = 0.0;

    // rows m = 1..M-2 have both y-neighbours recorded; row 0 uses y = 0
    for (std::size_t m = 0; m + 1 < use->slice_count(); ++m) {
        const double* below = m == 0 ? use->boundary().values().data() : use->slice(m - 1);
        const double* here = use->slice(m);
        const double* above = use->slice(m + 1);
        if (g.dim() == 1) {
            for (int i = 0; i < N; ++i) {
                const double lap_x = (here[(i + 1) % N] - 2.0 * here[i] + here[(i + N - 1) % N]) / (h * h);
                const double lap_y = (above[i] - 2.0 * here[i] + below[i]) / (dy * dy);
                worst = std::max(worst, std::fabs(lap_x + lap_y));
            }
        } else {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const std::size_t c = static_cast<std::size_t>(i) * N + j;
                    const double lap_x =
                        (here[static_cast<std::size_t>((i + 1) % N) * N + j] +
                         here[static_cast<std::size_t>((i + N - 1) % N) * N + j] +
                         here[static_cast<std::size_t>(i) * N + (j + 1) % N] +
                         here[static_cast<std::size_t>(i) * N + (j + N - 1) % N] -
                         4.0 * here[c]) /
                        (h * h);
                    const double lap_y = (above[c] - 2.0 * here[c] + below[c]) / (dy * dy);
                    worst = std::max(worst, std::fabs(lap_x + lap_y));
                }
        }
    }
    return worst / scale;
}

namespace {

// y-quadrature cell widths: midpoint cells, the first one anchored at 0
std::vector<double> height_weights(const std::vector<double>& ys) {
    const std::size_t M = ys.size();
    std::vector<double> w(M);
    for (std::size_t m = 0; m < M; ++m) {
        const double lo = m == 0 ? 0.0 : 0.5 * (ys[m - 1] + ys[m]);
        const double hi = m + 1 < M ? 0.5 * (ys[m] + ys[m + 1]) : ys[M - 1] + 0.5 * (ys[M - 1] - ys[M - 2]);
        w[m] = hi - lo;
    }
    return w;
}

double dist2_boundary(const Grid& g, std::size_t flat, const BallSpec& ball) {
    const auto c = g.coords(flat);
    const double dx = c[0] - ball.x0;
    if (g.dim() == 1) return dx * dx;
    const double dy = c[1] - ball.x0_2;
    return dx * dx + dy * dy;
}

double half_ball_l2(const HalfSpaceField& hf, const BallSpec& ball, double r) {
    const Grid& g = hf.grid();
    const double cell = g.dim() == 1 ? g.spacing() : g.spacing() * g.spacing();
    const auto wy = height_weights(hf.heights());
    double acc = 0.0;
    for (std::size_t m = 0; m < hf.slice_count(); ++m) {
        const double y = hf.heights()[m];
        if (y > r) break;
        const double* s = hf.slice(m);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (dist2_boundary(g, i, ball) + y * y <= r * r)
                acc += s[i] * s[i] * cell * wy[m];
        }
    }
    return std::sqrt(acc);
}

double half_ball_sup(const HalfSpaceField& hf, const BallSpec& ball, double r) {
    const Grid& g = hf.grid();
    double sup = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (dist2_boundary(g, i, ball) <= r * r)
            sup = std::max(sup, std::fabs(hf.boundary()[i]));
    for (std::size_t m = 0; m < hf.slice_count(); ++m) {
        const double y = hf.heights()[m];
        if (y > r) break;
        const double* s = hf.slice(m);
        for (std::size_t i = 0; i < g.size(); ++i)
            if (dist2_boundary(g, i, ball) + y * y <= r * r)
                sup = std::max(sup, std::fabs(s[i]));
    }
    return sup;
}

double boundary_ball_lp(const SampledField& f, const BallSpec& ball, double r, double p) {
    const Grid& g = f.grid();
    const double cell = g.dim() == 1 ? g.spacing() : g.spacing() * g.spacing();
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (dist2_boundary(g, i, ball) <= r * r)
            acc += (p == 2.0 ? f[i] * f[i] : std::pow(std::fabs(f[i]), p)) * cell;
    }
    return std::pow(acc, 1.0 / p);
}

void require_ball_fits(const HalfSpaceField& hf, const BallSpec& ball) {
    const Grid& g = hf.grid();
    const double L = g.half_extent();
    if (!(ball.radius >= 1.0)) throw ConfigError("ball: radius must be >= 1");
    const double reach = 16.0 * ball.radius;
    double far = std::fabs(ball.x0) + reach;
    if (g.dim() == 2) far = std::max(far, std::fabs(ball.x0_2) + reach);
    if (far > L) throw ConfigError("ball: B_{16R} does not fit inside the box");
    if (reach > hf.heights().back())
        throw ConfigError("ball: B_{16R} exceeds the recorded heights");
}

} // namespace

ThreeBallResult three_ball_check(const HalfSpaceField& hf, const BallSpec& ball,
                                 const SampledField& dtn, double c) {
    require_ball_fits(hf, ball);
    if (!(c > 0.0)) throw ConfigError("three_ball_check: c must be positive");
    const double R = ball.radius;

    ThreeBallResult out;
    out.c = c;
    out.lhs = half_ball_l2(hf, ball, c * R);
    const double bulk16 = half_ball_l2(hf, ball, 16.0 * R);
    const double u16 = boundary_ball_lp(hf.boundary(), ball, 16.0 * R, 2.0);
    const double d16 = boundary_ball_lp(dtn, ball, 16.0 * R, 2.0);
    out.bracketA = bulk16 + std::sqrt(R) * u16;
    out.bracketB = std::pow(R, 1.5) * d16 + std::sqrt(R) * u16;

    if (out.lhs <= 0.0 || out.bracketA <= 0.0 || out.bracketB <= 0.0 ||
        out.bracketA == out.bracketB) {
        out.degenerate = true;
        return out;
    }
    out.alpha_star = std::log(out.lhs / out.bracketB) / std::log(out.bracketA / out.bracketB);
    return out;
}

SupBoundResult sup_bound_check(const HalfSpaceField& hf, const BallSpec& ball,
                               const SampledField& dtn, double p, double alpha,
                               double c) {
    require_ball_fits(hf, ball);
    const double R = ball.radius;
    SupBoundResult out;
    out.alpha_used = alpha;
    out.lhs_sup = half_ball_sup(hf, ball, c * R);

    const double bulk16 = half_ball_l2(hf, ball, 16.0 * R);
    const double u16 = boundary_ball_lp(hf.boundary(), ball, 16.0 * R, 2.0);
    const double d16 = boundary_ball_lp(dtn, ball, 16.0 * R, 2.0);
    const double A = bulk16 + std::sqrt(R) * u16;
    const double B = std::pow(R, 1.5) * d16 + std::sqrt(R) * u16;
    const double dpR = boundary_ball_lp(dtn, ball, R, p);
    out.rhs_core = std::pow(A, alpha) * std::pow(B, 1.0 - alpha) + std::pow(R, 1.5) * dpR;
    out.c_emp = out.rhs_core > 0.0 ? out.lhs_sup / out.rhs_core : 0.0;
    return out;
}

std::vector<DecayShell> bulk_decay_shells(const HalfSpaceField& hf) {
    const Grid& g = hf.grid();
    const double h = g.spacing();
    const double r_max = 0.8 * std::min(g.half_extent(), hf.heights().back());
    const std::size_t count = static_cast<std::size_t>(r_max / h);
    std::vector<DecayShell> shells(count);
    for (std::size_t k = 0; k < count; ++k) {
        shells[k].radius = h * static_cast<double>(k + 1);
        shells[k].sup = 0.0;
    }
    auto deposit = [&](double r2, double a) {
        const double r = std::sqrt(r2);
        const auto k = static_cast<std::size_t>(r / h);
        if (k >= 1 && k <= count && a > shells[k - 1].sup) shells[k - 1].sup = a;
    };
    for (std::size_t i = 0; i < g.size(); ++i)
        deposit(dist2_boundary(g, i, BallSpec{}), std::fabs(hf.boundary()[i]));
    for (std::size_t m = 0; m < hf.slice_count(); ++m) {
        const double y = hf.heights()[m];
        const double* s = hf.slice(m);
        for (std::size_t i = 0; i < g.size(); ++i)
            deposit(dist2_boundary(g, i, BallSpec{}) + y * y, std::fabs(s[i]));
    }
    return shells;
}

std::vector<DecayShell> axis_decay_shells(const HalfSpaceField& hf) {
    const Grid& g = hf.grid();
    // flat index of the node at the origin
    const int N = g.points_per_axis();
    std::size_t origin = static_cast<std::size_t>(N / 2);
    if (g.dim() == 2) origin = static_cast<std::size_t>(N / 2) * N + N / 2;
    std::vector<DecayShell> out;
    out.reserve(hf.slice_count());
    for (std::size_t m = 0; m < hf.slice_count(); ++m)
        out.push_back({hf.heights()[m], std::fabs(hf.slice(m)[origin])});
    return out;
}

DecayProfile boundary_to_bulk(const SampledField& u, double lambda,
                              const std::vector<double>& heights) {
    // decay precheck: sup |u| e^{lambda |x|} must be finite on the box
    const Grid& g = u.grid();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!std::isfinite(std::fabs(u[i]) * std::exp(lambda * g.radius(i))))
            throw NumericalGuard("boundary_to_bulk: u does not satisfy the decay precondition");

    const HalfSpaceField hf = extend(u, heights);
    DecayProfile profile;
    profile.shells = bulk_decay_shells(hf);

    // fit window [5, r_max] per policy, avoiding near-field transients
    std::vector<DecayShell> window;
    for (const auto& s : profile.shells)
        if (s.radius >= 5.0) window.push_back(s);
    std::size_t nonzero = 0;
    for (const auto& s : window)
        if (s.sup > 0.0) ++nonzero;
    if (nonzero == 0) {
        profile.fit.identically_zero = true;
        return profile;
    }
    if (window.size() < 6) throw ConfigError("boundary_to_bulk: fewer than 6 shells");
    profile.fit = fit_decay_exponent(window);

    auto axis = axis_decay_shells(hf);
    std::vector<DecayShell> axis_window;
    for (const auto& s : axis)
        if (s.radius >= 5.0 && s.sup > 0.0) axis_window.push_back(s);
    if (axis_window.size() >= 6) {
        profile.axis_fit = fit_decay_exponent(axis_window);
        profile.has_axis_fit = true;
    }
    return profile;
}

} // namespace halflap
