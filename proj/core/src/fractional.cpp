#include "halflap/fractional.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace halflap {

double OperatorBackend::normalization(int n) {
    // Gamma((n+1)/2) / pi^((n+1)/2)
    return std::tgamma(0.5 * (n + 1)) / std::pow(M_PI, 0.5 * (n + 1));
}

namespace {

void reject_nonfinite(const SampledField& f, const char* who) {
    for (double v : f.values())
        if (!std::isfinite(v)) throw NumericalGuard(std::string(who) + ": non-finite input");
}

SampledField half_laplacian_spectral(const SampledField& f) {
    return apply_multiplier(f, [](const SpectralField& F, std::size_t i) {
        return std::complex<double>(F.xi_mag(i), 0.0);
    });
}

// n = 1 periodized kernel: sum over images of 1/t^2 has the closed form
//   K(t) = (pi/2L)^2 / sin^2(pi t / 2L).
// Near t = 0, K(t) = 1/t^2 + (1/3)(pi/2L)^2 + O(t^2); the excluded singular
// cell contributes -f''(x) h / 2 from the 1/t^2 part (odd part cancels by
// symmetric pairing), with f'' taken from the 3-point stencil.
SampledField half_laplacian_si_1d(const SampledField& f) {
    const Grid& g = f.grid();
    const int N = g.points_per_axis();
    const double L = g.half_extent();
    const double h = g.spacing();
    const double c0 = OperatorBackend::normalization(1);

    std::vector<double> kper(static_cast<std::size_t>(N), 0.0);
    const double w = M_PI / (2.0 * L);
    for (int d = 1; d < N; ++d) {
        const double s = std::sin(w * static_cast<double>(d) * h);
        kper[static_cast<std::size_t>(d)] = w * w / (s * s) * h;
    }

    const auto& v = f.values();
    std::vector<double> out(static_cast<std::size_t>(N));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < N; ++i) {
        double s = 0.0;
        const double fi = v[static_cast<std::size_t>(i)];
        for (int d = 1; d < N; ++d) {
            const int j = i - d >= 0 ? i - d : i - d + N;
            s += (fi - v[static_cast<std::size_t>(j)]) * kper[static_cast<std::size_t>(d)];
        }
        const double fm = v[static_cast<std::size_t>((i + N - 1) % N)];
        const double fp = v[static_cast<std::size_t>((i + 1) % N)];
        s += -(fp - 2.0 * fi + fm) / (2.0 * h);
        out[static_cast<std::size_t>(i)] = c0 * s;
    }
    return SampledField(g, std::move(out));
}

// n = 2: kernel table K(dx) = sum over images |dx - 2Lm|^-3 truncated at
// |m|_inf <= M, remainder folded in as a mean correction
//   sum_{|m|>M} |2Lm|^-3 * ((2L)^2 f(x) - int f),
// which is the far-image action on a field seen as constant per cell.
// Singular cell: -(sqrt(pi)/2) h * laplace f (area-matched disc).
constexpr int kImageRings2d = 30;

double far_image_sum_2d() {
    // sum over |m|_inf > M of |m|^-3
    double s = 0.0;
    const int M = kImageRings2d, far = 1000;
    for (int a = -far; a <= far; ++a)
        for (int b = -far; b <= far; ++b) {
            if (std::max(std::abs(a), std::abs(b)) <= M) continue;
            const double r = std::sqrt(static_cast<double>(a) * a + static_cast<double>(b) * b);
            s += 1.0 / (r * r * r);
        }
    // annulus beyond the enumeration, integral estimate
    s += 2.0 * M_PI / static_cast<double>(far);
    return s;
}

SampledField half_laplacian_si_2d(const SampledField& f) {
    const Grid& g = f.grid();
    const int N = g.points_per_axis();
    const double L = g.half_extent();
    const double h = g.spacing();
    const double c0 = OperatorBackend::normalization(2);

    // kernel table over periodic offsets (di, dj) in [0, N)^2
    std::vector<double> K(static_cast<std::size_t>(N) * N, 0.0);
    for (int di = 0; di < N; ++di)
        for (int dj = 0; dj < N; ++dj) {
            if (di == 0 && dj == 0) continue;
            const double tx = static_cast<double>(di) * h;
            const double ty = static_cast<double>(dj) * h;
            double s = 0.0;
            for (int mi = -kImageRings2d; mi <= kImageRings2d; ++mi)
                for (int mj = -kImageRings2d; mj <= kImageRings2d; ++mj) {
                    const double ax = tx - 2.0 * L * mi;
                    const double ay = ty - 2.0 * L * mj;
                    const double r2 = ax * ax + ay * ay;
                    s += 1.0 / (r2 * std::sqrt(r2));
                }
            K[static_cast<std::size_t>(di) * N + dj] = s * h * h;
        }

    static const double kFarSum = far_image_sum_2d();
    const double inv2L = 1.0 / (2.0 * L);
    const double far_coef = kFarSum * inv2L * inv2L * inv2L;

    const auto& v = f.values();
    double fint = 0.0;
    for (double x : v) fint += x;
    fint *= h * h;

    std::vector<double> out(g.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const double fi = v[static_cast<std::size_t>(i) * N + j];
            double s = 0.0;
            for (int a = 0; a < N; ++a) {
                const int di = (i - a + N) % N;
                const double* Krow = &K[static_cast<std::size_t>(di) * N];
                const double* frow = &v[static_cast<std::size_t>(a) * N];
                for (int b = 0; b < N; ++b) {
                    const int dj = (j - b + N) % N;
                    s += (fi - frow[b]) * Krow[dj];
                }
            }
            // far images
            s += far_coef * (4.0 * L * L * fi - fint);
            // singular cell via 5-point laplacian
            const double lap =
                (v[static_cast<std::size_t>((i + 1) % N) * N + j] +
                 v[static_cast<std::size_t>((i + N - 1) % N) * N + j] +
                 v[static_cast<std::size_t>(i) * N + (j + 1) % N] +
                 v[static_cast<std::size_t>(i) * N + (j + N - 1) % N] - 4.0 * fi) /
                (h * h);
            s += -(std::sqrt(M_PI) / 2.0) * h * lap;
            out[static_cast<std::size_t>(i) * N + j] = c0 * s;
        }
    }
    return SampledField(g, std::move(out));
}

} // namespace

SampledField half_laplacian(const SampledField& f, const OperatorBackend& backend,
                            OpDiagnostics* diag) {
    reject_nonfinite(f, "half_laplacian");
    if (diag) {
        const double tr = spectral_tail_ratio(f);
        if (tr > kResolutionWarnThreshold)
            diag->warnings.push_back("half_laplacian: field under-resolved, spectral tail ratio " +
                                     std::to_string(tr));
    }
    if (backend.kind == BackendKind::Spectral) return half_laplacian_spectral(f);
    return f.grid().dim() == 1 ? half_laplacian_si_1d(f) : half_laplacian_si_2d(f);
}

SampledField riesz_transform(const SampledField& f, int axis) {
    const int n = f.grid().dim();
    if (axis < 1 || axis > n)
        throw ConfigError("riesz_transform: axis out of range");
    const int N = f.grid().points_per_axis();
    return apply_multiplier(f, [axis, n, N](const SpectralField& F, std::size_t i) {
        const double mag = F.xi_mag(i);
        if (mag == 0.0) return std::complex<double>(0.0, 0.0);
        int slot;
        if (n == 1) {
            slot = static_cast<int>(i);
        } else {
            const auto Nz = static_cast<std::size_t>(N);
            slot = axis == 1 ? static_cast<int>(i / Nz) : static_cast<int>(i % Nz);
        }
        if (F.wavevector(slot) == -N / 2) return std::complex<double>(0.0, 0.0);
        return std::complex<double>(0.0, -F.xi(slot) / mag);
    });
}

std::vector<SampledField> gradient(const SampledField& f) {
    const int n = f.grid().dim();
    const int N = f.grid().points_per_axis();
    std::vector<SampledField> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int axis = 1; axis <= n; ++axis) {
        out.push_back(apply_multiplier(f, [axis, n, N](const SpectralField& F, std::size_t i) {
            int slot;
            if (n == 1) {
                slot = static_cast<int>(i);
            } else {
                const auto Nz = static_cast<std::size_t>(N);
                slot = axis == 1 ? static_cast<int>(i / Nz) : static_cast<int>(i % Nz);
            }
            if (F.wavevector(slot) == -N / 2) return std::complex<double>(0.0, 0.0);
            return std::complex<double>(0.0, F.xi(slot));
        }));
    }
    return out;
}

SampledField gradient_magnitude(const SampledField& f) {
    auto g = gradient(f);
    std::vector<double> v(f.size(), 0.0);
    for (const auto& comp : g)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += comp[i] * comp[i];
    for (double& x : v) x = std::sqrt(x);
    return SampledField(f.grid(), std::move(v));
}

double verify_riesz_bound(const SampledField& psi, double p, double* mean_removed) {
    SpectralField F = forward_transform(psi);
    const double mean = std::abs(F.coefficients()[0]);
    F.coefficients()[0] = 0.0;
    if (mean_removed) *mean_removed = mean;
    SampledField zm = inverse_transform(F);

    const double num = lp_norm(gradient_magnitude(zm), p);
    const double den = lp_norm(half_laplacian(zm, OperatorBackend::spectral()), p);
    if (den < 1e-14)
        throw NumericalGuard("verify_riesz_bound: undefined ratio, ||(-lap)^{1/2} psi||_p < 1e-14");
    return num / den;
}

SampledField zero_extend_doubled(const SampledField& f) {
    const Grid& g = f.grid();
    const int N = g.points_per_axis();
    Grid g2(g.dim(), 2 * N, 2.0 * g.half_extent());
    std::vector<double> v(g2.size(), 0.0);
    if (g.dim() == 1) {
        // old nodes -L..L-h map onto the same coordinates in the new box
        for (int i = 0; i < N; ++i)
            v[static_cast<std::size_t>(i + N / 2)] = f[static_cast<std::size_t>(i)];
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                v[static_cast<std::size_t>(i + N / 2) * (2 * N) + (j + N / 2)] =
                    f[static_cast<std::size_t>(i) * N + j];
    }
    return SampledField(g2, std::move(v));
}

namespace {

ReportQuantity stability_pair(double at_l, double at_2l, double box) {
    ReportQuantity q;
    q.value = at_l;
    q.value_doubled = at_2l;
    q.box_used = box;
    q.overflow = std::isinf(at_l) || std::isinf(at_2l);
    if (!q.overflow) {
        const double denom = std::max(std::fabs(at_l), 1e-300);
        q.converged = std::fabs(at_2l - at_l) / denom < 0.05;
    }
    return q;
}

struct DecayQuantities {
    double hl_w2, hl_wp, grad_p, hess_p, grad_w2;
};

DecayQuantities measure(const SampledField& u, double lambda, int p,
                        const OperatorBackend& backend) {
    DecayQuantities q{};
    const SampledField hl = half_laplacian(u, backend);
    const double mu = 0.5 * lambda;
    // weighted integrals (not norms): p-th power of weighted_norm
    q.hl_w2 = std::pow(weighted_norm(hl, mu, 2.0), 2.0);
    q.hl_wp = std::pow(weighted_norm(hl, mu, static_cast<double>(p)), static_cast<double>(p));
    const SampledField gm = gradient_magnitude(u);
    q.grad_p = lp_norm(gm, static_cast<double>(p));
    // Frobenius |grad^2 u| from spectral second derivatives
    auto g1 = gradient(u);
    std::vector<double> hess2(u.size(), 0.0);
    for (const auto& comp : g1) {
        auto g2 = gradient(comp);
        for (const auto& c2 : g2)
            for (std::size_t i = 0; i < hess2.size(); ++i) hess2[i] += c2[i] * c2[i];
    }
    for (double& x : hess2) x = std::sqrt(x);
    q.hess_p = lp_norm(SampledField(u.grid(), std::move(hess2)), static_cast<double>(p));
    q.grad_w2 = std::pow(weighted_norm(gm, mu, 2.0), 2.0);
    return q;
}

} // namespace

WeightedDecayReport weighted_decay_report(const SampledField& u,
                                          const std::vector<SampledField>& b,
                                          double lambda, int p,
                                          const OperatorBackend& backend) {
    const int n = u.grid().dim();
    if (p <= n) throw ConfigError("weighted_decay_report: need integer exponent p > n");
    if (!b.empty() && static_cast<int>(b.size()) != n)
        throw ConfigError("weighted_decay_report: drift must have one component per axis");

    const DecayQuantities q1 = measure(u, lambda, p, backend);
    const DecayQuantities q2 = measure(zero_extend_doubled(u), lambda, p, backend);
    const double L = u.grid().half_extent();

    WeightedDecayReport r;
    r.lambda = lambda;
    r.p = p;
    r.half_lap_weighted_l2 = stability_pair(q1.hl_w2, q2.hl_w2, L);
    r.half_lap_weighted_lp = stability_pair(q1.hl_wp, q2.hl_wp, L);
    r.grad_lp = stability_pair(q1.grad_p, q2.grad_p, L);
    r.hessian_lp = stability_pair(q1.hess_p, q2.hess_p, L);
    r.grad_weighted_l2 = stability_pair(q1.grad_w2, q2.grad_w2, L);

    for (const auto& comp : b) r.b_sup = std::max(r.b_sup, comp.max_abs());
    if (u.max_abs() > 0.0) {
        try {
            r.riesz_ratio = verify_riesz_bound(u, static_cast<double>(p));
        } catch (const NumericalGuard&) {
            r.riesz_ratio = 0.0;
        }
        r.drift_contraction = r.riesz_ratio * r.b_sup;
    }
    return r;
}

} // namespace halflap
