#include <doctest.h>

#include <cmath>
#include <limits>

#include "halflap/families.hpp"
#include "halflap/fractional.hpp"

using namespace halflap;

namespace {

// closed-form harmonic extension of the Lorentzian; its -d/dy trace at
// y = 0 is the reference for the half-Laplacian, taken numerically so the
// oracle path shares nothing with the multiplier code.
double lorentzian_extension(double x, double y) {
    return (1.0 + y) / (x * x + (1.0 + y) * (1.0 + y));
}

double lorentzian_dtn_oracle(double x) {
    const double d = 1e-6;
    return -(lorentzian_extension(x, d) - lorentzian_extension(x, -d)) / (2.0 * d);
}

} // namespace

TEST_CASE("half_laplacian: eigenfunction and zero-frequency cases") {
    // L = pi*m makes cos(2x) an exact grid mode
    Grid g(1, 256, 4.0 * M_PI);
    SampledField f = sample([](double x) { return std::cos(2.0 * x); }, g);
    for (auto backend : {OperatorBackend::spectral(), OperatorBackend::singular_integral()}) {
        SampledField out = half_laplacian(f, backend);
        double worst = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            worst = std::max(worst, std::fabs(out[i] - 2.0 * f[i]));
        const double tol = backend.kind == BackendKind::Spectral ? 1e-12 : 2e-4;
        CHECK(worst <= tol);
    }

    SampledField one = sample([](double) { return 1.0; }, g);
    CHECK(half_laplacian(one, OperatorBackend::spectral()).max_abs() <= 1e-13);
    CHECK(half_laplacian(one, OperatorBackend::singular_integral()).max_abs() <= 1e-13);
}

TEST_CASE("half_laplacian: Lorentzian closed form (extension-derivative oracle)") {
    // wrap error scales like 1/L^2, so the tight pin needs a large box
    Grid g(1, 32768, 1500.0);
    SampledField f = sample([](double x) { return 1.0 / (1.0 + x * x); }, g);
    SampledField out = half_laplacian(f, OperatorBackend::spectral());
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = g.node(static_cast<int>(i));
        worst = std::max(worst, std::fabs(out[i] - lorentzian_dtn_oracle(x)));
    }
    CHECK(worst <= 1e-6);
    // value 1 at x = 0
    CHECK(out[g.size() / 2] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("half_laplacian backends agree on smooth decaying fields") {
    Grid g(1, 4096, 40.0);
    for (const char* name : {"lorentzian", "gaussian"}) {
        FieldSpec spec;
        spec.family = name;
        spec.sigma = 1.0;
        SampledField f = make_field(spec, g);
        SampledField a = half_laplacian(f, OperatorBackend::spectral());
        SampledField b = half_laplacian(f, OperatorBackend::singular_integral());
        double worst = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (g.radius(i) <= 0.5 * g.half_extent())
                worst = std::max(worst, std::fabs(a[i] - b[i]));
        CHECK(worst <= 1e-4 * f.max_abs());
    }
}

TEST_CASE("half_laplacian: resolution warning and NaN rejection") {
    Grid g(1, 64, 1.0);
    // a grid-scale oscillation has a full-strength spectral tail
    const double L = g.half_extent();
    SampledField rough = sample([L](double x) { return std::cos(M_PI * 31.0 * x / L); }, g);
    OpDiagnostics diag;
    half_laplacian(rough, OperatorBackend::spectral(), &diag);
    CHECK(!diag.warnings.empty());

    SampledField ok = sample([](double x) { return std::cos(x); }, Grid(1, 256, M_PI * 4));
    OpDiagnostics diag2;
    half_laplacian(ok, OperatorBackend::spectral(), &diag2);
    CHECK(diag2.warnings.empty());

    SampledField f(g);
    f[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(half_laplacian(f, OperatorBackend::spectral()), NumericalGuard);
}

TEST_CASE("half_laplacian 2d: radial mode eigenvalue") {
    Grid g(2, 64, 4.0 * M_PI);
    SampledField f = sample2([](double x, double y) { return std::cos(x) * std::cos(y); }, g);
    // |xi| for the (k1, k2) = (4, 4) integer mode at L = 4pi is sqrt(2)
    SampledField out = half_laplacian(f, OperatorBackend::spectral());
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::max(worst, std::fabs(out[i] - std::sqrt(2.0) * f[i]));
    CHECK(worst <= 1e-12);

    SampledField si = half_laplacian(f, OperatorBackend::singular_integral());
    double worst_si = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        worst_si = std::max(worst_si, std::fabs(si[i] - out[i]));
    CHECK(worst_si <= 5e-2); // truncated image sum; documented accuracy
}

TEST_CASE("operator symmetry, positivity, composition") {
    Grid g(1, 512, 10.0);
    SampledField f = random_band_limited(g, 1, 40, 101);
    SampledField h = random_band_limited(g, 1, 40, 202);
    const auto B = OperatorBackend::spectral();

    const double lhs = inner_product(half_laplacian(f, B), h);
    const double rhs = inner_product(f, half_laplacian(h, B));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));

    CHECK(inner_product(half_laplacian(f, B), f) >= -1e-12);

    // twice the operator equals -laplace: multiplier |xi|^2
    SampledField twice = half_laplacian(half_laplacian(f, B), B);
    SampledField lap = apply_multiplier(f, [](const SpectralField& F, std::size_t i) {
        const double m = F.xi_mag(i);
        return std::complex<double>(m * m, 0.0);
    });
    CHECK(linf_diff(twice, lap) <= 1e-10 * std::max(1.0, lap.max_abs()));
}

TEST_CASE("riesz_transform: Hilbert pairs and involution") {
    Grid g(1, 256, 2.0 * M_PI);
    const double k = 3.0; // integer multiple of pi/L = 1/2
    SampledField c = sample([k](double x) { return std::cos(k * x); }, g);
    SampledField s = sample([k](double x) { return std::sin(k * x); }, g);

    SampledField rc = riesz_transform(c, 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        worst = std::max(worst, std::fabs(rc[i] - s[i]));
    CHECK(worst <= 1e-12);

    SampledField rs = riesz_transform(s, 1);
    double worst2 = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        worst2 = std::max(worst2, std::fabs(rs[i] + c[i]));
    CHECK(worst2 <= 1e-12);

    CHECK_THROWS_AS(riesz_transform(c, 2), ConfigError);

    SampledField f = random_band_limited(g, 1, 60, 7);
    SampledField twice = riesz_transform(riesz_transform(f, 1), 1);
    double w2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        w2 = std::max(w2, std::fabs(twice[i] + f[i]));
    CHECK(w2 <= 1e-10 * f.max_abs());
}

TEST_CASE("riesz identity in 2d: sum of squares is minus identity") {
    Grid g(2, 64, 5.0);
    SampledField f = random_band_limited(g, 1, 12, 13);
    SampledField acc(g);
    for (int axis = 1; axis <= 2; ++axis) {
        SampledField r2 = riesz_transform(riesz_transform(f, axis), axis);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += r2[i];
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::max(worst, std::fabs(acc[i] + f[i]));
    CHECK(worst <= 1e-10 * f.max_abs());
}

TEST_CASE("riesz consistency with the gradient: grad = -R (-lap)^{1/2}") {
    Grid g(1, 512, 8.0);
    SampledField f = random_band_limited(g, 1, 50, 23);
    SampledField lhs = gradient(f)[0];
    SampledField rhs = riesz_transform(half_laplacian(f, OperatorBackend::spectral()), 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::max(worst, std::fabs(lhs[i] + rhs[i]));
    CHECK(worst <= 1e-9 * std::max(1.0, lhs.max_abs()));
}

TEST_CASE("gradient: constants, modes, gaussian oracle") {
    Grid g(1, 512, 10.0);
    CHECK(gradient(sample([](double) { return 4.2; }, g))[0].max_abs() <= 1e-12);

    Grid gm(1, 256, 2.0 * M_PI);
    const double k = 2.5; // 5 * (pi/L) with L = 2pi
    SampledField s = sample([k](double x) { return std::sin(k * x); }, gm);
    SampledField ds = gradient(s)[0];
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        worst = std::max(worst,
                         std::fabs(ds[i] - k * std::cos(k * gm.node(static_cast<int>(i)))));
    CHECK(worst <= 1e-11);

    SampledField gauss = sample([](double x) { return std::exp(-x * x); }, g);
    SampledField dg = gradient(gauss)[0];
    double worst_g = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.node(static_cast<int>(i));
        worst_g = std::max(worst_g, std::fabs(dg[i] + 2.0 * x * std::exp(-x * x)));
    }
    CHECK(worst_g <= 1e-10);
}

TEST_CASE("verify_riesz_bound: translates, guard, l2 isometry") {
    Grid g(1, 512, 2.0 * M_PI);
    SampledField s = sample([](double x) { return std::sin(2.0 * x); }, g);
    CHECK(verify_riesz_bound(s, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(verify_riesz_bound(s, 4.0) == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(verify_riesz_bound(SampledField(g), 2.0), NumericalGuard);

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        SampledField psi = random_band_limited(g, 1, 100, seed);
        CHECK(verify_riesz_bound(psi, 2.0) == doctest::Approx(1.0).epsilon(1e-10));
    }

    // mean removal is reported
    SampledField shifted = sample([](double x) { return 1.0 + std::sin(2.0 * x); }, g);
    double removed = 0.0;
    verify_riesz_bound(shifted, 2.0, &removed);
    CHECK(removed == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weighted_decay_report: zero field and divergence flags") {
    Grid g(1, 1024, 40.0);
    auto zero_rep = weighted_decay_report(SampledField(g), {}, 1.0, 2);
    CHECK(zero_rep.half_lap_weighted_l2.value == 0.0);
    CHECK(zero_rep.grad_lp.value == 0.0);
    CHECK(zero_rep.hessian_lp.value == 0.0);

    // polynomial decay loses to exp(|x|/2): diverges with the box
    SampledField lor = sample([](double x) { return 1.0 / (1.0 + x * x); }, g);
    auto rep = weighted_decay_report(lor, {}, 1.0, 2);
    CHECK(!rep.half_lap_weighted_l2.converged);
    CHECK(rep.half_lap_weighted_l2.value_doubled > 2.0 * rep.half_lap_weighted_l2.value);

    CHECK_THROWS_AS(weighted_decay_report(lor, {}, 1.0, 1), ConfigError);
}

TEST_CASE("weighted_decay_report: exp(-<x>) has polynomial operator tails") {
    // the operator output decays like 1/x^2 only, so the weighted integral
    // still diverges with the box even though u decays exponentially
    Grid g(1, 2048, 40.0);
    SampledField u = sample([](double x) { return std::exp(-std::sqrt(1.0 + x * x)); }, g);

    // tail oracle: |(-lap)^{1/2} u|(x) ~ (1/pi) int u / (x-y)^2 dy, which on
    // the periodic box sums the images of 1/t^2 to (pi/2L)^2 csc^2(pi x/2L);
    // the free-space limit of that sum is the familiar (I/pi)/x^2
    const SampledField op = half_laplacian(u, OperatorBackend::singular_integral());
    double mass = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) mass += u[i];
    mass *= g.spacing();
    const double L = g.half_extent();
    for (double x : {20.0, 25.0, 30.0}) {
        const auto i = static_cast<std::size_t>((x + L) / g.spacing());
        const double w = M_PI / (2.0 * L);
        const double kernel_tail = w * w / (std::sin(w * x) * std::sin(w * x));
        const double predicted = mass / M_PI * kernel_tail;
        CHECK(std::fabs(op[i] / predicted - 1.0) <= 0.15);
        CHECK(predicted >= mass / (M_PI * x * x)); // free-space tail is the floor
    }

    auto rep = weighted_decay_report(u, {}, 1.0, 2);
    CHECK(!rep.half_lap_weighted_l2.converged);
    CHECK(rep.half_lap_weighted_l2.value_doubled > 1.05 * rep.half_lap_weighted_l2.value);
}

TEST_CASE("weighted_decay_report: drift diagnostics") {
    Grid g(1, 512, 2.0 * M_PI);
    SampledField u = sample([](double x) { return std::sin(3.0 * x); }, g);
    std::vector<SampledField> b{sample([](double) { return 0.25; }, g)};
    auto rep = weighted_decay_report(u, b, 1.0, 2);
    CHECK(rep.b_sup == doctest::Approx(0.25));
    CHECK(rep.riesz_ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.drift_contraction == doctest::Approx(0.25).epsilon(1e-9));
}
