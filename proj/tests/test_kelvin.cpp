#include <doctest.h>

#include <cmath>
#include <random>

#include "halflap/decay_fit.hpp"
#include "halflap/kelvin.hpp"

using namespace halflap;

namespace {

Point pt2(double x, double y) {
    Point p;
    p.dim = 2;
    p[0] = x;
    p[1] = y;
    return p;
}

Point pt3(double x, double y, double z) {
    Point p;
    p.dim = 3;
    p[0] = x;
    p[1] = y;
    p[2] = z;
    return p;
}

std::vector<Point> random_points(int dim, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<Point> pts;
    const Point s = south_pole(dim);
    while (static_cast<int>(pts.size()) < count) {
        Point p;
        p.dim = dim;
        for (int i = 0; i < dim; ++i) p[i] = dist(rng);
        if (distance(p, s) > 0.01) pts.push_back(p);
    }
    return pts;
}

} // namespace

TEST_CASE("inversion_star: fixed points, arithmetic, involution") {
    CHECK(inversion_star(pt2(1.0, 0.0))[0] == 1.0);
    Point half = inversion_star(pt2(2.0, 0.0));
    CHECK(half[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(half[1] == 0.0);

    for (const auto& p : random_points(3, 200, 3)) {
        if (p.norm() < 1e-3) continue;
        Point back = inversion_star(inversion_star(p));
        CHECK(distance(back, p) <= 1e-13 * std::max(1.0, p.norm()));
    }
    CHECK_THROWS_AS(inversion_star(pt2(0.0, 0.0)), NumericalGuard);
}

TEST_CASE("phi_map: pole values, involution, ball <-> half-space") {
    Point n = phi_map(pt2(0.0, 0.0));
    CHECK(n[0] == 0.0);
    CHECK(n[1] == doctest::Approx(1.0).epsilon(1e-15));
    Point z = phi_map(pt2(0.0, 1.0));
    CHECK(std::fabs(z[0]) <= 1e-15);
    CHECK(std::fabs(z[1]) <= 1e-15);

    for (int dim : {2, 3}) {
        for (const auto& p : random_points(dim, 1000, 11 + dim)) {
            Point back = phi_map(phi_map(p));
            CHECK(distance(back, p) <= 1e-12 * std::max(1.0, p.norm()));
            // sign(1 - |z|^2) equals the sign of the image's last coordinate
            const double inside = 1.0 - p.norm() * p.norm();
            const double img_last = phi_map(p).last();
            if (std::fabs(inside) > 1e-12) CHECK(inside * img_last > 0.0);
        }
    }
    CHECK_THROWS_AS(phi_map(south_pole(2)), NumericalGuard);
}

TEST_CASE("abs_phi agrees with |phi_map| (two code paths)") {
    CHECK(abs_phi(pt2(0.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(abs_phi(pt2(0.0, -0.9)) == doctest::Approx(19.0).epsilon(1e-13));
    for (int dim : {2, 3})
        for (const auto& p : random_points(dim, 1000, 77 + dim))
            CHECK(abs_phi(p) == doctest::Approx(phi_map(p).norm()).epsilon(1e-12));
}

TEST_CASE("kelvin_transform: trivial prefactor at n = 1, fundamental solution at n = 2") {
    // n = 1: the prefactor is identically 1
    auto w = [](const Point& q) { return q[0] * q[0] - q[1] * q[1]; };
    for (const auto& p : random_points(2, 100, 5))
        CHECK(kelvin_transform(w, p) == doctest::Approx(w(phi_map(p))).epsilon(1e-14));

    // n = 2, w == 1: K[1](z) = sqrt(2)/|z - s|
    auto one = [](const Point&) { return 1.0; };
    const Point s3 = south_pole(3);
    for (const auto& p : random_points(3, 100, 6)) {
        const double expected = std::sqrt(2.0) / distance(p, s3);
        CHECK(kelvin_transform(one, p) == doctest::Approx(expected).epsilon(1e-13));
    }

    // and that function is harmonic away from s: stencil residual drops at
    // second order
    Region reg3;
    reg3.dim = 3;
    reg3.lo = {0.2, 0.1, 0.2};
    reg3.hi = {0.6, 0.5, 0.6};
    double prev = 0.0;
    for (double h : {0.02, 0.01}) {
        const double res = kelvin_harmonicity_check(one, reg3, h);
        if (prev > 0.0) CHECK(prev / res >= 3.0);
        prev = res;
    }
}

TEST_CASE("kelvin_harmonicity_check: harmonic in, harmonic out, at O(h^2)") {
    Region reg;
    reg.dim = 2;
    reg.lo = {0.1, -0.2};
    reg.hi = {0.5, 0.3};

    const std::vector<std::function<double(const Point&)>> harmonics = {
        [](const Point& q) { return q[0]; },
        [](const Point& q) { return q[0] * q[0] - q[1] * q[1]; },
        [](const Point& q) { return std::exp(0.5 * q[0]) * std::cos(0.5 * q[1]); },
    };
    for (const auto& w : harmonics) {
        double prev = 0.0;
        for (double h : {0.04, 0.02, 0.01}) {
            const double res = kelvin_harmonicity_check(w, reg, h);
            if (prev > 0.0) {
                const double ratio = prev / res;
                CHECK(ratio >= 3.2);
                CHECK(ratio <= 4.8);
            }
            prev = res;
        }
    }

    // constant input at n = 1: K[1] = 1 exactly
    const double res_const =
        kelvin_harmonicity_check([](const Point&) { return 1.0; }, reg, 0.02);
    CHECK(res_const <= 1e-10);

    // non-harmonic input keeps a bounded-away residual as h -> 0
    auto bad = [](const Point& q) { return q[0] * q[0]; };
    double last = 0.0;
    for (double h : {0.04, 0.02, 0.01}) last = kelvin_harmonicity_check(bad, reg, h);
    CHECK(last > 0.5);

    // regions touching the pole are rejected
    Region near_pole;
    near_pole.dim = 2;
    near_pole.lo = {-0.05, -1.05};
    near_pole.hi = {0.05, -0.95};
    CHECK_THROWS_AS(kelvin_harmonicity_check(harmonics[0], near_pole, 0.02), ConfigError);
}

TEST_CASE("kelvin transform compresses exponential decay toward the pole") {
    // for w with |w(x)| <= e^{-c|x|}, |K[w](z)| <= C' exp(-c (1-eps)/|z-s|)
    const double c = 1.0;
    auto w = [c](const Point& q) { return std::exp(-c * q.norm()); };
    for (double d : {0.5, 0.2, 0.1, 0.05}) {
        Point z = pt2(0.0, -1.0 + d); // approach s along the axis
        const double K = kelvin_transform(w, z);
        CHECK(K <= 2.0 * std::exp(-c * 0.9 / d));
        CHECK(K > 0.0);
    }
}

TEST_CASE("sharpness_counterexample: axis values, bound, trace") {
    // on the positive imaginary axis the formula reduces to exp(-y^alpha)
    for (double a : {0.3, 0.5, 0.7})
        for (double y : {0.5, 1.0, 4.0})
            CHECK(sharpness_counterexample(a, 0.0, y) ==
                  doctest::Approx(std::exp(-std::pow(y, a))).epsilon(1e-14));
    CHECK(sharpness_counterexample(0.5, 0.0, 4.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(sharpness_counterexample(1.5, 0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(sharpness_counterexample(0.5, 0.0, -1.0), ConfigError);

    // |h_alpha| <= exp(-cos(alpha pi/2) |z|^alpha) everywhere sampled
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ux(-30.0, 30.0), uy(1e-6, 30.0);
    for (double a : {0.3, 0.5, 0.7}) {
        const double cb = std::cos(a * M_PI / 2.0);
        for (int t = 0; t < 2000; ++t) {
            const double x = ux(rng), y = uy(rng);
            const double bound = std::exp(-cb * std::pow(x * x + y * y, a / 2.0));
            CHECK(std::fabs(sharpness_counterexample(a, x, y)) <= bound * (1.0 + 1e-12));
            // the envelope dominates the real part and obeys the same bound
            const double env = sharpness_envelope(a, x, y);
            CHECK(std::fabs(sharpness_counterexample(a, x, y)) <= env * (1.0 + 1e-12));
            CHECK(env <= bound * (1.0 + 1e-12));
        }
    }

    // trace continuity at the boundary
    CHECK(sharpness_trace(0.5, 0.0) == 1.0);
    for (double x : {-3.0, 0.7, 12.0}) {
        const double lim = sharpness_counterexample(0.5, x, 1e-9);
        CHECK(sharpness_trace(0.5, x) == doctest::Approx(lim).epsilon(1e-6));
    }
}

TEST_CASE("sharpness shells recover the decay exponent") {
    for (double a : {0.3, 0.5, 0.7}) {
        auto shells = sharpness_shells(a, 5.0, 32.0, 40);
        auto fit = fit_decay_exponent(shells);
        CHECK(std::fabs(fit.alpha - a) / a <= 0.05);
        CHECK(fit.c == doctest::Approx(std::cos(a * M_PI / 2.0)).epsilon(0.05));
        CHECK(fit.r_squared >= 0.999);
    }
}
