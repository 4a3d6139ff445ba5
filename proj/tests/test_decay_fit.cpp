#include <doctest.h>

#include <cmath>

#include "halflap/decay_fit.hpp"
#include "halflap/errors.hpp"

using namespace halflap;

namespace {

std::vector<DecayShell> model_shells(double C, double c, double alpha, int count = 40) {
    std::vector<DecayShell> out;
    for (int k = 0; k < count; ++k) {
        const double R = 5.0 + 27.0 * k / (count - 1);
        out.push_back({R, C * std::exp(-c * std::pow(R, alpha))});
    }
    return out;
}

} // namespace

TEST_CASE("fit recovers in-model parameters to solver tolerance") {
    auto f1 = fit_decay_exponent(model_shells(1.0, 2.0, 1.0));
    CHECK(std::fabs(f1.alpha - 1.0) <= 1e-6);
    CHECK(std::fabs(f1.c - 2.0) <= 1e-5);
    CHECK(std::fabs(f1.C - 1.0) <= 1e-5);
    CHECK(f1.r_squared >= 1.0 - 1e-10);

    auto f2 = fit_decay_exponent(model_shells(1.0, 1.0, 0.5));
    CHECK(std::fabs(f2.alpha - 0.5) <= 1e-6);

    auto f3 = fit_decay_exponent(model_shells(3.7, 0.4, 1.3));
    CHECK(std::fabs(f3.alpha - 1.3) <= 1e-6);
    CHECK(std::fabs(f3.C - 3.7) <= 1e-4);
}

TEST_CASE("polynomial shells: pinned alpha and the power fallback") {
    std::vector<DecayShell> shells;
    for (int k = 0; k < 40; ++k) {
        const double R = 5.0 + 27.0 * k / 39.0;
        shells.push_back({R, 1.0 / (1.0 + R)});
    }
    auto f = fit_decay_exponent(shells);
    CHECK(f.alpha == doctest::Approx(0.05).epsilon(0.2)); // pinned at the grid floor
    CHECK(f.fallback_preferred);
    CHECK(f.power == doctest::Approx(1.0).epsilon(0.2));
    CHECK(f.r_squared_pow > f.r_squared);
}

TEST_CASE("zero shells, short tables, dropped shells, monotone warning") {
    std::vector<DecayShell> zeros(10, DecayShell{1.0, 0.0});
    for (std::size_t i = 0; i < zeros.size(); ++i) zeros[i].radius = 1.0 + static_cast<double>(i);
    auto z = fit_decay_exponent(zeros);
    CHECK(z.identically_zero);

    CHECK_THROWS_AS(fit_decay_exponent(model_shells(1.0, 1.0, 1.0, 5)), ConfigError);

    auto mixed = model_shells(1.0, 2.0, 1.0);
    mixed[3].sup = 0.0;
    mixed[17].sup = 0.0;
    auto m = fit_decay_exponent(mixed);
    CHECK(m.shells_dropped == 2);
    CHECK(std::fabs(m.alpha - 1.0) <= 1e-6);

    auto wob = model_shells(1.0, 0.5, 1.0);
    wob[10].sup *= 3.0;
    auto w = fit_decay_exponent(wob);
    CHECK(w.non_monotone);
}

TEST_CASE("liouville_verdict: the three outcomes") {
    DecayProfile zero;
    zero.fit.identically_zero = true;
    CHECK(liouville_verdict(zero, 1.0) == Verdict::TRIVIAL_FIELD);

    DecayProfile expd;
    expd.shells = model_shells(1.0, 2.0, 1.0);
    expd.fit = fit_decay_exponent(expd.shells);
    CHECK(liouville_verdict(expd, 1.0) == Verdict::EXPONENTIAL_DECAY_HENCE_TRIVIAL);
    // rate below the threshold is not a contradiction
    CHECK(liouville_verdict(expd, 3.0) == Verdict::NO_CONTRADICTION);

    DecayProfile sub;
    sub.shells = model_shells(1.0, 1.0, 0.5);
    sub.fit = fit_decay_exponent(sub.shells);
    CHECK(liouville_verdict(sub, 0.1) == Verdict::NO_CONTRADICTION);

    CHECK(verdict_name(Verdict::TRIVIAL_FIELD) == "TRIVIAL_FIELD");
}
