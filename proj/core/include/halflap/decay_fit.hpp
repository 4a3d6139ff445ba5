#ifndef HALFLAP_DECAY_FIT_HPP
#define HALFLAP_DECAY_FIT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace halflap {

/// One measured shell: radius and the sup of |field| over it.
struct DecayShell {
    double radius = 0.0;
    double sup = 0.0;
};

/// Least-squares fit of log S = log C - c R^alpha (1-D search over alpha
/// in [0.05, 2] with the linear subproblem solved exactly), plus the
/// power-law fallback log S = log C_p - p log R for polynomial decay.
struct DecayFit {
    double C = 0.0;
    double c = 0.0;
    double alpha = 0.0;
    double r_squared = 0.0;
    // power-law fallback
    double C_pow = 0.0;
    double power = 0.0;
    double r_squared_pow = 0.0;
    bool fallback_preferred = false; // power model has the smaller residual
    bool identically_zero = false;
    bool non_monotone = false;       // shells not non-increasing: low-r2 warning
    std::size_t shells_used = 0;
    std::size_t shells_dropped = 0;  // zero shells removed before fitting
};

DecayFit fit_decay_exponent(const std::vector<DecayShell>& shells);

/// Shell table plus its fit.
struct DecayProfile {
    std::vector<DecayShell> shells;
    DecayFit fit;
    // fit of the column above the origin (|u~(0,y)| vs y), when measured
    bool has_axis_fit = false;
    DecayFit axis_fit;
};

enum class Verdict {
    TRIVIAL_FIELD,
    EXPONENTIAL_DECAY_HENCE_TRIVIAL,
    NO_CONTRADICTION,
};

std::string verdict_name(Verdict v);

/// Thresholds deciding when a fitted profile counts as genuinely
/// exponential; configurable policy, not constants of the theory.
struct VerdictPolicy {
    double alpha_min = 0.95;
    double r2_min = 0.99;
};

/// EXPONENTIAL_DECAY_HENCE_TRIVIAL iff alpha >= alpha_min, c >= c_threshold
/// and r^2 >= r2_min; TRIVIAL_FIELD for identically-zero shells.
Verdict liouville_verdict(const DecayProfile& profile, double c_threshold,
                          const VerdictPolicy& policy = {});

} // namespace halflap

#endif
