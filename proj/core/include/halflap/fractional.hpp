#ifndef HALFLAP_FRACTIONAL_HPP
#define HALFLAP_FRACTIONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "halflap/field.hpp"
#include "halflap/norms.hpp"
#include "halflap/transforms.hpp"

namespace halflap {

enum class BackendKind { Spectral, SingularIntegral };

/// Realization of (-laplace)^{1/2}. The spectral backend is the |xi|
/// multiplier. The singular-integral backend is the hypersingular kernel
/// C(n,1/2) * p.v. integral of (f(x) - f(y)) / |x-y|^{n+1}, discretized by
/// symmetric node pairing with the singular node handled by a local
/// curvature correction; the kernel is summed over periodic images so both
/// backends realize the operator of the same periodized field.
struct OperatorBackend {
    BackendKind kind = BackendKind::Spectral;

    static OperatorBackend spectral() { return {BackendKind::Spectral}; }
    static OperatorBackend singular_integral() { return {BackendKind::SingularIntegral}; }

    /// Kernel normalization Gamma((n+1)/2) / pi^((n+1)/2); 1/pi for n = 1.
    static double normalization(int n);
};

/// Warnings attached to operator applications (resolution checks and
/// similar non-fatal conditions).
struct OpDiagnostics {
    std::vector<std::string> warnings;
};

/// Threshold on spectral_tail_ratio above which a field counts as
/// under-resolved for the half-Laplacian.
constexpr double kResolutionWarnThreshold = 1e-8;

SampledField half_laplacian(const SampledField& f, const OperatorBackend& backend,
                            OpDiagnostics* diag = nullptr);

/// Multiplier -i xi_axis / |xi|, zero at xi = 0 (and at the unpaired
/// Nyquist slot). The Hilbert transform for n = 1.
SampledField riesz_transform(const SampledField& f, int axis);

/// Spectral gradient, one field per axis (multiplier i xi_axis).
std::vector<SampledField> gradient(const SampledField& f);

/// |grad f| pointwise (Euclidean over axes).
SampledField gradient_magnitude(const SampledField& f);

/// ||grad psi||_p / ||(-laplace)^{1/2} psi||_p after removing the mean of
/// psi. Throws NumericalGuard when the denominator is below 1e-14.
/// mean_removed reports the magnitude of the removed xi = 0 component.
double verify_riesz_bound(const SampledField& psi, double p,
                          double* mean_removed = nullptr);

/// One scalar of the weighted-decay report plus its box-stability flag.
struct ReportQuantity {
    double value = 0.0;
    bool converged = false;     // stable within 5% under L -> 2L
    bool overflow = false;
    double value_doubled = 0.0; // the L -> 2L re-measurement
    double box_used = 0.0;
};

/// Weighted integrability of the operator output and gradients for a
/// candidate decaying solution:
///   int exp(lam/2 |x|) |(-lap)^{1/2} u|^2,  same with exponent p,
///   ||grad u||_p,  ||grad^2 u||_p,  int exp(lam/2 |x|) |grad u|^2.
/// Stability is probed by re-measuring on the zero-extended doubled box.
struct WeightedDecayReport {
    ReportQuantity half_lap_weighted_l2;
    ReportQuantity half_lap_weighted_lp;
    ReportQuantity grad_lp;
    ReportQuantity hessian_lp;
    ReportQuantity grad_weighted_l2;
    double lambda = 0.0;
    int p = 0;
    // Drift diagnostics: measured Riesz ratio for this u and its product
    // with ||b||_inf (the contraction factor of the first-order absorption).
    double b_sup = 0.0;
    double riesz_ratio = 0.0;
    double drift_contraction = 0.0;
};

WeightedDecayReport weighted_decay_report(const SampledField& u,
                                          const std::vector<SampledField>& b,
                                          double lambda, int p,
                                          const OperatorBackend& backend = OperatorBackend::spectral());

/// Zero-extend a field onto the doubled box (2L, 2N), preserving spacing.
SampledField zero_extend_doubled(const SampledField& f);

} // namespace halflap

#endif
