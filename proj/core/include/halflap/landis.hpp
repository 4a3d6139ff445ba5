#ifndef HALFLAP_LANDIS_HPP
#define HALFLAP_LANDIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halflap/extension.hpp"
#include "halflap/families.hpp"
#include "halflap/fractional.hpp"

namespace halflap {

/// Drift and potential of the first-order fractional Schrodinger operator,
/// with the sup-norm budgets they are measured against.
struct PotentialProfile {
    std::vector<SampledField> b; // one component per axis; empty means 0
    std::optional<SampledField> q;
    double lambda_budget = 1.0; // bound on ||q|| + ||grad q|| + ||grad b||
    double eps_budget = 1.0;    // bound on ||b||

    // achieved sup norms, filled by measure_norms
    double q_sup = 0.0;
    double grad_q_sup = 0.0;
    double grad_b_sup = 0.0;
    double b_sup = 0.0;
    bool within_lambda_budget = true;
    bool within_eps_budget = true;

    void measure_norms();
};

/// sup | (-lap)^{1/2} u + b . grad u + q u | on the grid.
double residual(const SampledField& u, const PotentialProfile& profile,
                const OperatorBackend& backend = OperatorBackend::spectral());

/// q = -((-lap)^{1/2} u + b . grad u) / u where |u| >= floor * ||u||_inf;
/// masked elsewhere. Reports which term dominates via the per-term sups.
struct InversePotentialResult {
    SampledField q;
    std::vector<std::uint8_t> mask; // 1 where q is defined
    std::size_t masked_count = 0;
    double sup_half_lap = 0.0; // sup |(-lap)^{1/2} u|
    double sup_drift = 0.0;    // sup |b . grad u|
    double sup_q = 0.0;        // sup |q| over the unmasked set
};
InversePotentialResult inverse_potential(const SampledField& u,
                                         const std::vector<SampledField>& b,
                                         double floor,
                                         const OperatorBackend& backend = OperatorBackend::spectral());

/// Lambda_min = sup |u| e^{lambda |x|} over nodes. Stability: compares the
/// outer-half max against the inner-half max (the sup must have saturated
/// inside the box); when a doubled-box sample of the same function is
/// supplied the flag uses the direct 5% re-measurement instead.
struct DecayCertificate {
    double lambda = 0.0;
    double lambda_min = 0.0;
    bool stable = false;
    double inner_max = 0.0;
    double outer_max = 0.0;
};
DecayCertificate decay_certificate(const SampledField& u, double lambda,
                                   const SampledField* u_doubled = nullptr);

/// int e^{|x|} |u|^2 over the box, with the convergence flag from the
/// outer-half share of the integral (or the doubled-box re-measurement).
struct WeightedL2Result {
    double value = 0.0;
    bool convergent = false;
    bool overflow = false;
    double outer_share = 0.0;
};
WeightedL2Result theorem2_weighted_norm(const SampledField& u,
                                        const SampledField* u_doubled = nullptr);

/// Blow-up experiment: for u_lam = exp(-lam <x>) the inverse potential's
/// sup grows like e^{lam L} / L^2 as the box grows, witnessing that no
/// bounded potential admits such decaying solutions. growth_rate is the
/// difference quotient of log sup|q| against the previous box row.
struct BlowupRow {
    double lambda = 0.0;
    double L = 0.0;
    double sup_q = 0.0;
    double growth_rate = 0.0; // NaN on each first row
};
struct BlowupControlRow {
    double L = 0.0;
    double sup_q = 0.0;
};
struct BlowupTable {
    std::vector<BlowupRow> rows;
    std::vector<BlowupControlRow> control; // bounded-potential counterpoint
};

struct BlowupOptions {
    int points_per_axis = 4096;
    double mask_floor = 1e-300;   // u_lam is strictly positive; see notes
    double control_floor = 0.03;  // trims the tail-model contaminated edge
    bool with_control = true;
    int jobs = 1;
};
BlowupTable landis_blowup_experiment(const std::vector<double>& lambdas,
                                     const std::vector<double>& boxes,
                                     const BlowupOptions& opts = {});

/// Full pipeline configuration (shared by the CLI).
struct PipelineConfig {
    FieldSpec field;
    int dim = 1;
    int points_per_axis = 2048;
    double half_extent = 40.0;
    double lambda = 1.0;
    int p = 2;
    std::string backend = "spectral";
    double mask_floor = 1e-8;
    double c_threshold = 0.5;
    // heights
    std::string heights_kind = "geometric"; // geometric|uniform
    double heights_y1 = 0.02;
    double heights_ratio = 1.1;
    double heights_ymax = 0.0; // uniform only; 0 means 0.9 L
    int heights_count = 90;
    std::uint64_t seed = 1;

    std::vector<double> make_heights() const;
    OperatorBackend make_backend() const;
};

struct StageStatus {
    std::string name;
    bool ok = false;
    bool skipped = false;
    std::string error;
    double runtime_ms = 0.0;
};

/// Structured result of one pipeline run; all stages recorded, later
/// stages skipped once one fails.
struct ExperimentReport {
    PipelineConfig config;
    std::vector<StageStatus> stages;
    DecayCertificate certificate;
    WeightedL2Result weighted_l2;
    WeightedDecayReport decay_report;
    DecayProfile bulk_profile;
    Verdict verdict = Verdict::NO_CONTRADICTION;
    std::optional<InversePotentialResult> inverse;
    double field_sup = 0.0;
};

ExperimentReport run_pipeline(const PipelineConfig& config);

} // namespace halflap

#endif
