#include "halflap/landis.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <limits>

namespace halflap {

void PotentialProfile::measure_norms() {
    q_sup = grad_q_sup = grad_b_sup = b_sup = 0.0;
    if (q) {
        q_sup = q->max_abs();
        grad_q_sup = gradient_magnitude(*q).max_abs();
    }
    for (const auto& comp : b) {
        b_sup = std::max(b_sup, comp.max_abs());
        grad_b_sup = std::max(grad_b_sup, gradient_magnitude(comp).max_abs());
    }
    within_lambda_budget = q_sup + grad_q_sup + grad_b_sup <= lambda_budget;
    within_eps_budget = b_sup <= eps_budget;
}

namespace {

SampledField drift_dot_grad(const SampledField& u, const std::vector<SampledField>& b) {
    std::vector<double> acc(u.size(), 0.0);
    if (!b.empty()) {
        const auto g = gradient(u);
        if (b.size() != g.size())
            throw ConfigError("drift: one component per axis required");
        for (std::size_t a = 0; a < g.size(); ++a) {
            if (b[a].grid() != u.grid()) throw ConfigError("drift: grid mismatch");
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += b[a][i] * g[a][i];
        }
    }
    return SampledField(u.grid(), std::move(acc));
}

} // namespace

double residual(const SampledField& u, const PotentialProfile& profile,
                const OperatorBackend& backend) {
    if (profile.q && profile.q->grid() != u.grid())
        throw ConfigError("residual: potential grid mismatch");
    const SampledField hl = half_laplacian(u, backend);
    const SampledField drift = drift_dot_grad(u, profile.b);
    double sup = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double qu = profile.q ? (*profile.q)[i] * u[i] : 0.0;
        sup = std::max(sup, std::fabs(hl[i] + drift[i] + qu));
    }
    return sup;
}

InversePotentialResult inverse_potential(const SampledField& u,
                                         const std::vector<SampledField>& b,
                                         double floor,
                                         const OperatorBackend& backend) {
    if (!(floor > 0.0) || !(floor < 1.0))
        throw ConfigError("inverse_potential: floor must lie in (0, 1)");
    const double usup = u.max_abs();
    if (usup == 0.0) throw NumericalGuard("inverse_potential: u is identically zero");

    const SampledField hl = half_laplacian(u, backend);
    const SampledField drift = drift_dot_grad(u, b);

    InversePotentialResult out{SampledField(u.grid()), {}, 0, 0.0, 0.0, 0.0};
    out.mask.assign(u.size(), 0);
    const double cut = floor * usup;
    for (std::size_t i = 0; i < u.size(); ++i) {
        out.sup_half_lap = std::max(out.sup_half_lap, std::fabs(hl[i]));
        out.sup_drift = std::max(out.sup_drift, std::fabs(drift[i]));
        if (std::fabs(u[i]) >= cut) {
            out.mask[i] = 1;
            out.q[i] = -(hl[i] + drift[i]) / u[i];
            out.sup_q = std::max(out.sup_q, std::fabs(out.q[i]));
        } else {
            ++out.masked_count;
        }
    }
    return out;
}

DecayCertificate decay_certificate(const SampledField& u, double lambda,
                                   const SampledField* u_doubled) {
    if (!(lambda > 0.0)) throw ConfigError("decay_certificate: lambda must be > 0");
    const Grid& g = u.grid();
    DecayCertificate cert;
    cert.lambda = lambda;
    const double half = 0.5 * g.half_extent();
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = g.radius(i);
        const double v = std::fabs(u[i]) * std::exp(lambda * r);
        cert.lambda_min = std::max(cert.lambda_min, v);
        double& slot = r <= half ? cert.inner_max : cert.outer_max;
        slot = std::max(slot, v);
    }
    if (u_doubled) {
        const DecayCertificate big = decay_certificate(*u_doubled, lambda);
        const double denom = std::max(cert.lambda_min, 1e-300);
        cert.stable = std::fabs(big.lambda_min - cert.lambda_min) / denom < 0.05;
    } else {
        cert.stable = cert.outer_max <= 1.05 * cert.inner_max;
    }
    return cert;
}

WeightedL2Result theorem2_weighted_norm(const SampledField& u,
                                        const SampledField* u_doubled) {
    const Grid& g = u.grid();
    const double cell = g.dim() == 1 ? g.spacing() : g.spacing() * g.spacing();
    const double half = 0.5 * g.half_extent();
    WeightedL2Result out;
    double inner = 0.0, outer = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = g.radius(i);
        const double t = std::exp(r) * u[i] * u[i] * cell;
        (r <= half ? inner : outer) += t;
    }
    out.value = inner + outer;
    out.overflow = std::isinf(out.value) || std::isnan(out.value);
    if (out.overflow) {
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    out.outer_share = out.value > 0.0 ? outer / out.value : 0.0;
    if (u_doubled) {
        const WeightedL2Result big = theorem2_weighted_norm(*u_doubled);
        out.convergent = !big.overflow &&
                         std::fabs(big.value - out.value) / std::max(out.value, 1e-300) < 0.05;
    } else {
        out.convergent = out.outer_share < 0.05;
    }
    return out;
}

namespace {

BlowupRow blowup_row(double lambda, double L, const BlowupOptions& opts) {
    Grid g(1, opts.points_per_axis, L);
    const SampledField u =
        lambda == 0.0 ? sample([](double) { return 1.0; }, g)
                      : sample([lambda](double x) { return std::exp(-lambda * std::sqrt(1.0 + x * x)); }, g);
    BlowupRow row;
    row.lambda = lambda;
    row.L = L;
    if (lambda == 0.0) {
        // constant field: operator output vanishes identically
        const auto inv = inverse_potential(u, {}, 0.5, OperatorBackend::spectral());
        row.sup_q = inv.sup_q;
        return row;
    }
    const auto inv = inverse_potential(u, {}, opts.mask_floor, OperatorBackend::spectral());
    row.sup_q = inv.sup_q;
    return row;
}

} // namespace

BlowupTable landis_blowup_experiment(const std::vector<double>& lambdas,
                                     const std::vector<double>& boxes,
                                     const BlowupOptions& opts) {
    BlowupTable table;
    const int jobs = std::max(1, opts.jobs);
    for (double lam : lambdas) {
        std::vector<BlowupRow> rows(boxes.size());
        if (jobs > 1) {
            std::vector<std::future<BlowupRow>> futs;
            futs.reserve(boxes.size());
            for (double L : boxes)
                futs.push_back(std::async(std::launch::async, blowup_row, lam, L, opts));
            for (std::size_t i = 0; i < futs.size(); ++i) rows[i] = futs[i].get();
        } else {
            for (std::size_t i = 0; i < boxes.size(); ++i)
                rows[i] = blowup_row(lam, boxes[i], opts);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            rows[i].growth_rate = std::numeric_limits<double>::quiet_NaN();
            if (i > 0 && rows[i - 1].sup_q > 0.0 && rows[i].sup_q > 0.0)
                rows[i].growth_rate = (std::log(rows[i].sup_q) - std::log(rows[i - 1].sup_q)) /
                                      (rows[i].L - rows[i - 1].L);
            table.rows.push_back(rows[i]);
        }
    }
    if (opts.with_control) {
        for (double L : boxes) {
            Grid g(1, opts.points_per_axis, L);
            const SampledField u = sample([](double x) { return 1.0 / (1.0 + x * x); }, g);
            const auto inv = inverse_potential(u, {}, opts.control_floor,
                                               OperatorBackend::singular_integral());
            table.control.push_back({L, inv.sup_q});
        }
    }
    return table;
}

std::vector<double> PipelineConfig::make_heights() const {
    if (heights_kind == "geometric")
        return geometric_heights(heights_y1, heights_ratio, heights_count);
    if (heights_kind == "uniform") {
        const double ymax = heights_ymax > 0.0 ? heights_ymax : 0.9 * half_extent;
        return uniform_heights(ymax, heights_count);
    }
    throw ConfigError("heights kind must be geometric or uniform");
}

OperatorBackend PipelineConfig::make_backend() const {
    if (backend == "spectral") return OperatorBackend::spectral();
    if (backend == "singular_integral") return OperatorBackend::singular_integral();
    throw ConfigError("backend must be spectral or singular_integral");
}

ExperimentReport run_pipeline(const PipelineConfig& config) {
    ExperimentReport rep;
    rep.config = config;

    Grid g(config.dim, config.points_per_axis, config.half_extent);
    SampledField u(g);
    bool failed = false;

    auto stage = [&](const std::string& name, const std::function<void()>& body) {
        StageStatus st;
        st.name = name;
        if (failed) {
            st.skipped = true;
            rep.stages.push_back(st);
            return;
        }
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body();
            st.ok = true;
        } catch (const std::exception& e) {
            st.error = e.what();
            failed = true;
        }
        st.runtime_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        rep.stages.push_back(st);
    };

    stage("make_field", [&] {
        u = make_field(config.field, g);
        rep.field_sup = u.max_abs();
    });

    // doubled-box re-sample for the stability flags, when a generator exists
    std::optional<SampledField> u2;
    stage("decay_certificate", [&] {
        if (config.field.family != "file") {
            Grid g2(config.dim, 2 * config.points_per_axis, 2.0 * config.half_extent);
            u2 = make_field(config.field, g2);
        }
        rep.certificate = decay_certificate(u, config.lambda, u2 ? &*u2 : nullptr);
    });
    stage("theorem2_weighted_norm",
          [&] { rep.weighted_l2 = theorem2_weighted_norm(u, u2 ? &*u2 : nullptr); });
    stage("weighted_decay_report", [&] {
        rep.decay_report =
            weighted_decay_report(u, {}, config.lambda, config.p, config.make_backend());
    });
    stage("boundary_to_bulk",
          [&] { rep.bulk_profile = boundary_to_bulk(u, config.lambda, config.make_heights()); });
    stage("liouville_verdict",
          [&] { rep.verdict = liouville_verdict(rep.bulk_profile, config.c_threshold); });
    stage("inverse_potential", [&] {
        if (u.max_abs() == 0.0) return; // trivial field has no potential
        rep.inverse = inverse_potential(u, {}, config.mask_floor, config.make_backend());
    });
    return rep;
}

} // namespace halflap
