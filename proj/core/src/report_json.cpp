#include "halflap/report_json.hpp"

#include <cmath>
#include <sstream>

#include "halflap/field_io.hpp"

namespace halflap {

namespace {

// JSON has no inf/nan; report them as strings
ordered_json num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return v;
}

} // namespace

ordered_json to_json(const ReportQuantity& q) {
    return {{"value", num(q.value)},
            {"converged", q.converged},
            {"overflow", q.overflow},
            {"value_doubled", num(q.value_doubled)},
            {"L_used", q.box_used}};
}

ordered_json to_json(const WeightedDecayReport& r) {
    return {{"lambda", r.lambda},
            {"p", r.p},
            {"half_lap_weighted_l2", to_json(r.half_lap_weighted_l2)},
            {"half_lap_weighted_lp", to_json(r.half_lap_weighted_lp)},
            {"grad_lp", to_json(r.grad_lp)},
            {"hessian_lp", to_json(r.hessian_lp)},
            {"grad_weighted_l2", to_json(r.grad_weighted_l2)},
            {"b_sup", num(r.b_sup)},
            {"riesz_ratio", num(r.riesz_ratio)},
            {"drift_contraction", num(r.drift_contraction)}};
}

ordered_json to_json(const DecayFit& f) {
    return {{"C", num(f.C)},
            {"c", num(f.c)},
            {"alpha", num(f.alpha)},
            {"r_squared", num(f.r_squared)},
            {"C_pow", num(f.C_pow)},
            {"power", num(f.power)},
            {"r_squared_pow", num(f.r_squared_pow)},
            {"fallback_preferred", f.fallback_preferred},
            {"identically_zero", f.identically_zero},
            {"non_monotone", f.non_monotone},
            {"shells_used", f.shells_used},
            {"shells_dropped", f.shells_dropped}};
}

ordered_json to_json(const DecayProfile& p) {
    ordered_json j{{"fit", to_json(p.fit)}, {"shell_count", p.shells.size()}};
    if (p.has_axis_fit) j["axis_fit"] = to_json(p.axis_fit);
    return j;
}

ordered_json to_json(const DecayCertificate& c) {
    return {{"lambda", c.lambda},
            {"lambda_min", num(c.lambda_min)},
            {"stable", c.stable},
            {"inner_max", num(c.inner_max)},
            {"outer_max", num(c.outer_max)}};
}

ordered_json to_json(const WeightedL2Result& w) {
    return {{"value", num(w.value)},
            {"convergent", w.convergent},
            {"overflow", w.overflow},
            {"outer_share", num(w.outer_share)}};
}

ordered_json to_json(const PipelineConfig& c) {
    ordered_json field{{"family", c.field.family}};
    if (c.field.family == "exp_smooth") field["lambda"] = c.field.lambda;
    if (c.field.family == "cos") field["k"] = c.field.k;
    if (c.field.family == "gaussian") field["sigma"] = c.field.sigma;
    if (c.field.family == "sharpness") field["alpha"] = c.field.alpha;
    if (c.field.family == "file") field["path"] = c.field.path;
    return {{"field", field},
            {"dim", c.dim},
            {"points_per_axis", c.points_per_axis},
            {"half_extent", c.half_extent},
            {"lambda", c.lambda},
            {"p", c.p},
            {"backend", c.backend},
            {"mask_floor", c.mask_floor},
            {"c_threshold", c.c_threshold},
            {"heights",
             {{"kind", c.heights_kind},
              {"y1", c.heights_y1},
              {"ratio", c.heights_ratio},
              {"ymax", c.heights_ymax},
              {"count", c.heights_count}}},
            {"seed", c.seed}};
}

ordered_json to_json(const ExperimentReport& r, bool include_timings) {
    ordered_json stages = ordered_json::array();
    for (const auto& s : r.stages) {
        ordered_json j{{"name", s.name}, {"ok", s.ok}, {"skipped", s.skipped}};
        if (!s.error.empty()) j["error"] = s.error;
        if (include_timings) j["runtime_ms"] = s.runtime_ms;
        stages.push_back(j);
    }
    ordered_json j{{"schema", "halflap-report/1"},
                   {"config", to_json(r.config)},
                   {"stages", stages},
                   {"field_sup", num(r.field_sup)},
                   {"certificate", to_json(r.certificate)},
                   {"theorem2_weighted_l2", to_json(r.weighted_l2)},
                   {"weighted_decay_report", to_json(r.decay_report)},
                   {"bulk_profile", to_json(r.bulk_profile)},
                   {"verdict", verdict_name(r.verdict)}};
    if (r.inverse) {
        j["inverse_potential"] = ordered_json{{"sup_q", num(r.inverse->sup_q)},
                                              {"sup_half_lap", num(r.inverse->sup_half_lap)},
                                              {"sup_drift", num(r.inverse->sup_drift)},
                                              {"masked_count", r.inverse->masked_count}};
    }
    return j;
}

std::string decay_profile_csv(const DecayProfile& p) {
    std::ostringstream os;
    os << "R,sup,log_sup\n";
    for (const auto& s : p.shells) {
        os << fmt_double(s.radius) << ',' << fmt_double(s.sup) << ','
           << (s.sup > 0.0 ? fmt_double(std::log(s.sup)) : "-inf") << '\n';
    }
    return os.str();
}

std::string blowup_csv(const BlowupTable& t) {
    std::ostringstream os;
    os << "lambda,L,sup_q,growth_rate\n";
    for (const auto& r : t.rows) {
        os << fmt_double(r.lambda) << ',' << fmt_double(r.L) << ',' << fmt_double(r.sup_q) << ',';
        if (std::isnan(r.growth_rate))
            os << "";
        else
            os << fmt_double(r.growth_rate);
        os << '\n';
    }
    return os.str();
}

std::string blowup_control_csv(const BlowupTable& t) {
    std::ostringstream os;
    os << "family,L,sup_q\n";
    for (const auto& r : t.control)
        os << "lorentzian," << fmt_double(r.L) << ',' << fmt_double(r.sup_q) << '\n';
    return os.str();
}

} // namespace halflap
