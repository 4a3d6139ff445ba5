#ifndef HALFLAP_REPORT_JSON_HPP
#define HALFLAP_REPORT_JSON_HPP

#include <json.hpp>

#include "halflap/landis.hpp"

namespace halflap {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const ReportQuantity& q);
ordered_json to_json(const WeightedDecayReport& r);
ordered_json to_json(const DecayFit& f);
ordered_json to_json(const DecayProfile& p);
ordered_json to_json(const DecayCertificate& c);
ordered_json to_json(const WeightedL2Result& w);
ordered_json to_json(const PipelineConfig& c);

/// Versioned single-document report, schema "halflap-report/1". Stage
/// runtimes are intentionally omitted (they break byte-for-byte
/// reproducibility); include_timings restores them.
ordered_json to_json(const ExperimentReport& r, bool include_timings = false);

/// CSV: header "R,sup,log_sup".
std::string decay_profile_csv(const DecayProfile& p);

/// CSV: header "lambda,L,sup_q,growth_rate" (control rows go to a
/// separate "family,L,sup_q" table).
std::string blowup_csv(const BlowupTable& t);
std::string blowup_control_csv(const BlowupTable& t);

} // namespace halflap

#endif
