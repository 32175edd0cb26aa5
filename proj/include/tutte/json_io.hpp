#ifndef TUTTE_JSON_IO_HPP
#define TUTTE_JSON_IO_HPP

// JSON views of the result types. Fractional quantities appear only as
// integer `*_thirds` fields.

#include <json.hpp>

#include "tutte/engine.hpp"
#include "tutte/oracle.hpp"
#include "tutte/stress.hpp"

namespace tutte {

inline nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.a, e.b}); }

inline nlohmann::json to_json(const BoundInstance& in) {
    nlohmann::json j{{"u", in.u}, {"v", in.v}};
    if (in.e) j["e"] = edge_json(*in.e);
    if (in.f) j["f"] = edge_json(*in.f);
    if (in.z) j["z"] = *in.z;
    return j;
}

inline nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json tau = nlohmann::json::array();
    for (Thirds t : r.tau_terms) tau.push_back(t.value());
    return {{"n", r.n},
            {"bridge_count", r.bridge_count},
            {"beta_thirds", r.beta.value()},
            {"tau_thirds", tau},
            {"budget_thirds", r.budget.value()},
            {"lhs_thirds", 3 * r.bridge_count},
            {"satisfied", r.satisfied}};
}

inline nlohmann::json to_json(const TutteResult& r, bool with_trace = false) {
    nlohmann::json j{{"kind", to_string(r.kind)},
                     {"instance", to_json(r.instance)},
                     {"path", r.path},
                     {"report", to_json(r.report)}};
    if (r.cycle)
        j["cycle"] = {{"length", r.cycle->length},
                      {"required", r.cycle->required},
                      {"degenerate", r.cycle->degenerate},
                      {"holds", r.cycle->holds}};
    if (with_trace) j["trace"] = r.trace;
    return j;
}

inline nlohmann::json to_json(const oracle::OracleReport& r) {
    nlohmann::json j{{"instance_id", r.instance_id},
                     {"engine_path_valid", r.engine_path_valid},
                     {"engine_bound_satisfied", r.engine_bound_satisfied},
                     {"report_agrees", r.report_agrees},
                     {"bridge_count", r.verdict.bridges},
                     {"beta_thirds", r.verdict.beta_thirds},
                     {"tau_thirds", r.verdict.tau_thirds},
                     {"budget_thirds", r.verdict.budget_thirds}};
    j["valid_paths"] = r.valid_paths ? nlohmann::json(*r.valid_paths) : nlohmann::json(nullptr);
    j["min_bridge_count"] = r.min_bridge_count ? nlohmann::json(*r.min_bridge_count) : nlohmann::json(nullptr);
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    if (!r.defect.empty()) j["defect"] = r.defect;
    return j;
}

inline nlohmann::json to_json(const oracle::CycleReport& r) {
    nlohmann::json j{{"instance_id", r.instance_id},
                     {"engine_cycle_valid", r.engine_cycle_valid},
                     {"engine_length", r.engine_length}};
    j["cycles"] = r.cycles ? nlohmann::json(*r.cycles) : nlohmann::json(nullptr);
    j["max_length"] = r.max_length ? nlohmann::json(*r.max_length) : nlohmann::json(nullptr);
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    if (!r.defect.empty()) j["defect"] = r.defect;
    return j;
}

inline nlohmann::json to_json(const StressSummary& s) {
    nlohmann::json ops = nlohmann::json::object();
    for (const auto& [name, st] : s.ops)
        ops[name] = {{"cases", st.cases}, {"violations", st.violations}, {"enumerated", st.enumerated}};
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : s.failures)
        failures.push_back({{"instance_id", f.instance_id}, {"case", f.case_text}, {"message", f.message}});
    return {{"instances", s.instances},
            {"instances_per_family", s.instances_per_family},
            {"cases", s.cases},
            {"violations", s.violations},
            {"oracle_enumerated", s.enumerated},
            {"oracle_skipped", s.enumeration_skipped},
            {"ops", ops},
            {"failures", failures},
            {"files", s.files},
            {"seconds", s.seconds}};
}

}  // namespace tutte

#endif  // TUTTE_JSON_IO_HPP
