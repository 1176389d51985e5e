#include "qmono/report_json.hpp"

#include <cstdio>

#include <json.hpp>

namespace qmono {

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* policy_name(ResidualPolicy p) { return p == ResidualPolicy::Max ? "max" : "mean"; }

nlohmann::ordered_json bound_row(const BoundResult& b) {
    return {{"id", b.id},
            {"lhs", b.lhs},
            {"rhs", b.rhs},
            {"gap", b.gap},
            {"satisfied", b.satisfied},
            {"premise_ok", b.premise_ok},
            {"status", status_name(b.status)}};
}

nlohmann::ordered_json table_obj(const ResidualTable& t) {
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (const ResidualLevel& l : t.levels) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const ResidualEntry& e : l.entries)
            entries.push_back({{"parties", e.parties},
                               {"value", e.value},
                               {"status", status_name(e.status)},
                               {"selected", e.selected}});
        levels.push_back({{"size", l.size},
                          {"value", l.value},
                          {"status", status_name(l.status)},
                          {"entries", std::move(entries)}});
    }
    return {{"policy", policy_name(t.policy)},
            {"focus", t.focus},
            {"total", t.total()},
            {"levels", std::move(levels)}};
}

}  // namespace

std::string report_to_json(const MonogamyReport& report) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const AlphaSection& sec : report.sections) {
        nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
        for (const BoundResult& b : sec.bounds) bounds.push_back(bound_row(b));
        nlohmann::ordered_json residuals = nlohmann::ordered_json::array();
        for (const ResidualTable& t : sec.residuals) residuals.push_back(table_obj(t));
        arr.push_back({{"state", report.state_label},
                       {"measure", report.measure},
                       {"alpha", sec.alpha},
                       {"bounds", std::move(bounds)},
                       {"residuals", std::move(residuals)}});
    }
    return arr.dump(2) + "\n";
}

std::string report_to_csv(const MonogamyReport& report) {
    std::string out = "state,measure,alpha,id,lhs,rhs,gap,satisfied,premise_ok,status\n";
    for (const AlphaSection& sec : report.sections)
        for (const BoundResult& b : sec.bounds)
            out += report.state_label + ',' + report.measure + ',' + fmt12(sec.alpha) + ',' +
                   b.id + ',' + fmt12(b.lhs) + ',' + fmt12(b.rhs) + ',' + fmt12(b.gap) + ',' +
                   (b.satisfied ? "1" : "0") + ',' + (b.premise_ok ? "1" : "0") + ',' +
                   status_name(b.status) + '\n';
    return out;
}

}  // namespace qmono
