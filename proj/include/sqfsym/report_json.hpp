#ifndef SQFSYM_REPORT_JSON_HPP
#define SQFSYM_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "verifier.hpp"

namespace sqfsym {

using Json = nlohmann::ordered_json;

inline Json to_json(const CheckResult& r)
{
    Json params = Json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    Json j;
    j["check_id"] = r.check_id;
    j["graph_id"] = r.graph_id;
    j["params"] = params;
    j["status"] = status_name(r.status);
    if (r.status == CheckStatus::skipped)
        j["reason"] = r.reason;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (r.status == CheckStatus::fail)
        j["witness"] = r.witness;
    return j;
}

inline Json to_json(const Report& report, bool explore = false)
{
    Json j;
    j["tool_version"] = report.tool_version;
    j["corpus"] = report.corpus;
    j["seed"] = report.seed;
    Json checks = Json::array();
    for (const auto& c : report.checks)
    {
        Json e;
        e["check_id"] = c.check_id;
        e["pass"] = c.pass;
        e["fail"] = c.fail;
        e["skip"] = c.skip;
        Json failures = Json::array();
        for (const auto& f : c.failures)
            failures.push_back(to_json(f));
        e["failures"] = failures;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["wall_ms"] = report.wall_ms;
    j["graphs"] = report.graphs;
    if (explore)
    {
        Json tight = Json::array();
        for (const auto& t : report.tight)
            tight.push_back(to_json(t));
        Json violations = Json::array();
        for (const auto& v : report.violations)
            violations.push_back(to_json(v));
        j["tight"] = tight;
        j["violations"] = violations;
    }
    return j;
}

}   // namespace sqfsym

#endif
