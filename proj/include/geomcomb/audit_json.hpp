#pragma once

#include "geomcomb/audit.hpp"

#include <json.hpp>

namespace geomcomb {

/// Report schema:
/// { "grid": {"name", "n_max", "lambda_max", "values": [rat...]},
///   "checks": [ {"id", "status": "pass"|"fail"|"pass-variant",
///                "counterexample": null | {"n","lambda","alpha","beta","gamma"},
///                "note"} ] }
inline nlohmann::ordered_json audit_to_json(const AuditReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json grid;
    grid["name"] = report.grid.name;
    grid["n_max"] = report.grid.n_max;
    grid["lambda_max"] = report.grid.lambda_max;
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : report.grid.values) values.push_back(rat_to_string(v));
    grid["values"] = values;
    j["grid"] = grid;

    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = to_string(c.status);
        if (c.counterexample) {
            nlohmann::ordered_json ce;
            ce["n"] = c.counterexample->n;
            ce["lambda"] = c.counterexample->lambda;
            ce["alpha"] = rat_to_string(c.counterexample->params.alpha);
            ce["beta"] = rat_to_string(c.counterexample->params.beta);
            ce["gamma"] = rat_to_string(c.counterexample->params.gamma);
            jc["counterexample"] = ce;
        } else {
            jc["counterexample"] = nullptr;
        }
        jc["note"] = c.note;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

}  // namespace geomcomb
