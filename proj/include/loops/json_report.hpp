#pragma once

#include <json.hpp>

#include "loops/check.hpp"
#include "loops/report.hpp"

namespace loops {

using Json = nlohmann::ordered_json;

inline Json to_json(const Record& r) {
    Json j;
    j["tag"] = r.tag;
    j["method"] = r.method;
    if (r.seed) j["seed"] = r.seed;
    j["passed"] = r.passed;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["evaluations"] = r.evaluations;
    return j;
}

inline Json to_json(const Suite& s) {
    Json j;
    j["suite"] = s.name;
    j["input"] = s.input;
    Json recs = Json::array();
    for (const auto& r : s.records) recs.push_back(to_json(r));
    j["records"] = std::move(recs);
    j["overall"] = s.all_passed() ? "pass" : "fail";
    return j;
}

inline Json to_json(const CheckResult& c) {
    Json j;
    j["law"] = c.law;
    j["mode"] = c.sampled ? "sampled" : "exhaustive";
    if (c.sampled) {
        j["samples"] = c.samples;
        j["seed"] = c.seed;
    }
    j["passed"] = c.passed;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    j["evaluations"] = c.evaluations;
    return j;
}

inline Record record_from_check(const std::string& tag, const CheckResult& c) {
    Record r;
    r.tag = tag;
    r.method = c.sampled ? "sampled(" + std::to_string(c.samples) + ")" : "exhaustive";
    r.seed = c.seed;
    r.passed = c.passed;
    r.detail = c.detail;
    for (Elem w : c.witness) r.witness.push_back((long)w);
    r.evaluations = c.evaluations;
    return r;
}

}  // namespace loops
