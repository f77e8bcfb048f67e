#include "nonproj/report.hpp"

#include <nlohmann/json.hpp>

namespace nonproj {

std::string to_string(StepStatus s) {
    switch (s) {
        case StepStatus::Pass: return "pass";
        case StepStatus::Fail: return "fail";
        case StepStatus::Error: return "error";
        default: return "info";
    }
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "obstruction_certified";
        case Verdict::Failed: return "failed";
        default: return "inconclusive";
    }
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Certified: return 0;
        case Verdict::Failed: return 1;
        default: return 2;
    }
}

StepRecord& ObstructionReport::step(const std::string& name) {
    steps.push_back({name, StepStatus::Info, "", {}});
    return steps.back();
}

void ObstructionReport::pass(const std::string& name, const std::string& detail) {
    steps.push_back({name, StepStatus::Pass, detail, {}});
}

void ObstructionReport::fail(const std::string& name, const std::string& detail) {
    steps.push_back({name, StepStatus::Fail, detail, {}});
}

void ObstructionReport::info(const std::string& name, const std::string& detail) {
    steps.push_back({name, StepStatus::Info, detail, {}});
}

void ObstructionReport::error(const std::string& name, const std::string& detail) {
    steps.push_back({name, StepStatus::Error, detail, {}});
}

bool ObstructionReport::all_passed() const {
    for (const auto& s : steps)
        if (s.status == StepStatus::Fail || s.status == StepStatus::Error) return false;
    return true;
}

std::string ObstructionReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["pipeline"] = pipeline;
    j["config"] = nlohmann::ordered_json::parse(config_echo.empty() ? "{}" : config_echo);
    j["seed"] = seed;
    nlohmann::ordered_json steps_j = nlohmann::ordered_json::array();
    for (const auto& s : steps) {
        nlohmann::ordered_json sj;
        sj["name"] = s.name;
        sj["status"] = to_string(s.status);
        if (!s.detail.empty()) sj["detail"] = s.detail;
        if (!s.data.empty()) {
            nlohmann::ordered_json dj;
            for (const auto& [k, v] : s.data) dj[k] = v;
            sj["data"] = dj;
        }
        steps_j.push_back(sj);
    }
    j["steps"] = steps_j;
    j["verdict"] = to_string(verdict);
    if (!verdict_reason.empty()) j["verdict_reason"] = verdict_reason;
    return j.dump(2);
}

std::string ObstructionReport::to_text() const {
    std::string out = "pipeline: " + pipeline + "\n";
    for (const auto& s : steps) {
        out += "[" + to_string(s.status) + "] " + s.name;
        if (!s.detail.empty()) out += ": " + s.detail;
        out += "\n";
        for (const auto& [k, v] : s.data) out += "    " + k + " = " + v + "\n";
    }
    out += "verdict: " + to_string(verdict);
    if (!verdict_reason.empty()) out += " (" + verdict_reason + ")";
    out += "\n";
    return out;
}

}  // namespace nonproj
