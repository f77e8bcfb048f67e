#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace nonproj {

enum class StepStatus { Pass, Fail, Error, Info };
enum class Verdict { Certified, Failed, Inconclusive };

std::string to_string(StepStatus s);
std::string to_string(Verdict v);
int exit_code(Verdict v);

struct StepRecord {
    std::string name;
    StepStatus status = StepStatus::Info;
    std::string detail;
    // flat key/value payload; values are preformatted strings so that the
    // emitted reports are byte-stable
    std::vector<std::pair<std::string, std::string>> data;
};

struct ObstructionReport {
    std::string pipeline;
    std::string config_echo;  // canonicalized configuration
    std::uint64_t seed = 0;
    std::vector<StepRecord> steps;
    Verdict verdict = Verdict::Inconclusive;
    std::string verdict_reason;

    StepRecord& step(const std::string& name);
    void pass(const std::string& name, const std::string& detail = "");
    void fail(const std::string& name, const std::string& detail = "");
    void info(const std::string& name, const std::string& detail = "");
    void error(const std::string& name, const std::string& detail = "");
    bool all_passed() const;

    std::string to_json() const;  // schema_version 1, byte-stable
    std::string to_text() const;
};

}  // namespace nonproj
