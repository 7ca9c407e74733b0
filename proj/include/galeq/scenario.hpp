#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galeq/cmfield.hpp"
#include "galeq/periods.hpp"

namespace galeq {

inline constexpr int kScenarioVersion = 1;
inline constexpr int kReportVersion = 1;

struct ScenarioOptions {
    Level level = Level::fgal;
    bool tate = true;
    DExponent d_exponent = DExponent::thm;
    TwoPiVariant twopi = TwoPiVariant::derived;
    std::uint64_t seed = 0;
    bool timing = false;  // only honoured by the text format

    bool operator==(const ScenarioOptions&) const = default;
};

/// Parsed scenario. The field model and CM type are optional; checks that
/// need them fail individually when they are absent.
struct Scenario {
    int version = kScenarioVersion;
    ScenarioOptions options;
    std::optional<ModelBundle> models;
    std::optional<CMType> phi;
    nlohmann::json checks = nlohmann::json::array();
    nlohmann::json sweep = nlohmann::json::object();
};

/// Throws Error(parse_error) with a line number for malformed JSON, and
/// Error(invalid_argument / invalid_model / ...) naming the violated rule.
Scenario parse_scenario(const std::string& text);

/// Command line overrides; unset fields keep the scenario's values.
struct OptionOverrides {
    std::optional<Level> level;
    std::optional<bool> tate;
    std::optional<DExponent> d_exponent;
    std::optional<std::uint64_t> seed;
};
void apply_overrides(ScenarioOptions& o, const OptionOverrides& ov);

struct CheckResult {
    std::string id;
    std::string type;
    std::string status;  // pass, fail or error
    std::string summary;
    std::vector<std::string> citations;
    nlohmann::json details = nlohmann::json::object();
    std::string error_code;
    double millis = 0;  // never serialized in structured output

    bool operator==(const CheckResult& o) const;
};

struct Report {
    int version = kReportVersion;
    std::string command;
    ScenarioOptions options;
    std::vector<CheckResult> checks;

    bool operator==(const Report&) const = default;
};

Report run_checks(const Scenario& sc);
Report run_sweep(const Scenario& sc);

std::string emit_structured(const Report& r);
Report parse_report(const std::string& text);
std::string emit_text(const Report& r);

/// 0 all pass, 1 some check failed, 2 some check hit an input error.
int exit_code(const Report& r);

std::vector<std::string> check_types();
/// Anchor tags and formulas behind a check type; throws on unknown types.
std::string explain(const std::string& check_type);

}  // namespace galeq
