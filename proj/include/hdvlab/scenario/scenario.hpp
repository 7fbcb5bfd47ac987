#ifndef HDVLAB_SCENARIO_SCENARIO_HPP
#define HDVLAB_SCENARIO_SCENARIO_HPP

#include "hdvlab/scenario/report_json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hdv {

/// One run of a verb over a field model.  Config text:
///
///   [scenario]
///   name = q2-normality
///   verb = classify
///   field = padic(2)
///   [params]
///   elements = 3, 5, 17, -1
///   [expect]
///   verdicts = ANormal, CNormal, InKp, ANormal
///
/// Lists are comma separated; '#' starts a comment.
struct Scenario {
    std::string name;
    std::string verb;
    std::string field;
    int precision = kDefaultPrecision;
    std::uint64_t seed = 1;
    std::map<std::string, std::string> params;
    std::map<std::string, std::string> expect;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

const std::vector<std::string>& scenario_verbs();

/// Throws ParseError (with the line number) on unknown sections or keys,
/// keys the verb does not take, malformed typed values and empty input.
Scenario parse_scenario(const std::string& text);
std::string to_config(const Scenario& s);

struct Expectation {
    std::string key;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct ScenarioReport {
    std::string name;
    bool passed = false;
    /// Set when the run stopped on a library error.
    std::optional<ErrorKind> error;
    std::vector<Expectation> expectations;
    std::vector<std::string> lines;
    Json json;
};

ScenarioReport run_scenario(const Scenario& s);

std::vector<Scenario> builtin_suite();
std::optional<Scenario> find_builtin(const std::string& name);

/// Reports in name order under {"reports": [...], "passed": ...}.
Json suite_json(std::vector<ScenarioReport> reports);

}  // namespace hdv

#endif  // HDVLAB_SCENARIO_SCENARIO_HPP
