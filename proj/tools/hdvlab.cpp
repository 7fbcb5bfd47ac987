#include "hdvlab/core/parse.hpp"
#include "hdvlab/scenario/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Globals {
    std::optional<int> precision;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

void apply(const Globals& g, hdv::Scenario& s) {
    if (g.precision) s.precision = *g.precision;
    if (g.seed) s.seed = *g.seed;
}

int exit_code(const std::vector<hdv::ScenarioReport>& reports) {
    int code = kOk;
    for (const auto& r : reports) {
        if (r.error == hdv::ErrorKind::ParseError) return kUsage;
        if (!r.passed) code = kFailed;
    }
    return code;
}

int emit(const Globals& g, const std::vector<hdv::ScenarioReport>& reports) {
    if (g.json) {
        std::cout << (reports.size() == 1 ? reports[0].json : hdv::suite_json(reports)).dump(2) << "\n";
    } else {
        for (const auto& r : reports)
            for (const auto& l : r.lines) std::cout << l << "\n";
    }
    return exit_code(reports);
}

int run_config(const Globals& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "hdvlab: cannot read " << path << "\n";
        return kUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    hdv::Scenario s = hdv::parse_scenario(buf.str());
    apply(g, s);
    return emit(g, {hdv::run_scenario(s)});
}

int run_suite(const Globals& g, const std::vector<std::string>& names, bool list) {
    std::vector<hdv::Scenario> suite = hdv::builtin_suite();
    if (list) {
        for (const auto& s : suite) std::cout << s.name << "  " << s.verb << "  " << s.field << "\n";
        return kOk;
    }
    std::vector<hdv::ScenarioReport> reports;
    for (auto& s : suite) {
        if (!names.empty() && std::find(names.begin(), names.end(), s.name) == names.end()) continue;
        apply(g, s);
        reports.push_back(hdv::run_scenario(s));
    }
    for (const auto& n : names)
        if (!hdv::find_builtin(n)) {
            std::cerr << "hdvlab: no builtin scenario " << n << "\n";
            return kUsage;
        }
    return emit(g, reports);
}

int show(const std::string& name) {
    auto s = hdv::find_builtin(name);
    if (!s) {
        std::cerr << "hdvlab: no builtin scenario " << name << "\n";
        return kUsage;
    }
    std::cout << hdv::to_config(*s);
    return kOk;
}

int classify(const Globals& g, const std::string& field, const std::string& expr) {
    hdv::FieldPtr k = hdv::parse_field(field, g.precision.value_or(hdv::kDefaultPrecision));
    hdv::FieldElement x = hdv::parse_element(*k, expr);
    hdv::NormalityClass c = hdv::classify_normal(x);
    if (g.json) {
        hdv::Json j = hdv::to_json(c);
        j["field"] = k->descriptor();
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << expr << " over " << k->descriptor() << ": " << hdv::verdict_name(c.verdict) << "\n";
    std::cout << "  v(lambda - 1) = " << c.v_pi << ", threshold p v(p)/(p-1) = " << hdv::to_string(c.threshold) << "\n";
    if (c.root) std::cout << "  p-th root " << c.root->str() << "\n";
    if (c.pi1) std::cout << "  pi1 = " << c.pi1->str() << "\n";
    if (c.a) std::cout << "  a = " << c.a->str() << "\n";
    if (c.b) std::cout << "  b = " << c.b->str() << "\n";
    if (c.improvement) std::cout << "  improvement " << c.improvement->str() << "\n";
    if (c.root_field_agrees)
        std::cout << "  root field of X^(p-1) + b is K(eps): " << (*c.root_field_agrees ? "yes" : "no") << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Henselian discrete valued field lab"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    int precision = 0;
    std::uint64_t seed = 0;
    auto* popt = app.add_option("--precision", precision, "working precision N")->check(CLI::Range(8, 4096));
    auto* sopt = app.add_option("--seed", seed, "random seed");
    app.add_flag("--json", g.json, "JSON output");

    std::string config;
    auto* run = app.add_subcommand("run", "run a scenario config");
    run->add_option("config", config, "config file")->required();

    std::vector<std::string> names;
    bool list = false;
    auto* suite = app.add_subcommand("suite", "run the builtin scenarios");
    suite->add_option("names", names, "run only these");
    suite->add_flag("--list", list, "list the builtins");

    std::string show_name;
    auto* show_cmd = app.add_subcommand("show", "print a builtin scenario as config");
    show_cmd->add_option("name", show_name)->required();

    std::string field, expr;
    auto* cls = app.add_subcommand("classify", "classify lambda in nabla_0(K)");
    cls->add_option("-f,--field", field, "field descriptor")->required();
    cls->add_option("-e,--element", expr, "element expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (*popt) g.precision = precision;
    if (*sopt) g.seed = seed;

    try {
        if (*run) return run_config(g, config);
        if (*suite) return run_suite(g, names, list);
        if (*show_cmd) return show(show_name);
        if (*cls) return classify(g, field, expr);
    } catch (const hdv::Error& e) {
        std::cerr << "hdvlab: " << e.what() << "\n";
        return e.kind() == hdv::ErrorKind::ParseError ? kUsage : kFailed;
    }
    return kUsage;
}
