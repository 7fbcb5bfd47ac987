#include "hdvlab/scenario/scenario.hpp"

#include "hdvlab/core/parse.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace hdv {

namespace {

struct VerbKeys {
    std::set<std::string> params;
    std::set<std::string> expect;
};

const std::map<std::string, VerbKeys>& verb_keys() {
    static const std::map<std::string, VerbKeys> keys = {
        {"classify", {{"elements"}, {"verdicts"}}},
        {"construct-extension", {{"poly", "kummer", "artin_schreier"}, {"kind", "e", "f", "residue"}}},
        {"construct-tower",
         {{"kind", "generators", "pi", "alphas", "mu"},
          {"rank", "degree", "totally_ramified", "total_e", "descent", "eta1_value", "level1_verdict"}}},
        {"construct-algebra",
         {{"kind", "generators", "slots", "trials", "cs", "bs", "mu"},
          {"division", "degree", "exponent", "p_independent", "hits", "trusted_external", "provenance"}}},
        {"verify-suite", {{"checks", "xi", "count"}, {"albert", "facts", "eisenstein"}}},
    };
    return keys;
}

const std::set<std::string> kIntParams = {"mu", "trials", "count"};
const std::set<std::string> kBoolExpect = {"totally_ramified", "descent",   "division", "p_independent",
                                           "trusted_external", "albert",    "facts",    "eisenstein"};
const std::set<std::string> kIntExpect = {"e", "f", "rank", "degree", "total_e", "exponent", "hits"};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw Error(ErrorKind::ParseError, "config line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t used = 0;
        long long n = std::stoll(v, &used);
        if (used == v.size()) return n;
    } catch (const std::exception&) {
    }
    parse_fail(line, key + " must be an integer, got '" + v + "'");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---- running ----------------------------------------------------------------

struct Run {
    const Scenario& s;
    FieldPtr k;
    Json results = Json::object();
    std::map<std::string, std::string> actual;
    std::vector<std::string> lines;

    const std::string& param(const std::string& key) const {
        auto it = s.params.find(key);
        require(it != s.params.end(), ErrorKind::ParseError, "scenario " + s.name + ": missing parameter " + key);
        return it->second;
    }
    bool has(const std::string& key) const { return s.params.count(key) > 0; }
    long long int_param(const std::string& key, long long fallback) const {
        return has(key) ? std::stoll(param(key)) : fallback;
    }
    FieldElement element(const std::string& key) const { return parse_element(*k, param(key)); }
    std::vector<FieldElement> elements(const std::string& key) const {
        std::vector<FieldElement> out;
        for (const auto& e : split_list(param(key))) out.push_back(parse_element(*k, e));
        return out;
    }
    void say(std::string line) { lines.push_back("  " + std::move(line)); }
};

void run_classify(Run& r) {
    std::vector<std::string> verdicts;
    Json out = Json::array();
    for (const auto& e : split_list(r.param("elements"))) {
        NormalityClass c = classify_normal(parse_element(*r.k, e));
        verdicts.push_back(verdict_name(c.verdict));
        Json j = to_json(c);
        j["input"] = e;
        out.push_back(j);
        std::string line = e + ": " + verdicts.back() + "  v(lambda - 1) = " + c.v_pi.str();
        if (c.pi1) line += "  pi1 = " + c.pi1->str();
        if (c.a) line += "  a = " + c.a->str();
        if (c.b) line += "  b = " + c.b->str();
        r.say(line);
    }
    r.results["classifications"] = out;
    r.actual["verdicts"] = join(verdicts);
}

void run_extension(Run& r) {
    int given = r.has("poly") + r.has("kummer") + r.has("artin_schreier");
    require(given == 1, ErrorKind::ParseError,
            "scenario " + r.s.name + ": give exactly one of poly, kummer, artin_schreier");
    ExtPtr l = r.has("poly")     ? adjoin(r.k, parse_poly(*r.k, r.param("poly")))
               : r.has("kummer") ? kummer_adjoin(r.element("kummer"))
                                 : artin_schreier_adjoin(r.element("artin_schreier"));
    ExtClassification c = classify_ext(*l);
    r.results["extension"] = l->descriptor();
    r.results["classification"] = to_json(c);
    r.actual["kind"] = ext_class_name(c.kind);
    r.actual["e"] = std::to_string(c.e);
    r.actual["f"] = std::to_string(c.f);
    r.actual["residue"] = c.residue;
    r.say(l->descriptor() + ": " + ext_class_name(c.kind) + "  e = " + std::to_string(c.e) +
          "  f = " + std::to_string(c.f) + "  residue " + c.residue);
}

void record_tower(Run& r, const AbelianTowerReport& t) {
    r.actual["rank"] = std::to_string(t.rank);
    r.actual["degree"] = std::to_string(t.degree);
    r.actual["totally_ramified"] = bool_str(t.totally_ramified);
    r.actual["total_e"] = std::to_string(t.total_e);
    r.say(t.kind + " tower: rank " + std::to_string(t.rank) + ", degree " + std::to_string(t.degree) + ", e " +
          std::to_string(t.total_e));
    for (std::size_t i = 0; i < t.steps.size(); ++i)
        r.say("step " + std::to_string(i + 1) + ": " + ext_class_name(t.steps[i].cls.kind) + "  " +
              t.steps[i].field->descriptor());
    for (const auto& n : t.notes) r.say("note: " + n);
}

void run_tower(Run& r) {
    const std::string kind = r.param("kind");
    if (kind == "artin-schreier") {
        AbelianTowerReport t = artin_schreier_tower(r.elements("generators"));
        r.results["tower"] = to_json(t);
        record_tower(r, t);
    } else if (kind == "kummer") {
        AbelianTowerReport t = kummer_tower(r.elements("generators"), make_cyclotomic(r.k));
        r.results["tower"] = to_json(t);
        record_tower(r, t);
    } else if (kind == "descent") {
        int mu = static_cast<int>(r.int_param("mu", 1));
        Lemma51Report d = lemma_5_1_tower(r.element("pi"), r.elements("alphas"), mu, make_cyclotomic(r.k));
        r.results["descent"] = to_json(d);
        record_tower(r, d.tower);
        bool all = std::all_of(d.descent.begin(), d.descent.end(), [](const DescentCheck& c) { return c.same_coset; });
        r.actual["descent"] = bool_str(all);
        r.actual["eta1_value"] = d.eta1_value.str();
        r.actual["level1_verdict"] = d.level1_verdict ? verdict_name(*d.level1_verdict) : "none";
        r.say("gamma = " + to_string(d.gamma) + "  v(eta1) = " + d.eta1_value.str() + " (expected " +
              d.eta1_expected.str() + ")");
        for (const auto& c : d.descent)
            r.say("descent j = " + std::to_string(c.j) + ": same coset " + bool_str(c.same_coset));
        for (const auto& n : d.notes) r.say("note: " + n);
    } else {
        throw Error(ErrorKind::ParseError, "scenario " + r.s.name + ": unknown tower kind " + kind);
    }
}

void record_certificate(Run& r, const DivisionCertificate& c) {
    r.results["certificate"] = to_json(c);
    r.actual["division"] = bool_str(c.division);
    r.actual["degree"] = std::to_string(c.degree);
    r.actual["exponent"] = std::to_string(c.exponent);
    r.actual["p_independent"] = bool_str(c.p_independent);
    r.actual["trusted_external"] = bool_str(c.trusted_external);
    r.actual["provenance"] = join(c.provenance, "; ");
    for (const auto& ch : c.checks) r.say(std::string(ch.holds ? "ok   " : "FAIL ") + ch.name + ": " + ch.detail);
    if (c.division) {
        r.say("division algebra of degree " + std::to_string(c.degree) + ", exponent " + std::to_string(c.exponent));
        r.say("residue algebra: " + c.residue_algebra);
        for (const auto& p : c.provenance) r.say("provenance: " + p);
    } else {
        r.say("criterion inapplicable: " + c.failure);
    }
}

void run_algebra(Run& r) {
    const std::string kind = r.param("kind");
    if (kind == "residue-criterion") {
        auto gens = r.elements("generators");
        auto slots = r.elements("slots");
        require(gens.size() == slots.size(), ErrorKind::ParseError,
                "scenario " + r.s.name + ": generators and slots differ in length");
        std::vector<CyclicAlgebra> fs;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            ExtPtr l = r.k->characteristic() == 0 ? kummer_adjoin(gens[j]) : artin_schreier_adjoin(gens[j]);
            fs.push_back(make_cyclic(l, slots[j]));
        }
        TensorAlgebra d = tensor(fs);
        DivisionCertificate c = assess_division(d);
        record_certificate(r, c);
        int trials = static_cast<int>(r.int_param("trials", 0));
        int hits = 0;
        Json samples = Json::array();
        for (std::size_t j = 0; j < fs.size(); ++j) {
            NormSample ns = norm_witness_sample(*fs[j].field, fs[j].slot, trials, r.s.seed + j);
            hits += ns.hits;
            samples.push_back(to_json(ns));
            r.say("norm sample factor " + std::to_string(j + 1) + ": " + std::to_string(ns.hits) + " hits in " +
                  std::to_string(ns.trials) + " trials, min gap " + ns.min_gap.str() + " (" + ns.label + ")");
        }
        r.results["norm_samples"] = samples;
        r.actual["hits"] = std::to_string(hits);
    } else if (kind == "w-mu") {
        int mu = static_cast<int>(r.int_param("mu", 1));
        auto [w, c] = build_w_mu(r.k, r.elements("cs"), r.elements("bs"), mu);
        Json fs = Json::array();
        for (const auto& f : w.factors) fs.push_back(to_json(f));
        r.results["factors"] = fs;
        record_certificate(r, c);
    } else {
        throw Error(ErrorKind::ParseError, "scenario " + r.s.name + ": unknown algebra kind " + kind);
    }
}

/// X^p + pi (sum c_i X^i) + pi u with random small residue lifts.
Poly random_eisenstein(const ValuedField& k, std::mt19937_64& rng) {
    const ResidueFieldPtr rk = k.residue_field();
    auto residue = [&](bool nonzero) {
        for (;;) {
            ResidueElement r = rk->from_int(static_cast<long long>(rng() % rk->characteristic()));
            for (int i = 0; i < rk->nvars(); ++i)
                r += rk->variable(i).scale_int(static_cast<long long>(rng() % rk->characteristic()));
            if (!nonzero || !r.is_zero()) return r;
        }
    };
    const FieldElement pi = k.uniformizer();
    Poly f(k.p() + 1, k.zero());
    f.back() = k.one();
    f[0] = pi * (k.lift(residue(true)) + pi * k.lift(residue(false)));
    for (std::size_t i = 1; i < k.p(); ++i) f[i] = pi * k.lift(residue(false));
    return f;
}

void run_verify(Run& r) {
    std::mt19937_64 rng(r.s.seed);
    for (const auto& check : split_list(r.param("checks"))) {
        if (check == "albert") {
            CyclotomicContext ctx = make_cyclotomic(r.k);
            Lemma34Report a = lemma_3_4_report(r.element("xi"), ctx);
            bool ok = agrees_to_precision(a.defect_root.pow(r.k->p()), a.defect) &&
                      a.lambda_power == PthPowerVerdict::Outcome::NotPthPower;
            r.results["albert"] = to_json(a);
            r.actual["albert"] = bool_str(ok);
            r.say("albert element " + a.lambda.str() + ": defect is a p-th power " + bool_str(ok));
        } else if (check == "cyclotomic-facts") {
            auto facts = cyclotomic_facts(make_cyclotomic(r.k));
            bool all = true;
            Json fj = Json::array();
            for (const auto& f : facts) {
                all = all && f.holds;
                fj.push_back(to_json(f));
                r.say(std::string(f.holds ? "ok   " : "FAIL ") + f.name + " " + f.detail);
            }
            r.results["facts"] = fj;
            r.actual["facts"] = bool_str(all);
        } else if (check == "eisenstein") {
            int count = static_cast<int>(r.int_param("count", 10));
            int good = 0;
            for (int i = 0; i < count; ++i) {
                ExtPtr l = adjoin(r.k, random_eisenstein(*r.k, rng));
                if (classify_ext(*l).kind == ExtClass::TotallyRamified &&
                    ext_val(l->generator()) == Value(Rational(1, static_cast<long long>(r.k->p()))))
                    ++good;
            }
            r.results["eisenstein"] = Json{{"count", count}, {"totally_ramified", good}};
            r.actual["eisenstein"] = bool_str(good == count);
            r.say("eisenstein: " + std::to_string(good) + " of " + std::to_string(count) + " totally ramified");
        } else {
            throw Error(ErrorKind::ParseError, "scenario " + r.s.name + ": unknown check " + check);
        }
    }
}

}  // namespace

const std::vector<std::string>& scenario_verbs() {
    static const std::vector<std::string> verbs = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : verb_keys()) v.push_back(name);
        return v;
    }();
    return verbs;
}

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    std::stringstream in(text);
    std::string raw, section;
    std::set<std::string> seen_sections, seen_scenario_keys;
    std::map<std::string, int> param_lines, expect_lines;
    int line = 0, content = 0, field_line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string l = trim(raw.substr(0, raw.find('#')));
        if (l.empty()) continue;
        ++content;
        if (l.front() == '[') {
            if (l.back() != ']') parse_fail(line, "unterminated section header");
            section = trim(l.substr(1, l.size() - 2));
            if (section != "scenario" && section != "params" && section != "expect")
                parse_fail(line, "unknown section [" + section + "]");
            if (!seen_sections.insert(section).second) parse_fail(line, "duplicate section [" + section + "]");
            continue;
        }
        auto eq = l.find('=');
        if (eq == std::string::npos) parse_fail(line, "expected key = value");
        std::string key = trim(l.substr(0, eq)), value = trim(l.substr(eq + 1));
        if (key.empty()) parse_fail(line, "empty key");
        if (value.empty()) parse_fail(line, "empty value for " + key);
        if (section.empty()) parse_fail(line, "key " + key + " outside a section");
        if (section == "scenario") {
            if (!seen_scenario_keys.insert(key).second) parse_fail(line, "duplicate key " + key);
            if (key == "name") s.name = value;
            else if (key == "verb") s.verb = value;
            else if (key == "field") {
                s.field = value;
                field_line = line;
            }
            else if (key == "precision") {
                long long n = parse_int(value, line, key);
                if (n < 8 || n > 4096) parse_fail(line, "precision must lie in [8, 4096]");
                s.precision = static_cast<int>(n);
            } else if (key == "seed") {
                long long n = parse_int(value, line, key);
                if (n < 0) parse_fail(line, "seed must be nonnegative");
                s.seed = static_cast<std::uint64_t>(n);
            } else
                parse_fail(line, "unknown key " + key + " in [scenario]");
        } else {
            auto& target = section == "params" ? s.params : s.expect;
            auto& lines = section == "params" ? param_lines : expect_lines;
            if (!target.emplace(key, value).second) parse_fail(line, "duplicate key " + key);
            lines[key] = line;
        }
    }
    if (content == 0) throw Error(ErrorKind::ParseError, "empty config");
    for (const char* k : {"name", "verb", "field"})
        if (!seen_scenario_keys.count(k)) parse_fail(line, std::string("[scenario] lacks ") + k);
    auto vk = verb_keys().find(s.verb);
    if (vk == verb_keys().end()) parse_fail(line, "unknown verb " + s.verb + " (one of " + join(scenario_verbs()) + ")");
    for (const auto& [key, value] : s.params) {
        if (!vk->second.params.count(key)) parse_fail(param_lines[key], "verb " + s.verb + " takes no parameter " + key);
        if (kIntParams.count(key)) parse_int(value, param_lines[key], key);
    }
    for (const auto& [key, value] : s.expect) {
        if (!vk->second.expect.count(key)) parse_fail(expect_lines[key], "verb " + s.verb + " has no expectation " + key);
        if (kBoolExpect.count(key) && value != "true" && value != "false")
            parse_fail(expect_lines[key], key + " must be true or false");
        if (kIntExpect.count(key)) parse_int(value, expect_lines[key], key);
    }
    try {
        parse_field(s.field, s.precision);
    } catch (const Error& e) {
        parse_fail(field_line, e.what());
    }
    return s;
}

std::string to_config(const Scenario& s) {
    std::string out = "[scenario]\nname = " + s.name + "\nverb = " + s.verb + "\nfield = " + s.field + "\n";
    if (s.precision != kDefaultPrecision) out += "precision = " + std::to_string(s.precision) + "\n";
    if (s.seed != 1) out += "seed = " + std::to_string(s.seed) + "\n";
    if (!s.params.empty()) {
        out += "\n[params]\n";
        for (const auto& [k, v] : s.params) out += k + " = " + v + "\n";
    }
    if (!s.expect.empty()) {
        out += "\n[expect]\n";
        for (const auto& [k, v] : s.expect) out += k + " = " + v + "\n";
    }
    return out;
}

ScenarioReport run_scenario(const Scenario& s) {
    ScenarioReport rep;
    rep.name = s.name;
    rep.lines.push_back("scenario " + s.name + " (" + s.verb + " over " + s.field + ")");
    Json j;
    j["scenario"] = s.name;
    j["verb"] = s.verb;
    j["field"] = s.field;
    j["precision"] = s.precision;
    j["seed"] = s.seed;
    Run r{s, nullptr, Json::object(), {}, {}};
    try {
        r.k = parse_field(s.field, s.precision);
        if (s.verb == "classify") run_classify(r);
        else if (s.verb == "construct-extension") run_extension(r);
        else if (s.verb == "construct-tower") run_tower(r);
        else if (s.verb == "construct-algebra") run_algebra(r);
        else if (s.verb == "verify-suite") run_verify(r);
        else throw Error(ErrorKind::ParseError, "unknown verb " + s.verb);
        j["error"] = nullptr;
    } catch (const Error& e) {
        rep.error = e.kind();
        j["error"] = Json{{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
        r.say(std::string("error in scenario ") + s.name + ": " + e.what());
    }
    rep.lines.insert(rep.lines.end(), r.lines.begin(), r.lines.end());
    bool ok = !rep.error;
    j["expectations"] = Json::array();
    for (const auto& [key, expected] : s.expect) {
        auto it = r.actual.find(key);
        Expectation e{key, expected, it == r.actual.end() ? std::string("(missing)") : it->second, false};
        e.ok = it != r.actual.end() && e.actual == expected;
        ok = ok && e.ok;
        j["expectations"].push_back(
            Json{{"key", e.key}, {"expected", e.expected}, {"actual", e.actual}, {"ok", e.ok}});
        rep.lines.push_back(std::string("  expect ") + key + " = " + expected + ": " +
                            (e.ok ? "ok" : "MISMATCH (got " + e.actual + ")"));
        rep.expectations.push_back(std::move(e));
    }
    j["results"] = r.results;
    rep.passed = ok;
    j["passed"] = ok;
    rep.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + s.name);
    rep.json = std::move(j);
    return rep;
}

std::vector<Scenario> builtin_suite() {
    static const char* const texts[] = {
        R"([scenario]
name = q2-normality
verb = classify
field = padic(2)

[params]
elements = 3, 5, 17, -1

[expect]
verdicts = ANormal, CNormal, InKp, ANormal
)",
        R"([scenario]
name = theorem21b-charp
verb = construct-algebra
field = laurent(ratfun(2;x,y))
seed = 2024

[params]
kind = residue-criterion
generators = t^-1, x*t^-1
slots = x, y
trials = 1000

[expect]
division = true
degree = 4
exponent = 2
p_independent = true
hits = 0
)",
        R"([scenario]
name = theorem21b-charp-tr
verb = construct-algebra
field = laurent(ratfun(2;x,y))
seed = 2024

[params]
kind = residue-criterion
generators = t^-1, x^4*t^-1
slots = x, y
trials = 1000

[expect]
division = true
degree = 4
exponent = 2
p_independent = true
hits = 0
)",
        R"([scenario]
name = lemma51-mixed
verb = construct-tower
field = gauss(eis(padic(2), X^2-2); x)

[params]
kind = descent
pi = th^3
alphas = 1, x
mu = 2

[expect]
rank = 2
degree = 4
totally_ramified = true
total_e = 4
descent = true
eta1_value = 3/2
)",
        R"([scenario]
name = lemma34-p3
verb = verify-suite
field = eis(padic(3), X^3-3)
precision = 40

[params]
checks = albert, cyclotomic-facts
xi = th

[expect]
albert = true
facts = true
)",
        R"([scenario]
name = w1-mixed
verb = construct-algebra
field = gauss(eis(padic(2), X^2-2); x, y)

[params]
kind = w-mu
cs = x
bs = y
mu = 1

[expect]
division = true
degree = 2
exponent = 2
p_independent = true
trusted_external = true
provenance = trusted external: [Mo] Theorem 1
)",
    };
    std::vector<Scenario> out;
    for (const char* t : texts) out.push_back(parse_scenario(t));
    std::sort(out.begin(), out.end(), [](const Scenario& a, const Scenario& b) { return a.name < b.name; });
    return out;
}

std::optional<Scenario> find_builtin(const std::string& name) {
    for (auto& s : builtin_suite())
        if (s.name == name) return s;
    return std::nullopt;
}

Json suite_json(std::vector<ScenarioReport> reports) {
    std::sort(reports.begin(), reports.end(),
              [](const ScenarioReport& a, const ScenarioReport& b) { return a.name < b.name; });
    Json j;
    bool all = true;
    j["reports"] = Json::array();
    for (auto& r : reports) {
        all = all && r.passed;
        j["reports"].push_back(std::move(r.json));
    }
    j["passed"] = all;
    return j;
}

}  // namespace hdv
