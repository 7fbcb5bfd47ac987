#include "hdvlab/scenario/scenario.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

using namespace hdv;
using hdv::testing::kind_of;

namespace {

const char* kClassify = R"(# two verdicts
[scenario]
name = small
verb = classify
field = padic(2)
seed = 9

[params]
elements = 3, 17   # trailing comment

[expect]
verdicts = ANormal, InKp
)";

}  // namespace

TEST(ScenarioConfig, ParsesAndRoundTrips) {
    Scenario s = parse_scenario(kClassify);
    EXPECT_EQ(s.name, "small");
    EXPECT_EQ(s.seed, 9u);
    EXPECT_EQ(s.precision, kDefaultPrecision);
    EXPECT_EQ(s.params.at("elements"), "3, 17");
    EXPECT_EQ(parse_scenario(to_config(s)), s);
    for (const auto& b : builtin_suite()) EXPECT_EQ(parse_scenario(to_config(b)), b) << b.name;
}

TEST(ScenarioConfig, Rejections) {
    EXPECT_EQ(kind_of([] { parse_scenario(""); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_scenario("# nothing\n\n"); }), ErrorKind::ParseError);
    std::string base = "[scenario]\nname = a\nverb = classify\nfield = padic(2)\n";
    EXPECT_NO_THROW(parse_scenario(base));
    EXPECT_EQ(kind_of([&] { parse_scenario(base + "colour = red\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_scenario(base + "[params]\ncs = x\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_scenario(base + "[expect]\ndivision = true\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_scenario(base + "[other]\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_scenario(base + "name = b\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { parse_scenario(base + "precision = many\n"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_scenario("[scenario]\nname = a\nverb = fly\nfield = padic(2)\n"); }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_scenario("[scenario]\nname = a\nverb = classify\nfield = padic(4)\n"); }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_scenario("name = a\n"); }), ErrorKind::ParseError);
    try {
        parse_scenario(base + "\n[params]\nelements = 3\nbogus = 1\n");
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 8"), std::string::npos) << e.what();
    }
}

TEST(ScenarioRun, ExpectationsAndErrors) {
    ScenarioReport r = run_scenario(parse_scenario(kClassify));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.json["expectations"][0]["actual"], "ANormal, InKp");
    Scenario s = parse_scenario(kClassify);
    s.expect["verdicts"] = "ANormal, ANormal";
    EXPECT_FALSE(run_scenario(s).passed);
    s.params["elements"] = "2";
    ScenarioReport bad = run_scenario(s);
    EXPECT_FALSE(bad.passed);
    EXPECT_EQ(bad.error, std::optional<ErrorKind>(ErrorKind::NotInNabla0));
    EXPECT_EQ(bad.json["error"]["kind"], "NotInNabla0");
    s.params["elements"] = "3 +";
    EXPECT_EQ(run_scenario(s).error, std::optional<ErrorKind>(ErrorKind::ParseError));
}

TEST(ScenarioRun, DeterministicGivenSeed) {
    Scenario s = *find_builtin("theorem21b-charp-tr");
    s.params["trials"] = "50";
    std::string a = run_scenario(s).json.dump(), b = run_scenario(s).json.dump();
    EXPECT_EQ(a, b);
    s.seed = 77;
    EXPECT_TRUE(run_scenario(s).passed);
}

TEST(ScenarioRun, OtherVerbs) {
    Scenario e = parse_scenario(
        "[scenario]\nname = e\nverb = construct-extension\nfield = padic(2)\n"
        "[params]\nkummer = 5\n[expect]\nkind = Inertial\ne = 1\nf = 2\n");
    EXPECT_TRUE(run_scenario(e).passed);
    Scenario t = parse_scenario(
        "[scenario]\nname = t\nverb = construct-tower\nfield = laurent(ratfun(2;x,y))\n"
        "[params]\nkind = artin-schreier\ngenerators = t^-1, x*t^-1\n"
        "[expect]\nrank = 2\ntotal_e = 2\ntotally_ramified = false\n");
    EXPECT_TRUE(run_scenario(t).passed);
    Scenario v = parse_scenario(
        "[scenario]\nname = v\nverb = verify-suite\nfield = padic(3)\nseed = 4\n"
        "[params]\nchecks = eisenstein, cyclotomic-facts\ncount = 5\n"
        "[expect]\neisenstein = true\nfacts = true\n");
    EXPECT_TRUE(run_scenario(v).passed);
}

TEST(ScenarioSuite, BuiltinsInNameOrder) {
    auto suite = builtin_suite();
    std::vector<std::string> names;
    for (const auto& s : suite) names.push_back(s.name);
    for (const char* n : {"q2-normality", "theorem21b-charp", "lemma51-mixed", "lemma34-p3"})
        EXPECT_TRUE(find_builtin(n).has_value()) << n;
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
    ScenarioReport q = run_scenario(*find_builtin("q2-normality"));
    EXPECT_TRUE(q.passed);
    Json j = suite_json({run_scenario(*find_builtin("lemma34-p3")), q});
    EXPECT_EQ(j["reports"][0]["scenario"], "lemma34-p3");
    EXPECT_EQ(j["passed"], true);
}
