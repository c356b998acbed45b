#include "oracles.hpp"

#include "ncparam/cli.hpp"
#include "ncparam/error.hpp"
#include "ncparam/integrand.hpp"
#include "ncparam/report.hpp"
#include "ncparam/routing.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace ncparam;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string file(const std::string& name) {
    return oracle::testdata(name + ".graph");
}

std::string parse_error(std::string_view text) {
    try {
        read_graph_file(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("parse_graph_file examples") {
    const std::string bubble = "vertex v1: h1 h2 h3 h4\n"
                               "vertex v2: h1 h2 h3 h4\n"
                               "edge e1: v1.h1 v2.h2\n"
                               "edge e2: v1.h2 v2.h1\n"
                               "ext x1: v1.h3\n"
                               "ext x2: v1.h4\n"
                               "ext x3: v2.h3\n"
                               "ext x4: v2.h4\n";
    const ParsedGraph parsed = parse_graph_file(bubble, "bubble");
    CHECK(topology(parsed.graph).summary == topology(oracle::load("B1").graph).summary);
    CHECK_FALSE(parsed.params.theta);
    CHECK_FALSE(parsed.params.a);
    CHECK_FALSE(parsed.params.m_sq);
    CHECK(parsed.params.D == 4);

    const GraphFile numeric = read_graph_file(slurp(file("T1_numeric")));
    CHECK(*numeric.params.theta == 1);
    CHECK(*numeric.params.a == Rational(3, 16));
    CHECK(*numeric.params.m_sq == 1);

    const GraphFile partial = read_graph_file("vertex v: a b c d\nedge e: v.a v.b\next x: v.c\next y: v.d\n"
                                              "param theta=sym a=1/8 D=6 # comment\n");
    CHECK_FALSE(partial.params.theta);
    CHECK(*partial.params.a == Rational(1, 8));
    CHECK(partial.params.D == 6);
}

TEST_CASE("vacuum graphs have no broken face") {
    const ParsedGraph vacuum = parse_graph_file("vertex v1: a b c d\nedge e1: v1.a v1.b\nedge e2: v1.c v1.d\n");
    const TopologySummary s = topology(vacuum.graph).summary;
    CHECK(s.N == 0);
    CHECK(s.B == 0);
    CHECK(s.F == 3);
    const AmplitudeExpansion ex = expand_amplitude(vacuum.graph, vacuum.params);
    CHECK(ex.terms.size() == 4);
    CHECK(ex.terms[0].first.to_string() == "a1*a2");
    CHECK(ex.terms[0].second.is_zero());
    CHECK(power_counting(ex, true).omega == -2);
}

TEST_CASE("parse errors carry line and column") {
    CHECK(parse_error("") == "1:1: no vertices");
    CHECK(parse_error("vertex v1 h1 h2\n").rfind("1:11:", 0) == 0);
    CHECK(parse_error("vertex v1: h1 h2\nfoo bar\n").rfind("2:1:", 0) == 0);
    CHECK(parse_error("vertex v1: h1 h2\nedge e1: v1h1 v1.h2\n").rfind("2:14:", 0) == 0);
    CHECK(parse_error("vertex v1: h1 h2\nparam theta=1/0\n").rfind("2:", 0) == 0);
    CHECK(parse_error("vertex v1: h1 h2\nparam theta=1 theta=2\n").rfind("2:", 0) == 0);
    CHECK(parse_error("vertex v1: h1 h2\nparam q=1\n").rfind("2:", 0) == 0);
    CHECK_THROWS_AS(parse_graph_file(slurp(file("invalid/unknown_halfedge"))), GraphError);
    CHECK_THROWS_AS(parse_graph_file(slurp(file("invalid/degree3"))), GraphError);
    CHECK_THROWS_AS(parse_graph_file(slurp(file("invalid/constraint"))), ConstraintError);
}

TEST_CASE("print then parse is the identity on the corpus") {
    for (const auto& c : oracle::corpus()) {
        CAPTURE(c.name);
        const std::string printed = print_graph_file(c.graph.description(), c.params);
        const GraphFile again = read_graph_file(printed, c.name);
        CHECK(print_graph_file(again.description, again.params) == printed);
        const RibbonGraph g = RibbonGraph::build(again.description);
        CHECK(topology(g).summary == topology(c.graph).summary);
        CHECK(g.description().lines.size() == c.graph.description().lines.size());
        CHECK(again.params.D == c.params.D);
        CHECK(again.params.theta == c.params.theta);
        CHECK(again.params.a == c.params.a);
        CHECK(again.params.m_sq == c.params.m_sq);
    }
}

TEST_CASE("JSON report examples") {
    SUBCASE("tadpole") {
        const Run r = run({"analyze", file("T1")});
        REQUIRE(r.code == ExitOk);
        const Json j = Json::parse(r.out);
        CHECK(j["graph"] == "T1");
        CHECK(j["commutative"]["U"] == "a1");
        CHECK(j["commutative"]["V"] == "0");
        REQUIRE(j["terms"].size() == 2);
        CHECK(j["terms"][1]["Utheta"] == "a1+a1_1+a1_2");
        CHECK(j["terms"][1]["prefactorPower"] == 1);
        CHECK(j["terms"][1]["sign"] == -1);
        CHECK(j["terms"][1]["subset"] == Json::array({1}));
        CHECK(j["prefactor"]["L"] == 1);
        CHECK(j["prefactor"]["D"] == 4);
        CHECK(j["parameters"]["theta"].is_null());
    }
    SUBCASE("non-planar sunset") {
        const Json j = Json::parse(run({"analyze", file("NP")}).out);
        CHECK(j["terms"][0]["Utheta"] == "a1*a2+a1*a3+a2*a3+1/4*theta^2");
        CHECK(j["terms"].size() == 8);
        CHECK(j["topology"]["g"] == 1);
        CHECK(j["powerCounting"]["omega"] == 3);
        CHECK(j["powerCounting"]["closedFormOmega"] == 3);
        CHECK(j["powerCounting"]["uvDivergent"] == false);
    }
    SUBCASE("field order") {
        const Json j = Json::parse(run({"analyze", file("B1")}).out);
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items())
            keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"graph", "topology", "parameters", "commutative", "terms",
                                               "powerCounting", "prefactor"});
    }
    SUBCASE("numeric parameters") {
        const Json j = Json::parse(run({"analyze", file("T1_numeric")}).out);
        CHECK(j["parameters"]["a"] == "3/16");
        CHECK(j["parameters"]["D"] == 4);
    }
}

TEST_CASE("reports are byte-identical across runs") {
    for (const auto& c : oracle::corpus()) {
        CAPTURE(c.name);
        for (const char* format : {"json", "text"}) {
            const Run a = run({"analyze", file(c.name), "--format", format});
            const Run b = run({"analyze", file(c.name), "--format", format});
            CHECK(a.code == ExitOk);
            CHECK(a.out == b.out);
        }
        ExpandOptions serial;
        serial.parallel = false;
        const AmplitudeExpansion ex = expand_amplitude(c.graph, c.params, serial);
        CHECK(emit_report(ex, power_counting(ex, true), ReportFormat::Json) == run({"analyze", file(c.name)}).out);
    }
}

TEST_CASE("text report layout") {
    const Run r = run({"analyze", file("B2"), "--format", "text"});
    REQUIRE(r.code == ExitOk);
    CHECK(r.out.find("planar irregular") != std::string::npos);
    CHECK(r.out.find("A = pi^(2*4/2) * sum over 4 terms") != std::string::npos);
    CHECK(r.out.find("term S={}") < r.out.find("corrections:"));
    CHECK(r.out.find("term S={1,2}") != std::string::npos);
    CHECK(run({"analyze", file("NP"), "--format", "text"}).out.find("non-planar") != std::string::npos);
}

TEST_CASE("the tree flag does not change the report") {
    const std::string reference = run({"analyze", file("NP")}).out;
    for (const char* tree : {"e1", "e2", "e3"})
        CHECK(run({"analyze", file("NP"), "--tree", tree}).out == reference);
    CHECK(run({"analyze", file("chain"), "--tree", "e1,e3"}).code == ExitOk);
    CHECK(run({"analyze", file("NP"), "--tree", "e9"}).code == ExitParse);
    CHECK(run({"analyze", file("NP"), "--tree", "e1,e2"}).code == ExitParse);
}

TEST_CASE("eval examples") {
    auto value = [](std::vector<std::string> args) {
        const Run r = run(std::move(args));
        REQUIRE(r.code == ExitOk);
        return std::stod(r.out);
    };
    CHECK(value({"eval", file("T1"), "--term", "0", "--point", "a1=1,msq=1"}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(value({"eval", file("B1"), "--term", "0", "--point", "a1=1,a2=1,msq=1,s_1_1=0,s_1_2=0,s_2_2=0"}) ==
          doctest::Approx(0.25 * std::exp(-2.0)).epsilon(1e-15));
    CHECK(value({"eval", file("NP"), "--term", "0", "--point", "a1=1,a2=1,a3=1,theta=1,msq=1,s_1_1=0"}) ==
          doctest::Approx(std::pow(3.25, -2.0) * std::exp(-3.0)).epsilon(1e-15));
    // (3/16) / 3^2 e^-(1 + 1/4 + 3/4), negative.
    CHECK(value({"eval", file("T1_numeric"), "--term", "1", "--point", "a1=1,a1_1=1,a1_2=1"}) ==
          doctest::Approx(-(3.0 / 16.0) / 9.0 * std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("eval_integrand errors") {
    const auto c = oracle::load("T1");
    const AmplitudeExpansion ex = expand_amplitude(c.graph, c.params);
    CHECK_THROWS_AS(eval_integrand(ex, 0, {{"a1", -1.0}, {"msq", 1.0}}), ConstraintError);
    CHECK_THROWS_AS(eval_integrand(ex, 1, {{"a1", 1.0}, {"a1_1", 1.0}, {"a1_2", 1.0}, {"msq", 1.0}, {"theta", 1.0}, {"a", 1.0}}),
                    ConstraintError);
    CHECK_THROWS_AS(eval_integrand(ex, 0, {{"a1", 1.0}, {"msq", 1.0}, {"m1sq", 1.0}}), Error);
    CHECK_THROWS_AS(eval_integrand(ex, 0, {{"a1", 1.0}, {"msq", 1.0}, {"bogus", 1.0}}), Error);
    CHECK_THROWS_AS(eval_integrand(ex, 0, {{"msq", 1.0}}), Error);
    CHECK_THROWS_AS(parse_point("a1=1,,"), ParseError);
    CHECK_THROWS_AS(parse_point("a1"), ParseError);
    CHECK(parse_point("a1=0.5,s_1_1=2") == NumericPoint{{"a1", 0.5}, {"s_1_1", 2.0}});
}

TEST_CASE("theta -> 0 approaches the commutative integrand") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> positive(0.2, 2.0);
    std::uniform_real_distribution<double> component(-1.0, 1.0);
    for (const auto& c : oracle::corpus()) {
        CAPTURE(c.name);
        ModelParameters params = c.params;
        params.theta.reset();
        const AmplitudeExpansion ex = expand_amplitude(c.graph, params);
        NumericPoint point{{"msq", 1.0}, {"a", 0.1}};
        for (int l = 1; l <= ex.L; ++l)
            point["a" + std::to_string(l)] = positive(rng);
        const int momenta = ex.registry->momenta();
        std::vector<Eigen::Vector4d> p;
        for (int e = 0; e < momenta; ++e)
            p.push_back(Eigen::Vector4d(component(rng), component(rng), component(rng), component(rng)));
        for (int e = 0; e < momenta; ++e)
            for (int f = e; f < momenta; ++f)
                point["s_" + std::to_string(e + 1) + "_" + std::to_string(f + 1)] = p[static_cast<std::size_t>(e)].dot(p[static_cast<std::size_t>(f)]);
        const double commutative = eval_commutative_integrand(ex, point);
        double error = 0;
        for (int k = 1; k <= 6; ++k) {
            point["theta"] = std::pow(10.0, -k);
            error = std::abs(eval_integrand(ex, 0, point) - commutative) / std::abs(commutative);
        }
        CHECK(error <= 1e-4);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == ExitUsage);
    CHECK(run({"analyze"}).code == ExitUsage);
    CHECK(run({"frobnicate"}).code == ExitUsage);
    CHECK(run({"analyze", file("missing")}).code == ExitUsage);
    CHECK(run({"analyze", file("T1"), "--format", "xml"}).code == ExitUsage);
    const Run empty = run({"analyze", file("invalid/empty")});
    CHECK(empty.code == ExitParse);
    CHECK(empty.err.find("1:1: no vertices") != std::string::npos);
    const Run syntax = run({"analyze", file("invalid/syntax")});
    CHECK(syntax.code == ExitParse);
    CHECK(syntax.err.find("2:9:") != std::string::npos);
    CHECK(run({"analyze", file("invalid/unknown_halfedge")}).code == ExitParse);
    CHECK(run({"analyze", file("invalid/degree3")}).code == ExitParse);
    CHECK(run({"analyze", file("invalid/degree3"), "--any-degree"}).code == ExitOk);
    CHECK(run({"analyze", file("invalid/constraint")}).code == ExitConstraint);
    CHECK(run({"analyze", file("T1"), "--D", "3"}).code == ExitConstraint);
    CHECK(run({"analyze", file("T1"), "--D", "6"}).code == ExitOk);
    CHECK(run({"eval", file("T1"), "--term", "0"}).code == ExitUsage);
    CHECK(run({"eval", file("T1"), "--term", "7", "--point", "a1=1,msq=1"}).code == ExitUsage);
    CHECK(run({"eval", file("T1"), "--term", "0", "--point", "a1=-1,msq=1"}).code == ExitConstraint);
    CHECK(run({"eval", file("T1"), "--term", "0", "--point", "a1=1=2"}).code == ExitParse);
}
