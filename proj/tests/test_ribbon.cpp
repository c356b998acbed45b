#include "oracles.hpp"

#include "ncparam/error.hpp"
#include "ncparam/routing.hpp"

#include <doctest.h>

using namespace ncparam;

namespace {

std::vector<int> positions(const Rosette& r, int line) {
    std::vector<int> out;
    for (std::size_t i = 0; i < r.word.size(); ++i)
        if (r.word[i].kind == RibbonGraph::Slot::Line && r.word[i].id == line)
            out.push_back(static_cast<int>(i));
    return out;
}

bool interleaved(const Rosette& r, int j, int k) {
    const auto pj = positions(r, j);
    const auto pk = positions(r, k);
    const bool first_inside = pk[0] > pj[0] && pk[0] < pj[1];
    const bool second_inside = pk[1] > pj[0] && pk[1] < pj[1];
    return first_inside != second_inside;
}

GraphDescription relabel(const GraphDescription& d, std::mt19937& rng) {
    GraphDescription out = d;
    std::shuffle(out.vertices.begin(), out.vertices.end(), rng);
    std::map<std::string, std::string> vertex_names;
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        vertex_names[out.vertices[i].id] = "w" + std::to_string(i);
        out.vertices[i].id = "w" + std::to_string(i);
        // Rotating a cycle keeps the cyclic order.
        auto& hs = out.vertices[i].half_edges;
        std::rotate(hs.begin(), hs.begin() + static_cast<long>(i % hs.size()), hs.end());
    }
    for (auto& l : out.lines) {
        l.tail.vertex = vertex_names.at(l.tail.vertex);
        l.head.vertex = vertex_names.at(l.head.vertex);
    }
    for (auto& x : out.externals)
        x.at.vertex = vertex_names.at(x.at.vertex);
    std::shuffle(out.lines.begin(), out.lines.end(), rng);
    return out;
}

} // namespace

TEST_CASE("build_graph examples") {
    const auto t1 = oracle::load("T1");
    CHECK(t1.graph.vertex_count() == 1);
    CHECK(t1.graph.line_count() == 1);
    CHECK(t1.graph.external_count() == 2);
    CHECK(t1.graph.is_self_loop(0));

    const auto t2 = oracle::load("T2");
    CHECK(t2.graph.line_count() == 1);

    GraphDescription three;
    three.vertices.push_back({"v1", {"h1", "h2", "h3"}});
    three.lines.push_back({"e1", {"v1", "h1"}, {"v1", "h2"}});
    three.externals.push_back({"x1", {"v1", "h3"}});
    CHECK_THROWS_AS(RibbonGraph::build(three), GraphError);
    CHECK_NOTHROW(RibbonGraph::build(three, {true}));
}

TEST_CASE("build_graph rejects malformed maps") {
    GraphDescription base;
    base.vertices.push_back({"v1", {"h1", "h2", "h3", "h4"}});
    base.lines.push_back({"e1", {"v1", "h1"}, {"v1", "h2"}});
    base.externals.push_back({"x1", {"v1", "h3"}});
    base.externals.push_back({"x2", {"v1", "h4"}});
    CHECK_NOTHROW(RibbonGraph::build(base));

    SUBCASE("dangling half-edge") {
        auto d = base;
        d.externals.pop_back();
        CHECK_THROWS_AS(RibbonGraph::build(d), GraphError);
    }
    SUBCASE("half-edge used twice") {
        auto d = base;
        d.externals[1].at.label = "h1";
        CHECK_THROWS_AS(RibbonGraph::build(d), GraphError);
    }
    SUBCASE("unknown half-edge") {
        auto d = base;
        d.lines[0].tail.label = "h9";
        CHECK_THROWS_AS(RibbonGraph::build(d), GraphError);
    }
    SUBCASE("duplicate pairing id") {
        auto d = base;
        d.externals[1].id = "e1";
        CHECK_THROWS_AS(RibbonGraph::build(d), GraphError);
    }
    SUBCASE("disconnected") {
        auto d = base;
        d.vertices.push_back({"v2", {"h1", "h2", "h3", "h4"}});
        d.lines.push_back({"e2", {"v2", "h1"}, {"v2", "h2"}});
        d.lines.push_back({"e3", {"v2", "h3"}, {"v2", "h4"}});
        CHECK_THROWS_AS(RibbonGraph::build(d), GraphError);
    }
    SUBCASE("no vertices") {
        CHECK_THROWS_AS(RibbonGraph::build(GraphDescription{}), GraphError);
    }
}

TEST_CASE("topology examples") {
    const TopologySummary t1 = topology(oracle::load("T1").graph).summary;
    CHECK(t1.F == 2);
    CHECK(t1.g == 0);
    CHECK(t1.B == 1);

    const TopologySummary t2 = topology(oracle::load("T2").graph).summary;
    CHECK(t2.g == 0);
    CHECK(t2.B == 2);

    const TopologySummary b1 = topology(oracle::load("B1").graph).summary;
    CHECK(b1.F == 2);
    CHECK(b1.g == 0);
    CHECK(b1.B == 1);
    CHECK(b1.N == 4);

    const TopologySummary b2 = topology(oracle::load("B2").graph).summary;
    CHECK(b2.g == 0);
    CHECK(b2.B == 2);

    const TopologySummary np = topology(oracle::load("NP").graph).summary;
    CHECK(np.F == 1);
    CHECK(np.g == 1);
    CHECK(np.B == 1);

    const TopologySummary chain = topology(oracle::load("chain").graph).summary;
    CHECK(chain.g == 0);
    CHECK(chain.B == 3);
}

TEST_CASE("faces partition the line sides and broken faces carry the legs") {
    for (const auto& c : oracle::corpus()) {
        CAPTURE(c.name);
        const Topology t = topology(c.graph);
        std::vector<int> sides;
        std::vector<int> legs;
        for (const auto& f : t.faces) {
            sides.insert(sides.end(), f.sides.begin(), f.sides.end());
            legs.insert(legs.end(), f.externals.begin(), f.externals.end());
        }
        std::sort(sides.begin(), sides.end());
        std::sort(legs.begin(), legs.end());
        CHECK(static_cast<int>(sides.size()) == 2 * c.graph.line_count());
        CHECK(std::adjacent_find(sides.begin(), sides.end()) == sides.end());
        std::vector<int> all_legs(static_cast<std::size_t>(c.graph.external_count()));
        std::iota(all_legs.begin(), all_legs.end(), 0);
        CHECK(legs == all_legs);
        CHECK(t.summary.B >= 1);
        CHECK(t.summary.B <= t.summary.F);
    }
}

TEST_CASE("Euler identity on the corpus and on random maps") {
    for (const auto& c : oracle::corpus()) {
        const TopologySummary s = topology(c.graph).summary;
        CHECK(2 - 2 * s.g == s.n - s.L + s.F);
    }
    oracle::RandomGraphs gen(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = gen.uniform(1, 5);
        const int N = 2 * gen.uniform(1, 3);
        const RibbonGraph g = RibbonGraph::build(gen.quartic(n, N));
        const TopologySummary s = topology(g).summary;
        CHECK(s.g >= 0);
        CHECK(2 - 2 * s.g == s.n - s.L + s.F);
        CHECK(s.L == 2 * s.n - s.N / 2);
    }
}

TEST_CASE("topology is invariant under relabeling") {
    std::mt19937 rng(22);
    for (const auto& c : oracle::corpus()) {
        CAPTURE(c.name);
        const TopologySummary s = topology(c.graph).summary;
        for (int k = 0; k < 3; ++k)
            CHECK(topology(RibbonGraph::build(relabel(c.graph.description(), rng))).summary == s);
    }
    oracle::RandomGraphs gen(23);
    for (int trial = 0; trial < 20; ++trial) {
        const GraphDescription d = gen.quartic(gen.uniform(2, 4), 2);
        const TopologySummary s = topology(RibbonGraph::build(d)).summary;
        CHECK(topology(RibbonGraph::build(relabel(d, rng))).summary == s);
    }
}

TEST_CASE("contract_to_rosette examples") {
    SUBCASE("bubble, tree {e1}") {
        const auto b1 = oracle::load("B1");
        const Rosette r = contract_to_rosette(b1.graph, {{0}});
        CHECK(r.loop_lines == std::vector<int>{1});
        const auto pos = positions(r, 1);
        REQUIRE(pos.size() == 2);
        int inside = 0;
        for (std::size_t i = 0; i < r.word.size(); ++i)
            if (r.word[i].kind == RibbonGraph::Slot::External && static_cast<int>(i) > pos[0] &&
                static_cast<int>(i) < pos[1])
                ++inside;
        CHECK((inside == 0 || inside == 4));
    }
    SUBCASE("non-planar sunset, tree {e3}") {
        const auto np = oracle::load("NP");
        const Rosette r = contract_to_rosette(np.graph, {{2}});
        CHECK(r.loop_lines == std::vector<int>{0, 1});
        CHECK(interleaved(r, 0, 1));
    }
    SUBCASE("planar sunset chords do not cross") {
        const auto s = oracle::load("sunset");
        const Rosette r = contract_to_rosette(s.graph, {{2}});
        CHECK_FALSE(interleaved(r, 0, 1));
    }
    SUBCASE("tadpole, empty tree") {
        const auto t1 = oracle::load("T1");
        const Rosette r = contract_to_rosette(t1.graph, {});
        REQUIRE(r.word.size() == 4);
        const auto& cycle = t1.graph.vertices()[0].cycle;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& he = t1.graph.half_edges()[static_cast<std::size_t>(cycle[i])];
            CHECK(r.word[i].id == he.owner);
            CHECK((r.word[i].kind == he.kind));
        }
    }
    SUBCASE("invalid trees") {
        const auto np = oracle::load("NP");
        CHECK_THROWS_AS(contract_to_rosette(np.graph, {{0, 1}}), GraphError);
        CHECK_THROWS_AS(contract_to_rosette(np.graph, {}), GraphError);
        CHECK_THROWS_AS(contract_to_rosette(np.graph, {{7}}), GraphError);
    }
}

TEST_CASE("rosette word length and preserved genus for every tree") {
    auto check = [](const RibbonGraph& g) {
        const TopologySummary s = topology(g).summary;
        for (const auto& tree : spanning_trees(g)) {
            const Rosette r = contract_to_rosette(g, tree);
            CHECK(static_cast<int>(r.word.size()) == 2 * (s.L - (s.n - 1)) + s.N);
            const TopologySummary rs = topology(rosette_graph(g, r)).summary;
            CHECK(rs.g == s.g);
            CHECK(rs.B == s.B);
            CHECK(rs.n == 1);
        }
    };
    for (const auto& c : oracle::corpus()) {
        CAPTURE(c.name);
        check(c.graph);
    }
    oracle::RandomGraphs gen(24);
    for (int trial = 0; trial < 30; ++trial)
        check(RibbonGraph::build(gen.quartic(gen.uniform(1, 4), 2 * gen.uniform(1, 2))));
}
