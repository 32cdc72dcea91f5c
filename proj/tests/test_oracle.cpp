#include "doctest.h"
#include "generators.hpp"

#include "csp/error.hpp"
#include "csp/oracle.hpp"

using namespace csp;
using namespace csp::oracle;

namespace {

FiniteGraph graph(std::size_t states, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    FiniteGraph g;
    g.states = states;
    g.edges = std::move(edges);
    return g;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("morphisms") {
    const FiniteGraph loop = graph(1, {{0, 0}});
    const FiniteGraph path = graph(2, {{0, 1}});
    const GraphMorphism collapse{{0, 0}, {0}};
    CHECK(isMorphism(collapse, path, loop));
    CHECK_FALSE(isMorphism(GraphMorphism{{0}, {0}}, loop, path));
    CHECK(composeMorphisms(identityMorphism(path), collapse) == collapse);
}

TEST_CASE("pushout of two paths along a point") {
    const FiniteGraph point = graph(1, {});
    const FiniteGraph path = graph(2, {{0, 1}});
    const Pushout p = pushout(point, path, GraphMorphism{{1}, {}}, path, GraphMorphism{{0}, {}});
    CHECK(p.apex.states == 3);
    CHECK(p.apex.edges.size() == 2);
    CHECK(isMorphism(p.fromLeft, path, p.apex));
    CHECK(isMorphism(p.fromRight, path, p.apex));
    CHECK(p.fromLeft.stateMap[1] == p.fromRight.stateMap[0]);
    const FiniteGraph loop = graph(1, {{0, 0}});
    const GraphMorphism toLoop{{0, 0}, {0}};
    const auto m = mediate(p, toLoop, toLoop);
    REQUIRE(m);
    CHECK(isMorphism(*m, p.apex, loop));
    const FiniteGraph two = graph(2, {{0, 0}, {1, 1}});
    CHECK_FALSE(mediate(p, GraphMorphism{{0, 0}, {0}}, GraphMorphism{{1, 1}, {1}}));
    (void)two;
}

TEST_CASE("pushout identifies transitively") {
    const FiniteGraph base = graph(2, {});
    const FiniteGraph g = graph(1, {});
    const FiniteGraph h = graph(2, {{0, 1}});
    const Pushout p = pushout(base, g, GraphMorphism{{0, 0}, {}}, h, GraphMorphism{{0, 1}, {}});
    CHECK(p.apex.states == 1);
    CHECK(p.apex.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
}

TEST_CASE("pullback pairs agreeing edges") {
    const FiniteGraph labels = graph(1, {{0, 0}, {0, 0}});
    const FiniteGraph g = graph(2, {{0, 1}, {1, 0}, {1, 1}});
    const FiniteGraph h = graph(1, {{0, 0}, {0, 0}});
    const Pullback p = pullback(g, GraphMorphism{{0, 0}, {0, 0, 1}}, h, GraphMorphism{{0}, {0, 1}});
    CHECK(p.apex.states == 2);
    CHECK(p.apex.edges.size() == 3);
    CHECK(isMorphism(p.toLeft, p.apex, g));
    CHECK(isMorphism(p.toRight, p.apex, h));
    const auto w = mediate(p, p.apex, p.toLeft, p.toRight);
    REQUIRE(w);
    CHECK(*w == identityMorphism(p.apex));
    (void)labels;
}

TEST_CASE("cospan and span composites") {
    const FiniteGraph point = graph(1, {});
    const FiniteGraph path = graph(2, {{0, 1}});
    const Cospan c{point, path, point, {{0}, {}}, {{1}, {}}};
    const Cospan twice = pushoutCospan(c, c);
    CHECK(twice.apex.states == 3);
    CHECK(twice.apex.edges.size() == 2);
    const GraphSpan s{point, point, point, {{0}, {}}, {{0}, {}}};
    CHECK(pullbackSpan(s, s).apex.states == 1);
}

TEST_CASE("graph isomorphism") {
    const FiniteGraph a = graph(3, {{0, 1}, {1, 2}, {2, 0}});
    const FiniteGraph b = graph(3, {{2, 1}, {1, 0}, {0, 2}});
    const auto iso = graphIso(a, b);
    REQUIRE(iso);
    for (std::size_t e = 0; e < a.edges.size(); ++e) {
        const auto [s, t] = a.edges[e];
        CHECK(b.edges[iso->edgeMap[e]] == std::pair{iso->stateMap[s], iso->stateMap[t]});
    }
    CHECK_FALSE(graphIso(a, graph(3, {{0, 1}, {1, 2}, {2, 2}})));
    CHECK_FALSE(graphIso(a, graph(3, {{0, 1}, {1, 2}})));
    CHECK_THROWS_AS(graphIso(graph(20, {}), graph(20, {})), SizeError);
    CHECK(graphIso(graph(20, {}), graph(20, {}), 20));
}

TEST_CASE("isomorphism respects labels and interface points") {
    const System g = testing::unitLoop(1, 0);
    const System h = testing::unitLoop(0, 1);
    CHECK(graphIso(truncate(g, 0).graph, truncate(h, 0).graph));
    CHECK_FALSE(graphIso(truncate(g, 0), truncate(h, 0)));
    CHECK(graphIso(truncate(g, 0), truncate(g, 0)));
}

TEST_CASE("truncation") {
    const System pred = basicSystem("pred");
    const OpenGraph t = truncate(pred, 3);
    CHECK(t.graph.states == 4 + 4 + 1);
    CHECK(t.graph.edges.size() == 4);
    CHECK(t.top.size() == 4);
    CHECK(t.bottom.size() == 5);
    const OpenGraph s = truncate(basicSystem("succ"), 3);
    CHECK(s.graph.edges.size() == 3);
    CHECK(t.stateNames.size() == t.graph.states);
}

TEST_CASE("comparison map on random quadruples") {
    testing::Rng rng(41);
    testing::Limits limits;
    limits.maxComponents = 3;
    limits.maxTransitions = 4;
    for (int round = 0; round < 40; ++round) {
        const bool local = round % 2 == 1;
        const auto q = testing::randomQuadruple(rng, limits, local);
        const Comparison c = comparisonMap(q.g, q.h, q.k, q.l, 1, local);
        CHECK(isMorphism(c.map, c.lhs.graph, c.rhs.graph));
        CHECK(c.injectiveOnTransitions);
        CHECK(c.preservesLabels);
        CHECK(c.preservesInterfaces);
        if (!local) {
            CHECK(c.lhs.graph.edges.size() == c.rhs.graph.edges.size());
        }
        if (c.verdict == Verdict::Iso) {
            CHECK(c.injectiveOnStates);
            CHECK(c.lhs.graph.states == c.rhs.graph.states);
            CHECK(c.lhs.graph.edges.size() == c.rhs.graph.edges.size());
        }
    }
}

TEST_CASE("states glued in one column stay apart on the left") {
    // K has two top points on one state; L has a state outside its interface.
    const Space one = Space::unit();
    const LabelSet triv{kTrivialLabel};
    const System g(triv, triv, {}, {one, one}, {one}, {}, {0, 0},
                   {{SpanKey{0, 0, 0, 0}, Span::finite(one, one, {{"g", Value::star(), Value::star()}})}});
    const System h = testing::unitLoop(0, 1);
    const System k(triv, triv, {one, one}, {}, {one, one}, {0, 1}, {},
                   {{SpanKey{0, 0, 0, 1}, Span::finite(one, one, {{"k", Value::star(), Value::star()}})}});
    const System l(triv, triv, {one}, {}, {one, one}, {0}, {},
                   {{SpanKey{0, 0, 0, 1}, Span::finite(one, one, {{"l", Value::star(), Value::star()}})}});
    const Comparison c = comparisonMap(g, h, k, l, 0);
    CHECK_FALSE(c.injectiveOnStates);
    CHECK(c.injectiveOnTransitions);
    CHECK(c.verdict == Verdict::StrictlyLax);
}

TEST_CASE("strictly lax witnesses") {
    const System top = testing::unitLoop(0, 1);
    const System bottom = testing::unitLoop(1, 0);
    const Comparison local = comparisonMap(top, top, bottom, bottom, 0, true);
    CHECK(local.verdict == Verdict::StrictlyLax);
    CHECK(local.lhs.graph.states == 1);
    CHECK(local.rhs.graph.states == 1);
    CHECK(local.lhs.graph.edges.size() == 2);
    CHECK(local.rhs.graph.edges.size() == 4);
    CHECK(local.injectiveOnTransitions);

    const System source = testing::unitLoop(0, 0);
    const Comparison split = comparisonMap(source, source, source, source, 0, false);
    CHECK(split.verdict == Verdict::StrictlyLax);
    CHECK(split.lhs.graph.states == 2);
    CHECK(split.rhs.graph.states == 4);
    CHECK(split.lhs.graph.edges.size() == split.rhs.graph.edges.size());

    CHECK_THROWS_AS(comparisonMap(source, source, source, constantSystem(ConstantKind::Ident, Space::unit()), 0),
                    InterfaceError);
}

}
