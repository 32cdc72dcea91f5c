#include "csp/algebra.hpp"
#include "csp/error.hpp"
#include "csp/oracle.hpp"

#include <map>

namespace csp::oracle {

namespace {

/// Map into the one-state graph with one loop per label.
GraphMorphism labelling(const FiniteGraph& g, const std::vector<std::size_t>& labelOf, std::size_t offset = 0) {
    GraphMorphism m;
    m.stateMap.assign(g.states, 0);
    for (auto l : labelOf) {
        m.edgeMap.push_back(offset + l);
    }
    return m;
}

FiniteGraph singleState() {
    FiniteGraph g;
    g.addState();
    return g;
}

GraphMorphism pointAt(std::size_t state) {
    return GraphMorphism{{state}, {}};
}

std::vector<InterfacePoint> pairPoints(const std::vector<InterfacePoint>& gs, const Family& gf,
                                       const std::vector<InterfacePoint>& hs, const Family& hf,
                                       const Pullback& p) {
    std::vector<InterfacePoint> out;
    const FiniteGraph w = singleState();
    for (const auto& y : hs) {
        for (const auto& x : gs) {
            auto m = mediate(p, w, pointAt(x.state), pointAt(y.state));
            if (!m) {
                throw InternalError("interface pair has no state in the pullback");
            }
            out.push_back({pairIndex(x.component, y.component, gf.size()),
                           pairValues(gf[x.component], hf[y.component], x.value, y.value), m->stateMap[0]});
        }
    }
    return out;
}

/// A passive graph as a parallel factor: one identity loop per state.
OpenGraph withIdleLoops(const OpenGraph& g) {
    OpenGraph out = g;
    for (std::size_t s = 0; s < g.graph.states; ++s) {
        out.graph.addEdge(s, s);
        out.leftOf.push_back(0);
        out.rightOf.push_back(0);
    }
    return out;
}

std::vector<InterfacePoint> movePoints(const std::vector<InterfacePoint>& points, const GraphMorphism& m) {
    std::vector<InterfacePoint> out = points;
    for (auto& p : out) {
        p.state = m.stateMap[p.state];
    }
    return out;
}

} // namespace

OpenGraph truncate(const System& g, std::uint64_t natBound) {
    OpenGraph out;
    out.left = g.left();
    out.right = g.right();
    out.topFamily = g.top();
    out.bottomFamily = g.bottom();
    out.passive = g.isPassive();
    std::map<StatePoint, std::size_t> index;
    std::vector<StatePoint> points;
    for (std::size_t c = 0; c < g.states().size(); ++c) {
        for (auto& v : enumerate(g.states()[c], natBound)) {
            index.emplace(StatePoint{c, v}, out.graph.addState());
            out.stateNames.push_back(std::to_string(c + 1) + ":" + v.str());
            points.push_back({c, std::move(v)});
        }
    }
    for (std::size_t s = 0; s < points.size(); ++s) {
        for (const auto& mv : g.successors(points[s])) {
            if (!withinBound(mv.transition.target, natBound)) {
                continue;
            }
            out.graph.addEdge(s, index.at({mv.component, mv.transition.target}));
            out.leftOf.push_back(mv.left);
            out.rightOf.push_back(mv.right);
        }
    }
    for (std::size_t i = 0; i < g.top().size(); ++i) {
        for (auto& v : enumerate(g.top()[i], natBound)) {
            const std::size_t s = index.at({g.phi()[i], v});
            out.top.push_back({i, std::move(v), s});
        }
    }
    for (std::size_t j = 0; j < g.bottom().size(); ++j) {
        for (auto& v : enumerate(g.bottom()[j], natBound)) {
            const std::size_t s = index.at({g.psi()[j], v});
            out.bottom.push_back({j, std::move(v), s});
        }
    }
    return out;
}

ParallelResult parallelOracle(const OpenGraph& gIn, const OpenGraph& hIn) {
    if (gIn.right != hIn.left) {
        throw InterfaceError("parallel oracle: shared label sets differ");
    }
    const OpenGraph g = gIn.passive && !hIn.passive ? withIdleLoops(gIn) : gIn;
    const OpenGraph h = hIn.passive && !gIn.passive ? withIdleLoops(hIn) : hIn;
    Pullback p = pullback(g.graph, labelling(g.graph, g.rightOf), h.graph, labelling(h.graph, h.leftOf));

    ParallelResult out;
    OpenGraph& r = out.graph;
    r.graph = p.apex;
    r.left = g.left;
    r.right = h.right;
    for (std::size_t e = 0; e < p.apex.edges.size(); ++e) {
        r.leftOf.push_back(g.leftOf[p.toLeft.edgeMap[e]]);
        r.rightOf.push_back(h.rightOf[p.toRight.edgeMap[e]]);
    }
    for (std::size_t s = 0; s < p.apex.states; ++s) {
        r.stateNames.push_back("(" + g.stateNames[p.toLeft.stateMap[s]] + "|" +
                               h.stateNames[p.toRight.stateMap[s]] + ")");
    }
    r.topFamily = distributeFamilies(g.topFamily, h.topFamily);
    r.bottomFamily = distributeFamilies(g.bottomFamily, h.bottomFamily);
    r.top = pairPoints(g.top, g.topFamily, h.top, h.topFamily, p);
    r.bottom = pairPoints(g.bottom, g.bottomFamily, h.bottom, h.bottomFamily, p);
    r.passive = gIn.passive && hIn.passive;
    out.toLeft = p.toLeft;
    out.toRight = p.toRight;
    return out;
}

SequentialResult sequentialOracle(const OpenGraph& g, const OpenGraph& h, bool local) {
    if (g.bottomFamily != h.topFamily || g.bottom.size() != h.top.size()) {
        throw InterfaceError("sequential oracle: bottom and top interfaces differ");
    }
    if (local && (g.left != h.left || g.right != h.right)) {
        throw InterfaceError("sequential oracle: local composite needs equal label sets");
    }
    FiniteGraph base;
    GraphMorphism toG;
    GraphMorphism toH;
    std::map<std::pair<std::size_t, Value>, std::size_t> topOfH;
    for (const auto& x : h.top) {
        topOfH.emplace(std::pair{x.component, x.value}, x.state);
    }
    for (const auto& y : g.bottom) {
        auto it = topOfH.find({y.component, y.value});
        if (it == topOfH.end()) {
            throw InterfaceError("sequential oracle: bottom point " + y.value.str() + " has no top partner");
        }
        base.addState();
        toG.stateMap.push_back(y.state);
        toH.stateMap.push_back(it->second);
    }
    Pushout p = pushout(base, g.graph, toG, h.graph, toH);

    const std::size_t leftOffset = local ? 0 : g.left.size();
    const std::size_t rightOffset = local ? 0 : g.right.size();
    auto leftLabels = mediate(p, labelling(g.graph, g.leftOf), labelling(h.graph, h.leftOf, leftOffset));
    auto rightLabels = mediate(p, labelling(g.graph, g.rightOf), labelling(h.graph, h.rightOf, rightOffset));
    if (!leftLabels || !rightLabels) {
        throw InternalError("labellings do not form a cocone");
    }

    SequentialResult out;
    OpenGraph& r = out.graph;
    r.graph = p.apex;
    r.left = local ? g.left : sumLabels(g.left, h.left);
    r.right = local ? g.right : sumLabels(g.right, h.right);
    r.leftOf = leftLabels->edgeMap;
    r.rightOf = rightLabels->edgeMap;
    r.stateNames.assign(p.apex.states, "");
    for (std::size_t s = h.graph.states; s-- > 0;) {
        r.stateNames[p.fromRight.stateMap[s]] = h.stateNames[s];
    }
    for (std::size_t s = g.graph.states; s-- > 0;) {
        r.stateNames[p.fromLeft.stateMap[s]] = g.stateNames[s];
    }
    r.topFamily = g.topFamily;
    r.bottomFamily = h.bottomFamily;
    r.top = movePoints(g.top, p.fromLeft);
    r.bottom = movePoints(h.bottom, p.fromRight);
    r.passive = local && g.passive && h.passive;
    out.fromLeft = p.fromLeft;
    out.fromRight = p.fromRight;
    return out;
}

Comparison comparisonMap(const System& g, const System& h, const System& k, const System& l,
                         std::uint64_t natBound, bool local) {
    if (g.isPassive() != h.isPassive() || g.isPassive() != k.isPassive() || g.isPassive() != l.isPassive()) {
        throw InterfaceError("comparison: the four systems must be all passive or all active");
    }
    const OpenGraph tg = truncate(g, natBound);
    const OpenGraph th = truncate(h, natBound);
    const OpenGraph tk = truncate(k, natBound);
    const OpenGraph tl = truncate(l, natBound);

    const ParallelResult top = parallelOracle(tg, th);
    const ParallelResult bottom = parallelOracle(tk, tl);
    const SequentialResult lhs = sequentialOracle(top.graph, bottom.graph, local);

    const SequentialResult leftColumn = sequentialOracle(tg, tk, local);
    const SequentialResult rightColumn = sequentialOracle(th, tl, local);
    const ParallelResult rhs = parallelOracle(leftColumn.graph, rightColumn.graph);

    const Pullback rhsCone{rhs.graph.graph, rhs.toLeft, rhs.toRight};
    auto upper = mediate(rhsCone, top.graph.graph, composeMorphisms(top.toLeft, leftColumn.fromLeft),
                         composeMorphisms(top.toRight, rightColumn.fromLeft));
    auto lower = mediate(rhsCone, bottom.graph.graph, composeMorphisms(bottom.toLeft, leftColumn.fromRight),
                         composeMorphisms(bottom.toRight, rightColumn.fromRight));
    if (!upper || !lower) {
        throw InternalError("comparison: composite legs do not form a cone over the right-hand side");
    }
    const Pushout lhsCocone{lhs.graph.graph, lhs.fromLeft, lhs.fromRight};
    auto map = mediate(lhsCocone, *upper, *lower);
    if (!map) {
        throw InternalError("comparison: the two halves disagree on the glued interface");
    }

    Comparison out;
    out.map = std::move(*map);
    out.lhs = lhs.graph;
    out.rhs = rhs.graph;

    auto injective = [](const std::vector<std::size_t>& f, std::size_t codomain) {
        std::vector<bool> hit(codomain, false);
        for (auto x : f) {
            if (hit[x]) {
                return false;
            }
            hit[x] = true;
        }
        return true;
    };
    out.injectiveOnStates = injective(out.map.stateMap, out.rhs.graph.states);
    out.injectiveOnTransitions = injective(out.map.edgeMap, out.rhs.graph.edges.size());

    out.preservesLabels = out.lhs.left == out.rhs.left && out.lhs.right == out.rhs.right;
    for (std::size_t e = 0; e < out.map.edgeMap.size() && out.preservesLabels; ++e) {
        const std::size_t img = out.map.edgeMap[e];
        out.preservesLabels =
            out.lhs.leftOf[e] == out.rhs.leftOf[img] && out.lhs.rightOf[e] == out.rhs.rightOf[img];
    }

    auto samePoints = [&](const std::vector<InterfacePoint>& a, const std::vector<InterfacePoint>& b) {
        std::map<std::pair<std::size_t, Value>, std::size_t> at;
        for (const auto& p : b) {
            at.emplace(std::pair{p.component, p.value}, p.state);
        }
        if (at.size() != a.size()) {
            return false;
        }
        for (const auto& p : a) {
            auto it = at.find({p.component, p.value});
            if (it == at.end() || it->second != out.map.stateMap[p.state]) {
                return false;
            }
        }
        return true;
    };
    out.preservesInterfaces = out.lhs.topFamily == out.rhs.topFamily &&
                              out.lhs.bottomFamily == out.rhs.bottomFamily &&
                              samePoints(out.lhs.top, out.rhs.top) && samePoints(out.lhs.bottom, out.rhs.bottom);

    const bool onto = out.map.stateMap.size() == out.rhs.graph.states &&
                      out.map.edgeMap.size() == out.rhs.graph.edges.size();
    out.verdict = out.injectiveOnStates && out.injectiveOnTransitions && onto ? Verdict::Iso
                                                                               : Verdict::StrictlyLax;
    return out;
}

} // namespace csp::oracle
