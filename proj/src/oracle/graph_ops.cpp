#include "csp/error.hpp"
#include "csp/oracle.hpp"

#include <map>
#include <numeric>

namespace csp::oracle {

bool isMorphism(const GraphMorphism& f, const FiniteGraph& from, const FiniteGraph& to) {
    if (f.stateMap.size() != from.states || f.edgeMap.size() != from.edges.size()) {
        return false;
    }
    for (auto s : f.stateMap) {
        if (s >= to.states) {
            return false;
        }
    }
    for (std::size_t e = 0; e < from.edges.size(); ++e) {
        const std::size_t img = f.edgeMap[e];
        if (img >= to.edges.size()) {
            return false;
        }
        if (to.edges[img].first != f.stateMap[from.edges[e].first] ||
            to.edges[img].second != f.stateMap[from.edges[e].second]) {
            return false;
        }
    }
    return true;
}

GraphMorphism composeMorphisms(const GraphMorphism& first, const GraphMorphism& second) {
    GraphMorphism out;
    for (auto s : first.stateMap) {
        out.stateMap.push_back(second.stateMap.at(s));
    }
    for (auto e : first.edgeMap) {
        out.edgeMap.push_back(second.edgeMap.at(e));
    }
    return out;
}

GraphMorphism identityMorphism(const FiniteGraph& g) {
    GraphMorphism out;
    out.stateMap.resize(g.states);
    out.edgeMap.resize(g.edges.size());
    std::iota(out.stateMap.begin(), out.stateMap.end(), std::size_t{0});
    std::iota(out.edgeMap.begin(), out.edgeMap.end(), std::size_t{0});
    return out;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }
    /// Class number of every element, classes numbered by first occurrence.
    std::vector<std::size_t> classes(std::size_t& count) {
        std::vector<std::size_t> number(parent_.size(), parent_.size());
        std::vector<std::size_t> out(parent_.size());
        count = 0;
        for (std::size_t x = 0; x < parent_.size(); ++x) {
            const std::size_t r = find(x);
            if (number[r] == parent_.size()) {
                number[r] = count++;
            }
            out[x] = number[r];
        }
        return out;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

Pushout pushout(const FiniteGraph& base, const FiniteGraph& g, const GraphMorphism& f,
                const FiniteGraph& h, const GraphMorphism& k) {
    if (!isMorphism(f, base, g) || !isMorphism(k, base, h)) {
        throw InterfaceError("pushout: legs are not graph morphisms from the base");
    }
    const std::size_t gs = g.states;
    const std::size_t ge = g.edges.size();
    UnionFind states(gs + h.states);
    UnionFind edges(ge + h.edges.size());
    for (std::size_t x = 0; x < base.states; ++x) {
        states.unite(f.stateMap[x], gs + k.stateMap[x]);
    }
    for (std::size_t e = 0; e < base.edges.size(); ++e) {
        edges.unite(f.edgeMap[e], ge + k.edgeMap[e]);
    }
    std::size_t stateCount = 0;
    std::size_t edgeCount = 0;
    const auto stateClass = states.classes(stateCount);
    const auto edgeClass = edges.classes(edgeCount);

    Pushout out;
    out.apex.states = stateCount;
    out.apex.edges.assign(edgeCount, {0, 0});
    for (std::size_t e = 0; e < ge + h.edges.size(); ++e) {
        const auto& [s, t] = e < ge ? g.edges[e] : h.edges[e - ge];
        const std::size_t off = e < ge ? 0 : gs;
        out.apex.edges[edgeClass[e]] = {stateClass[off + s], stateClass[off + t]};
    }
    out.fromLeft.stateMap.assign(stateClass.begin(), stateClass.begin() + static_cast<std::ptrdiff_t>(gs));
    out.fromRight.stateMap.assign(stateClass.begin() + static_cast<std::ptrdiff_t>(gs), stateClass.end());
    out.fromLeft.edgeMap.assign(edgeClass.begin(), edgeClass.begin() + static_cast<std::ptrdiff_t>(ge));
    out.fromRight.edgeMap.assign(edgeClass.begin() + static_cast<std::ptrdiff_t>(ge), edgeClass.end());
    return out;
}

std::optional<GraphMorphism> mediate(const Pushout& p, const GraphMorphism& u, const GraphMorphism& v) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    GraphMorphism out;
    out.stateMap.assign(p.apex.states, unset);
    out.edgeMap.assign(p.apex.edges.size(), unset);
    auto assign = [](std::vector<std::size_t>& slot, std::size_t at, std::size_t value) {
        if (slot[at] != unset && slot[at] != value) {
            return false;
        }
        slot[at] = value;
        return true;
    };
    for (std::size_t s = 0; s < u.stateMap.size(); ++s) {
        if (!assign(out.stateMap, p.fromLeft.stateMap[s], u.stateMap[s])) {
            return std::nullopt;
        }
    }
    for (std::size_t s = 0; s < v.stateMap.size(); ++s) {
        if (!assign(out.stateMap, p.fromRight.stateMap[s], v.stateMap[s])) {
            return std::nullopt;
        }
    }
    for (std::size_t e = 0; e < u.edgeMap.size(); ++e) {
        if (!assign(out.edgeMap, p.fromLeft.edgeMap[e], u.edgeMap[e])) {
            return std::nullopt;
        }
    }
    for (std::size_t e = 0; e < v.edgeMap.size(); ++e) {
        if (!assign(out.edgeMap, p.fromRight.edgeMap[e], v.edgeMap[e])) {
            return std::nullopt;
        }
    }
    return out;
}

Pullback pullback(const FiniteGraph& g, const GraphMorphism& f, const FiniteGraph& h,
                  const GraphMorphism& k) {
    if (f.stateMap.size() != g.states || k.stateMap.size() != h.states ||
        f.edgeMap.size() != g.edges.size() || k.edgeMap.size() != h.edges.size()) {
        throw InterfaceError("pullback: legs do not match their domains");
    }
    Pullback out;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> stateIndex;
    for (std::size_t s = 0; s < g.states; ++s) {
        for (std::size_t t = 0; t < h.states; ++t) {
            if (f.stateMap[s] == k.stateMap[t]) {
                stateIndex[{s, t}] = out.apex.addState();
                out.toLeft.stateMap.push_back(s);
                out.toRight.stateMap.push_back(t);
            }
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        for (std::size_t d = 0; d < h.edges.size(); ++d) {
            if (f.edgeMap[e] != k.edgeMap[d]) {
                continue;
            }
            const std::size_t src = stateIndex.at({g.edges[e].first, h.edges[d].first});
            const std::size_t tgt = stateIndex.at({g.edges[e].second, h.edges[d].second});
            out.apex.addEdge(src, tgt);
            out.toLeft.edgeMap.push_back(e);
            out.toRight.edgeMap.push_back(d);
        }
    }
    return out;
}

std::optional<GraphMorphism> mediate(const Pullback& p, const FiniteGraph& w, const GraphMorphism& u,
                                     const GraphMorphism& v) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> stateIndex;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edgeIndex;
    for (std::size_t s = 0; s < p.apex.states; ++s) {
        stateIndex[{p.toLeft.stateMap[s], p.toRight.stateMap[s]}] = s;
    }
    for (std::size_t e = 0; e < p.apex.edges.size(); ++e) {
        edgeIndex[{p.toLeft.edgeMap[e], p.toRight.edgeMap[e]}] = e;
    }
    GraphMorphism out;
    for (std::size_t s = 0; s < w.states; ++s) {
        auto it = stateIndex.find({u.stateMap[s], v.stateMap[s]});
        if (it == stateIndex.end()) {
            return std::nullopt;
        }
        out.stateMap.push_back(it->second);
    }
    for (std::size_t e = 0; e < w.edges.size(); ++e) {
        auto it = edgeIndex.find({u.edgeMap[e], v.edgeMap[e]});
        if (it == edgeIndex.end()) {
            return std::nullopt;
        }
        out.edgeMap.push_back(it->second);
    }
    return out;
}

Cospan pushoutCospan(const Cospan& g, const Cospan& h) {
    Pushout p = pushout(g.right, g.apex, g.fromRight, h.apex, h.fromLeft);
    Cospan out;
    out.left = g.left;
    out.right = h.right;
    out.apex = p.apex;
    out.fromLeft = composeMorphisms(g.fromLeft, p.fromLeft);
    out.fromRight = composeMorphisms(h.fromRight, p.fromRight);
    return out;
}

GraphSpan pullbackSpan(const GraphSpan& g, const GraphSpan& h) {
    Pullback p = pullback(g.apex, g.toRight, h.apex, h.toLeft);
    GraphSpan out;
    out.left = g.left;
    out.right = h.right;
    out.apex = p.apex;
    out.toLeft = composeMorphisms(p.toLeft, g.toLeft);
    out.toRight = composeMorphisms(p.toRight, h.toRight);
    return out;
}

} // namespace csp::oracle
