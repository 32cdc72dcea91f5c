#include "csp/algebra.hpp"
#include "csp/error.hpp"
#include "csp/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace csp::oracle {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr std::uint64_t kSearchBudget = 5'000'000;

using LabelPair = std::pair<std::size_t, std::size_t>;
using Pin = std::tuple<int, std::size_t, Value>;

/// Adjacency view of an open graph: edge label bags between ordered state
/// pairs, neighbour lists, and interface pins per state.
struct View {
    std::size_t states = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<LabelPair>> bags;
    std::vector<std::vector<std::size_t>> neighbours;
    std::vector<std::vector<Pin>> pins;

    explicit View(const OpenGraph& g) : states(g.graph.states), neighbours(states), pins(states) {
        for (std::size_t e = 0; e < g.graph.edges.size(); ++e) {
            const auto [s, t] = g.graph.edges[e];
            bags[{s, t}].emplace_back(g.leftOf[e], g.rightOf[e]);
            neighbours[s].push_back(t);
            neighbours[t].push_back(s);
        }
        for (auto& [k, bag] : bags) {
            std::sort(bag.begin(), bag.end());
        }
        for (auto& n : neighbours) {
            std::sort(n.begin(), n.end());
            n.erase(std::unique(n.begin(), n.end()), n.end());
        }
        for (const auto& p : g.top) {
            pins[p.state].emplace_back(0, p.component, p.value);
        }
        for (const auto& p : g.bottom) {
            pins[p.state].emplace_back(1, p.component, p.value);
        }
        for (auto& p : pins) {
            std::sort(p.begin(), p.end());
        }
    }

    const std::vector<LabelPair>& bag(std::size_t s, std::size_t t) const {
        static const std::vector<LabelPair> none;
        auto it = bags.find({s, t});
        return it == bags.end() ? none : it->second;
    }
};

/// Colour refinement over both graphs with one shared dictionary, so equal
/// colours mean equal refined signatures in either graph.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const View& a, const View& b) {
    std::map<std::vector<Pin>, std::size_t> pinColour;
    auto initial = [&](const View& v) {
        std::vector<std::size_t> c(v.states);
        for (std::size_t s = 0; s < v.states; ++s) {
            c[s] = pinColour.try_emplace(v.pins[s], pinColour.size()).first->second;
        }
        return c;
    };
    std::vector<std::size_t> ca = initial(a);
    std::vector<std::size_t> cb = initial(b);

    auto classes = [](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
        std::vector<std::size_t> all = x;
        all.insert(all.end(), y.begin(), y.end());
        std::sort(all.begin(), all.end());
        return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
    };

    std::size_t count = classes(ca, cb);
    for (;;) {
        std::map<std::pair<std::size_t, std::vector<std::tuple<int, std::size_t, std::size_t, std::size_t>>>,
                 std::size_t>
            dict;
        auto step = [&](const View& v, const std::vector<std::size_t>& c) {
            std::vector<std::size_t> next(v.states);
            for (std::size_t s = 0; s < v.states; ++s) {
                std::vector<std::tuple<int, std::size_t, std::size_t, std::size_t>> sig;
                for (auto t : v.neighbours[s]) {
                    for (const auto& [l, r] : v.bag(s, t)) {
                        sig.emplace_back(0, c[t], l, r);
                    }
                    if (t == s) {
                        continue;
                    }
                    for (const auto& [l, r] : v.bag(t, s)) {
                        sig.emplace_back(1, c[t], l, r);
                    }
                }
                std::sort(sig.begin(), sig.end());
                next[s] = dict.try_emplace({c[s], std::move(sig)}, dict.size()).first->second;
            }
            return next;
        };
        auto na = step(a, ca);
        auto nb = step(b, cb);
        const std::size_t nextCount = classes(na, nb);
        ca = std::move(na);
        cb = std::move(nb);
        if (nextCount == count) {
            break;
        }
        count = nextCount;
    }
    return {ca, cb};
}

class Search {
public:
    Search(const View& a, const View& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
        : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), map_(a.states, kNone),
          inverse_(b.states, kNone) {
        std::map<std::size_t, std::size_t> classSize;
        for (auto c : ca_) {
            ++classSize[c];
        }
        order_.resize(a.states);
        for (std::size_t s = 0; s < a.states; ++s) {
            order_[s] = s;
        }
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
            return classSize[ca_[x]] < classSize[ca_[y]];
        });
        for (std::size_t t = 0; t < b.states; ++t) {
            byColour_[cb_[t]].push_back(t);
        }
    }

    bool run() { return extend(0); }
    const std::vector<std::size_t>& map() const { return map_; }

private:
    bool consistent(std::size_t s, std::size_t t) const {
        if (a_.bag(s, s) != b_.bag(t, t)) {
            return false;
        }
        for (auto n : a_.neighbours[s]) {
            if (n == s || map_[n] == kNone) {
                continue;
            }
            if (a_.bag(s, n) != b_.bag(t, map_[n]) || a_.bag(n, s) != b_.bag(map_[n], t)) {
                return false;
            }
        }
        for (auto n : b_.neighbours[t]) {
            if (n == t || inverse_[n] == kNone) {
                continue;
            }
            if (b_.bag(t, n) != a_.bag(s, inverse_[n]) || b_.bag(n, t) != a_.bag(inverse_[n], s)) {
                return false;
            }
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) {
            return true;
        }
        if (++steps_ > kSearchBudget) {
            throw SizeError("instance too large: isomorphism search budget exceeded");
        }
        const std::size_t s = order_[depth];
        auto it = byColour_.find(ca_[s]);
        if (it == byColour_.end()) {
            return false;
        }
        for (auto t : it->second) {
            if (inverse_[t] != kNone || !consistent(s, t)) {
                continue;
            }
            map_[s] = t;
            inverse_[t] = s;
            if (extend(depth + 1)) {
                return true;
            }
            map_[s] = kNone;
            inverse_[t] = kNone;
        }
        return false;
    }

    const View& a_;
    const View& b_;
    std::vector<std::size_t> ca_;
    std::vector<std::size_t> cb_;
    std::vector<std::size_t> map_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> order_;
    std::map<std::size_t, std::vector<std::size_t>> byColour_;
    std::uint64_t steps_ = 0;
};

bool sameShape(const OpenGraph& a, const OpenGraph& b) {
    return a.graph.states == b.graph.states && a.graph.edges.size() == b.graph.edges.size() &&
           a.left.size() == b.left.size() && a.right.size() == b.right.size() &&
           a.topFamily == b.topFamily && a.bottomFamily == b.bottomFamily && a.top.size() == b.top.size() &&
           a.bottom.size() == b.bottom.size();
}

} // namespace

std::optional<GraphIso> graphIso(const OpenGraph& a, const OpenGraph& b, std::size_t maxStates) {
    if (a.graph.states > maxStates || b.graph.states > maxStates) {
        throw SizeError("instance too large: " + std::to_string(std::max(a.graph.states, b.graph.states)) +
                        " states exceeds the guard of " + std::to_string(maxStates));
    }
    if (!sameShape(a, b)) {
        return std::nullopt;
    }
    const View va(a);
    const View vb(b);
    auto [ca, cb] = refine(va, vb);
    std::vector<std::size_t> sa = ca;
    std::vector<std::size_t> sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
        return std::nullopt;
    }
    Search search(va, vb, std::move(ca), std::move(cb));
    if (!search.run()) {
        return std::nullopt;
    }

    GraphIso iso;
    iso.stateMap = search.map();
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>> pool;
    for (std::size_t e = 0; e < b.graph.edges.size(); ++e) {
        const auto [s, t] = b.graph.edges[e];
        pool[{s, t, b.leftOf[e], b.rightOf[e]}].push_back(e);
    }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> used;
    for (std::size_t e = 0; e < a.graph.edges.size(); ++e) {
        const auto [s, t] = a.graph.edges[e];
        const auto key = std::tuple{iso.stateMap[s], iso.stateMap[t], a.leftOf[e], a.rightOf[e]};
        iso.edgeMap.push_back(pool.at(key).at(used[key]++));
    }
    return iso;
}

std::optional<GraphIso> graphIso(const FiniteGraph& a, const FiniteGraph& b, std::size_t maxStates) {
    auto wrap = [](const FiniteGraph& g) {
        OpenGraph o;
        o.graph = g;
        o.left = {kTrivialLabel};
        o.right = {kTrivialLabel};
        o.leftOf.assign(g.edges.size(), 0);
        o.rightOf.assign(g.edges.size(), 0);
        return o;
    };
    return graphIso(wrap(a), wrap(b), maxStates);
}

} // namespace csp::oracle

namespace csp {

bool isoAtBound(const System& g, const System& h, std::uint64_t natBound, std::size_t maxStates) {
    if (g.left() != h.left() || g.right() != h.right()) {
        return false;
    }
    return oracle::graphIso(oracle::truncate(g, natBound), oracle::truncate(h, natBound), maxStates)
        .has_value();
}

} // namespace csp
