#include "csp/error.hpp"
#include "csp/exec.hpp"

#include <exception>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csp {

namespace {

std::vector<StatePoint> defaultStart(const System& g, std::uint64_t natBound) {
    std::vector<StatePoint> out;
    for (std::size_t i = 0; i < g.top().size(); ++i) {
        for (Value& v : enumerate(g.top()[i], natBound)) {
            out.push_back({g.phi()[i], std::move(v)});
        }
    }
    return out;
}

std::vector<std::vector<Move>> expandSerial(const System& g, const std::vector<StatePoint>& frontier) {
    std::vector<std::vector<Move>> out(frontier.size());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        out[i] = g.successors(frontier[i]);
    }
    return out;
}

std::vector<std::vector<Move>> expandParallel(const System& g, const std::vector<StatePoint>& frontier) {
    std::vector<std::vector<Move>> out(frontier.size());
    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = g.successors(frontier[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(reach_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

using Expander = std::vector<std::vector<Move>> (*)(const System&, const std::vector<StatePoint>&);

ReachReport explore(const System& g, const ReachOptions& options, Expander expand,
                    std::vector<StatePoint>* order = nullptr) {
    ReachReport r;
    r.natBound = options.natBound;
    r.depthBound = options.depthBound;

    std::set<StatePoint> seen;
    std::set<StatePoint> clipped;
    std::vector<StatePoint> frontier;
    auto admit = [&](const StatePoint& p) {
        if (!withinBound(p.value, options.natBound)) {
            clipped.insert(p);
        } else if (seen.insert(p).second) {
            frontier.push_back(p);
            if (order) {
                order->push_back(p);
            }
        }
    };
    for (const StatePoint& p : options.start ? *options.start : defaultStart(g, options.natBound)) {
        if (p.component >= g.states().size() || !contains(g.states()[p.component], p.value)) {
            throw TypeError("start state " + std::to_string(p.component + 1) + ":" + p.value.str() +
                            " is not a state of the system");
        }
        admit(p);
    }

    for (std::size_t depth = 0; !frontier.empty(); ++depth) {
        const std::vector<StatePoint> level = std::move(frontier);
        frontier.clear();
        const std::vector<std::vector<Move>> moves = expand(g, level);
        for (std::size_t i = 0; i < level.size(); ++i) {
            const StatePoint& p = level[i];
            if (g.isBottomComponent(p.component)) {
                r.bottomHits.push_back(p);
            } else if (moves[i].empty()) {
                r.deadlocked.push_back(p);
            }
            if (depth == options.depthBound) {
                r.depthFrontier += moves[i].empty() ? 0 : 1;
                continue;
            }
            for (const Move& m : moves[i]) {
                ++r.transitions;
                ++r.labelCounts[{g.left()[m.left], g.right()[m.right]}];
                admit({m.component, m.transition.target});
            }
        }
        if (depth == options.depthBound) {
            break;
        }
    }
    r.visited = seen.size();
    r.clipped = clipped.size();
    return r;
}

} // namespace

ReachReport reach(const System& g, const ReachOptions& options) {
    return explore(g, options, expandParallel);
}

ReachReport reachSerial(const System& g, const ReachOptions& options) {
    return explore(g, options, expandSerial);
}

std::vector<StatePoint> reachableStates(const System& g, const ReachOptions& options) {
    std::vector<StatePoint> order;
    explore(g, options, expandSerial, &order);
    return order;
}

} // namespace csp
