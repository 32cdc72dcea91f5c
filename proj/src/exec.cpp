#include "csp/exec.hpp"
#include "csp/error.hpp"

#include "json.hpp"

namespace csp {

namespace {

using Json = nlohmann::ordered_json;

Outcome haltingOutcome(const System& g, const StatePoint& p) {
    if (g.isBottomComponent(p.component)) {
        return {Outcome::Kind::AtBottomInterface, g.bottomIndexOf(p.component), p.value};
    }
    return {Outcome::Kind::Stuck, 0, p.value};
}

std::string describe(const System& g, const Move& m) {
    return "(" + g.left()[m.left] + "," + g.right()[m.right] + ") " + m.transition.witness + " -> " +
           std::to_string(m.component + 1) + ":" + m.transition.target.str();
}

Json pointJson(const StatePoint& p) {
    Json j;
    j["component"] = p.component + 1;
    j["value"] = p.value.str();
    return j;
}

} // namespace

std::string outcomeName(Outcome::Kind k) {
    switch (k) {
    case Outcome::Kind::AtBottomInterface: return "AtBottomInterface";
    case Outcome::Kind::Stuck: return "Stuck";
    case Outcome::Kind::StepBudgetExhausted: return "StepBudgetExhausted";
    }
    return "Stuck";
}

Trace run(const System& g, std::size_t topIndex, const Value& v, std::size_t maxSteps, Policy policy) {
    if (topIndex >= g.top().size()) {
        throw TypeError("top interface index " + std::to_string(topIndex + 1) + " out of range (the system has " +
                        std::to_string(g.top().size()) + " top components)");
    }
    const Space& space = g.top()[topIndex];
    if (!contains(space, v)) {
        throw TypeError("start value " + v.str() + " is not in top component " + std::to_string(topIndex + 1) +
                        " (" + space.str() + ")");
    }
    Trace t;
    t.initial = {g.phi()[topIndex], v};
    StatePoint cur = t.initial;
    while (true) {
        std::vector<Move> moves = g.successors(cur);
        if (moves.empty()) {
            t.outcome = haltingOutcome(g, cur);
            return t;
        }
        if (t.steps.size() >= maxSteps) {
            t.outcome = {Outcome::Kind::StepBudgetExhausted, 0, cur.value};
            return t;
        }
        if (policy == Policy::Deterministic && moves.size() > 1) {
            std::string msg = "nondeterministic choice after " + std::to_string(t.steps.size()) + " steps at " +
                              std::to_string(cur.component + 1) + ":" + cur.value.str() + ":";
            for (const Move& m : moves) {
                msg += "\n  " + describe(g, m);
            }
            throw NondeterminismError(msg);
        }
        Move& m = moves.front();
        StatePoint next{m.component, std::move(m.transition.target)};
        t.steps.push_back({g.left()[m.left], g.right()[m.right], std::move(m.transition.witness), next});
        cur = std::move(next);
    }
}

bool replay(const System& g, const Trace& t) {
    if (t.initial.component >= g.states().size() || !contains(g.states()[t.initial.component], t.initial.value)) {
        return false;
    }
    StatePoint cur = t.initial;
    for (const TraceStep& s : t.steps) {
        bool found = false;
        for (const Move& m : g.successors(cur)) {
            if (g.left()[m.left] == s.left && g.right()[m.right] == s.right && m.transition.witness == s.witness &&
                m.component == s.next.component && m.transition.target == s.next.value) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
        cur = s.next;
    }
    const bool quiescent = g.successors(cur).empty();
    switch (t.outcome.kind) {
    case Outcome::Kind::StepBudgetExhausted:
        return !quiescent && t.outcome.value == cur.value;
    default:
        return quiescent && t.outcome == haltingOutcome(g, cur);
    }
}

std::string traceJson(const Trace& t) {
    Json j;
    j["initial"] = pointJson(t.initial);
    j["steps"] = Json::array();
    for (const TraceStep& s : t.steps) {
        Json step;
        step["left"] = s.left;
        step["right"] = s.right;
        step["witness"] = s.witness;
        step["component"] = s.next.component + 1;
        step["value"] = s.next.value.str();
        j["steps"].push_back(std::move(step));
    }
    Json out;
    out["kind"] = outcomeName(t.outcome.kind);
    if (t.outcome.kind == Outcome::Kind::AtBottomInterface) {
        out["bottom"] = t.outcome.bottomIndex + 1;
    }
    out["value"] = t.outcome.value.str();
    j["outcome"] = std::move(out);
    j["length"] = t.steps.size();
    return j.dump(2) + "\n";
}

std::string reportJson(const ReachReport& r) {
    Json j;
    j["natBound"] = r.natBound;
    j["depthBound"] = r.depthBound;
    j["visited"] = r.visited;
    j["transitions"] = r.transitions;
    j["clipped"] = r.clipped;
    j["depthFrontier"] = r.depthFrontier;
    j["deadlocked"] = Json::array();
    for (const auto& p : r.deadlocked) {
        j["deadlocked"].push_back(pointJson(p));
    }
    j["bottomHits"] = Json::array();
    for (const auto& p : r.bottomHits) {
        j["bottomHits"].push_back(pointJson(p));
    }
    j["labels"] = Json::array();
    for (const auto& [labels, count] : r.labelCounts) {
        j["labels"].push_back({{"left", labels.first}, {"right", labels.second}, {"count", count}});
    }
    return j.dump(2) + "\n";
}

} // namespace csp
