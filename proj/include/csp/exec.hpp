#pragma once

#include "csp/system.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csp {

enum class Policy { Deterministic, FirstEnabled };

struct TraceStep {
    Label left;
    Label right;
    std::string witness;
    StatePoint next;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Outcome {
    enum class Kind { AtBottomInterface, Stuck, StepBudgetExhausted };

    Kind kind = Kind::Stuck;
    std::size_t bottomIndex = 0; // AtBottomInterface only, 0-based
    Value value;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// A path in the central graph.
struct Trace {
    StatePoint initial;
    std::vector<TraceStep> steps;
    Outcome outcome;

    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Runs from the top interface point (topIndex, v). At each state the enabled
/// transitions are listed in label order; the run stops at a quiescent state
/// (AtBottomInterface if its component is a bottom component, Stuck
/// otherwise) or after maxSteps steps.
///
/// Throws TypeError for an ill-typed start value and NondeterminismError
/// under Policy::Deterministic when more than one transition is enabled.
Trace run(const System& g, std::size_t topIndex, const Value& v, std::size_t maxSteps,
          Policy policy = Policy::Deterministic);

/// True iff every step is an enabled transition at the state it leaves and
/// the recorded outcome is the one the final state implies.
bool replay(const System& g, const Trace& t);

struct ReachReport {
    std::uint64_t natBound = 0;
    std::size_t depthBound = 0;
    std::size_t visited = 0;
    std::size_t transitions = 0;
    /// Distinct successor states with a natural above natBound; not visited.
    std::size_t clipped = 0;
    /// Visited states at depthBound that still had enabled transitions.
    std::size_t depthFrontier = 0;
    /// Visited states outside every bottom component with nothing enabled.
    std::vector<StatePoint> deadlocked;
    /// Visited states in a bottom component.
    std::vector<StatePoint> bottomHits;
    std::map<std::pair<Label, Label>, std::size_t> labelCounts;

    friend bool operator==(const ReachReport&, const ReachReport&) = default;
};

struct ReachOptions {
    std::uint64_t natBound = 8;
    std::size_t depthBound = 50;
    /// Default: every top interface point with values enumerated at natBound.
    std::optional<std::vector<StatePoint>> start;
};

/// Level-synchronous breadth-first exploration. Successor lists of a level
/// are computed in parallel and merged in frontier order, so the report is
/// identical to reachSerial.
ReachReport reach(const System& g, const ReachOptions& options);
/// Single-threaded reference for reach.
ReachReport reachSerial(const System& g, const ReachOptions& options);

/// The visited states in visitation order (serial exploration).
std::vector<StatePoint> reachableStates(const System& g, const ReachOptions& options);

std::string outcomeName(Outcome::Kind k);

/// JSON with a fixed field order; components and interface indices are 1-based.
std::string traceJson(const Trace& t);
std::string reportJson(const ReachReport& r);

} // namespace csp
