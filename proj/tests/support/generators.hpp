#pragma once

#include "csp/system.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <string>

namespace csp::testing {

using Rng = std::mt19937_64;

struct Limits {
    std::size_t maxComponents = 4;
    std::size_t maxSize = 3;
    std::size_t maxLabels = 3;
    std::size_t maxTransitions = 6;
    std::size_t maxInterface = 2;
    bool active = true; // at least one transition
};

/// Constraints a generated system must meet; unset fields are random.
struct Shape {
    std::optional<LabelSet> left = {};
    std::optional<LabelSet> right = {};
    std::optional<Family> top = {};
    std::optional<Family> bottom = {};
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi);

/// A finite space with 1 to maxSize elements: 1, {p,q}, {p,q,r} or 1+1.
Space finiteSpace(Rng& rng, std::size_t maxSize);
/// {eps} or a prefix of {a, b, c}.
LabelSet labelSet(Rng& rng, std::size_t maxLabels);
Value randomElement(Rng& rng, const Space& s);
/// A finite span with `count` random triples (witnesses prefix0, prefix1, ...).
Span finiteSpan(Rng& rng, const Space& source, const Space& target, std::size_t count,
                const std::string& prefix = "w");
/// A small random span over finite spaces mixing kinds: empty, identity,
/// finite, and primitive rules given by lookup tables.
Span mixedSpan(Rng& rng, const Space& source, const Space& target);

System randomSystem(Rng& rng, const Limits& limits = {}, const Shape& shape = {});

/// G, H, K, L with G || H, K || L, G o K and H o L all defined. With `local`,
/// K shares G's labels and L shares H's.
struct Quadruple {
    System g;
    System h;
    System k;
    System l;
};
Quadruple randomQuadruple(Rng& rng, const Limits& limits, bool local);

/// One state of type 1 with a single eps loop, included into every given
/// interface component (each must be 1).
System unitLoop(std::size_t topSize, std::size_t bottomSize);

} // namespace csp::testing
