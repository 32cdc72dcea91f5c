#pragma once

// Brute-force finite graph constructions: pushouts of cospans, pullbacks of
// spans, mediating morphisms, and a backtracking isomorphism search. These
// are explicit set constructions, independent of the span/matrix formulas in
// algebra.hpp, and serve as the reference those formulas are checked against.

#include "csp/system.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csp::oracle {

struct FiniteGraph {
    std::size_t states = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // (source, target)

    std::size_t addState() { return states++; }
    std::size_t addEdge(std::size_t source, std::size_t target) {
        edges.emplace_back(source, target);
        return edges.size() - 1;
    }
};

struct GraphMorphism {
    std::vector<std::size_t> stateMap;
    std::vector<std::size_t> edgeMap;

    friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
};

bool isMorphism(const GraphMorphism& f, const FiniteGraph& from, const FiniteGraph& to);
/// `second` after `first`.
GraphMorphism composeMorphisms(const GraphMorphism& first, const GraphMorphism& second);
GraphMorphism identityMorphism(const FiniteGraph& g);

/// Pushout of G <- B -> H: the disjoint union of G and H modulo the
/// equivalence generated by f(x) ~ k(x) for states and edges x of B.
struct Pushout {
    FiniteGraph apex;
    GraphMorphism fromLeft;  // G -> apex
    GraphMorphism fromRight; // H -> apex
};
Pushout pushout(const FiniteGraph& base, const FiniteGraph& g, const GraphMorphism& f,
                const FiniteGraph& h, const GraphMorphism& k);
/// The unique u' : apex -> T with u' . fromLeft = u and u' . fromRight = v,
/// or nothing when (u, v) is not a cocone.
std::optional<GraphMorphism> mediate(const Pushout& p, const GraphMorphism& u, const GraphMorphism& v);

/// Pullback of G -> Y <- H: pairs of states and pairs of edges that agree in Y.
struct Pullback {
    FiniteGraph apex;
    GraphMorphism toLeft;  // apex -> G
    GraphMorphism toRight; // apex -> H
};
Pullback pullback(const FiniteGraph& g, const GraphMorphism& f, const FiniteGraph& h,
                  const GraphMorphism& k);
/// The unique w : W -> apex with toLeft . w = u and toRight . w = v, or
/// nothing when (u, v) is not a cone.
std::optional<GraphMorphism> mediate(const Pullback& p, const FiniteGraph& w, const GraphMorphism& u,
                                     const GraphMorphism& v);

/// A -> G <- B.
struct Cospan {
    FiniteGraph left;
    FiniteGraph apex;
    FiniteGraph right;
    GraphMorphism fromLeft;
    GraphMorphism fromRight;
};
/// Composite of A -> G <- B and B -> H <- C (g.right and h.left are the same graph).
Cospan pushoutCospan(const Cospan& g, const Cospan& h);

/// X <- G -> Y.
struct GraphSpan {
    FiniteGraph left;
    FiniteGraph apex;
    FiniteGraph right;
    GraphMorphism toLeft;
    GraphMorphism toRight;
};
/// Composite of X <- G -> Y and Y <- H -> Z (g.right and h.left are the same graph).
GraphSpan pullbackSpan(const GraphSpan& g, const GraphSpan& h);

/// A point of a discrete sequential interface and the state it includes into.
struct InterfacePoint {
    std::size_t component;
    Value value;
    std::size_t state;
};

/// A truncated system as plain graphs: the central graph, edge labellings
/// into the one-state label graphs, and the interface inclusions.
struct OpenGraph {
    FiniteGraph graph;
    LabelSet left;
    LabelSet right;
    std::vector<std::size_t> leftOf;  // per edge
    std::vector<std::size_t> rightOf; // per edge
    Family topFamily;
    Family bottomFamily;
    std::vector<InterfacePoint> top;
    std::vector<InterfacePoint> bottom;
    std::vector<std::string> stateNames;
    bool passive = false; // trivial labels and no transitions before truncation
};

/// States are all (component, value) with value in enumerate(component, natBound);
/// transitions whose target exceeds the bound are dropped.
OpenGraph truncate(const System& g, std::uint64_t natBound);

struct ParallelResult {
    OpenGraph graph;
    GraphMorphism toLeft;
    GraphMorphism toRight;
};
/// Pullback of g's right labelling and h's left labelling.
ParallelResult parallelOracle(const OpenGraph& g, const OpenGraph& h);

struct SequentialResult {
    OpenGraph graph;
    GraphMorphism fromLeft;
    GraphMorphism fromRight;
};
/// Pushout along g's bottom and h's top interfaces. With `local`, both
/// operands must share label sets and the labellings are joined by the
/// codiagonal; otherwise labels become A+C and B+D.
SequentialResult sequentialOracle(const OpenGraph& g, const OpenGraph& h, bool local = false);

struct GraphIso {
    std::vector<std::size_t> stateMap;
    std::vector<std::size_t> edgeMap;
};

/// Isomorphism of open graphs: a bijection of states and of edges that
/// preserves sources, targets, edge labels (by index) and the interface
/// points (matched by component and value). Throws SizeError when either
/// graph has more than maxStates states.
std::optional<GraphIso> graphIso(const OpenGraph& a, const OpenGraph& b, std::size_t maxStates = 12);
std::optional<GraphIso> graphIso(const FiniteGraph& a, const FiniteGraph& b, std::size_t maxStates = 12);

enum class Verdict { Iso, StrictlyLax };

struct Comparison {
    Verdict verdict;
    GraphMorphism map; // LHS -> RHS
    OpenGraph lhs;
    OpenGraph rhs;
    bool injectiveOnStates;
    bool injectiveOnTransitions;
    bool preservesLabels;
    bool preservesInterfaces; // top and bottom points land on the same points
};

/// The canonical comparison map
///   (G || H) o (K || L)  ->  (G o K) || (H o L)
/// built from the universal properties of the pullbacks and the pushout on
/// the truncations of the four systems. With `local`, o is replaced by the
/// local sequential composite. Throws InterfaceError on a non-composable
/// quadruple.
Comparison comparisonMap(const System& g, const System& h, const System& k, const System& l,
                         std::uint64_t natBound, bool local = false);

} // namespace csp::oracle
