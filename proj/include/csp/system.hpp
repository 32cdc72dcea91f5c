#pragma once

#include "csp/matrix.hpp"
#include "csp/span.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace csp {

using Label = std::string;
using LabelSet = std::vector<Label>;

/// Name of the single label of a trivial parallel interface.
inline const Label kTrivialLabel = "eps";

/// Key of the span family: left label a, right label b, source component i,
/// target component j (all 0-based indices).
struct SpanKey {
    std::size_t left;
    std::size_t right;
    std::size_t from;
    std::size_t to;

    friend auto operator<=>(const SpanKey&, const SpanKey&) = default;
};

/// A vertex of the central graph: a component index and an element of it.
struct StatePoint {
    std::size_t component = 0;
    Value value;

    friend bool operator==(const StatePoint&, const StatePoint&) = default;
    friend auto operator<=>(const StatePoint&, const StatePoint&) = default;
};

/// An enabled transition out of some state.
struct Move {
    std::size_t left;
    std::size_t right;
    std::size_t component;
    Transition transition;
};

/// A system with finite parallel interfaces (label sets), top and bottom
/// sequential interfaces given as families of spaces included into the
/// internal state family, and a family of spans indexed by label pair and
/// component pair.
class System {
public:
    /// Validates every structural invariant; throws TypeError/InterfaceError.
    System(LabelSet left, LabelSet right, Family top, Family bottom, Family states,
           std::vector<std::size_t> phi, std::vector<std::size_t> psi,
           std::map<SpanKey, Span> spans = {});

    const LabelSet& left() const { return left_; }
    const LabelSet& right() const { return right_; }
    const Family& top() const { return top_; }
    const Family& bottom() const { return bottom_; }
    const Family& states() const { return states_; }
    const std::vector<std::size_t>& phi() const { return phi_; }
    const std::vector<std::size_t>& psi() const { return psi_; }
    const std::map<SpanKey, Span>& spans() const { return spans_; }

    Span span(std::size_t a, std::size_t b, std::size_t from, std::size_t to) const;

    std::size_t leftIndex(const Label& label) const;
    std::size_t rightIndex(const Label& label) const;

    /// True when the component is the image of some bottom interface index.
    bool isBottomComponent(std::size_t component) const;
    /// Smallest bottom index j with psi(j) == component.
    std::size_t bottomIndexOf(std::size_t component) const;

    /// Enabled transitions from `p`, ordered by (left label, right label,
    /// target component) and then by each span's own order.
    std::vector<Move> successors(const StatePoint& p) const;

    bool hasTransitions() const { return !spans_.empty(); }
    /// Trivial parallel interfaces and no transitions: the system is just a
    /// span of sets between its sequential interfaces.
    bool isPassive() const;

private:
    LabelSet left_;
    LabelSet right_;
    Family top_;
    Family bottom_;
    Family states_;
    std::vector<std::size_t> phi_;
    std::vector<std::size_t> psi_;
    std::map<SpanKey, Span> spans_;
    // Keys of spans_ grouped by source component, in key order.
    std::vector<std::vector<SpanKey>> bySource_;
};

enum class ConstantKind { Eta, Epsilon, Codiag, Ident };

/// The distributive-category constants with trivial parallel interface and no
/// transitions: eta = 0 -> X <- X+X, epsilon = X+X -> X <- 0,
/// codiag = X+X -> X <- X, ident = X -> X <- X.
System constantSystem(ConstantKind kind, const Space& space);

/// `pred`: N -> N+1, `succ`: N -> N, `succ_total`: N+1 -> N.
System basicSystem(const std::string& name);

Span predNN();
Span predN1();

/// Data-block matrix of the transitions labelled (a, b): rows and columns
/// are the state family; entry (j, i) is the span from component i to j.
SpanMatrix systemMatrix(const System& g, std::size_t a, std::size_t b);

/// The data block extended with the sequential interfaces: columns are
/// top ++ states, rows are bottom ++ states; interface entries are identity
/// spans at the inclusions and empty elsewhere.
SpanMatrix extendedMatrix(const System& g, std::size_t a, std::size_t b);

std::size_t spanCount(const System& g);

} // namespace csp
