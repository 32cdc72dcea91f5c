#pragma once

#include "csp/space.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace csp {

/// One outgoing transition of a span from a given source element: the
/// witness (a readable path naming the transition) and the target element.
struct Transition {
    std::string witness;
    Value target;

    friend bool operator==(const Transition&, const Transition&) = default;
};

struct Triple {
    std::string witness;
    Value source;
    Value target;
};

/// Forward rule of a primitive span. Must return a finite sequence for every
/// element of the source space.
using ForwardRule = std::function<std::vector<Transition>(const Value&)>;

/// A span of sets between two spaces, represented by forward enumeration.
/// Immutable; copies share structure.
class Span {
public:
    enum class Kind { Empty, Identity, Finite, Primitive, Sum, Tensor, Compose };

    static Span empty(Space source, Space target);
    static Span identity(Space space);
    /// Witness ids must be distinct; every triple must be well-typed.
    static Span finite(Space source, Space target, std::vector<Triple> triples, std::string name = {});
    static Span primitive(std::string name, Space source, Space target, ForwardRule rule);
    /// Disjoint union of spans over the same legs; each part's witnesses are
    /// prefixed with its tag. Used where the summation index should be visible
    /// in traces (e.g. the shared label of a parallel composite).
    static Span taggedSum(std::vector<std::pair<std::string, Span>> parts);

    const Space& source() const;
    const Space& target() const;
    Kind kind() const;
    bool isEmpty() const { return kind() == Kind::Empty; }
    bool isIdentity() const { return kind() == Kind::Identity; }

    /// Display name: "0", "1", the primitive's name, or a composite such as
    /// "pred_{N,N}x1".
    std::string name() const;

    /// All transitions out of `v`, in deterministic order.
    /// Throws TypeError("source mismatch ...") when v is not in source().
    std::vector<Transition> forward(const Value& v) const;

    const std::vector<Triple>& triples() const;
    /// Operands of Sum (parts), Tensor (left, right) and Compose (first, second).
    const std::vector<Span>& operands() const;
    const std::vector<std::string>& tags() const;

private:
    struct Node;
    explicit Span(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::vector<Transition> step(const Value& v) const;

    friend Span compose(const Span& first, const Span& second);
    friend Span sum(const Span& f, const Span& g);
    friend Span tensor(const Span& f, const Span& g);

    std::shared_ptr<const Node> node_;
};

/// Pullback composite: `first` then `second`. Requires first.target() == second.source().
Span compose(const Span& first, const Span& second);
/// Disjoint union of transitions. Requires equal sources and equal targets.
Span sum(const Span& f, const Span& g);
/// Componentwise pairs, from times(f.source, g.source) to times(f.target, g.target).
Span tensor(const Span& f, const Span& g);

/// The explicit triple set of `s` over enumerate(source, natBound), witnesses
/// renumbered t0, t1, ... in enumeration order.
Span finiteNormalize(const Span& s, std::uint64_t natBound);

/// Sorted (source, target) multiset of `s` over enumerate(source, natBound).
std::vector<std::pair<Value, Value>> transitionMultiset(const Span& s, std::uint64_t natBound);

/// Same legs and same (source, target) multiset at the bound.
bool isoAtBound(const Span& a, const Span& b, std::uint64_t natBound);

} // namespace csp
