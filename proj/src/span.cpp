#include "csp/span.hpp"

#include "csp/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace csp {

struct Span::Node {
    Kind kind;
    Space source;
    Space target;
    std::string name;
    std::vector<Triple> triples;
    std::multimap<Value, std::size_t> bySource;
    ForwardRule rule;
    std::vector<Span> operands;
    std::vector<std::string> tags;
};

namespace {

bool needsParens(const Span& s) {
    return s.kind() == Span::Kind::Sum || s.kind() == Span::Kind::Compose;
}

std::string atomName(const Span& s) {
    return needsParens(s) ? "(" + s.name() + ")" : s.name();
}

} // namespace

Span Span::empty(Space source, Space target) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Empty;
    n->source = std::move(source);
    n->target = std::move(target);
    return Span(std::move(n));
}

Span Span::identity(Space space) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Identity;
    n->source = space;
    n->target = std::move(space);
    return Span(std::move(n));
}

Span Span::finite(Space source, Space target, std::vector<Triple> triples, std::string name) {
    std::set<std::string> ids;
    for (const auto& t : triples) {
        if (!ids.insert(t.witness).second) {
            throw TypeError("finite span: duplicate witness id '" + t.witness + "'");
        }
        if (!contains(source, t.source) || !contains(target, t.target)) {
            throw TypeError("finite span: triple " + t.witness + " is not typed " + source.str() +
                            " -> " + target.str());
        }
    }
    if (triples.empty()) {
        return empty(std::move(source), std::move(target));
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Finite;
    n->source = std::move(source);
    n->target = std::move(target);
    if (name.empty()) {
        name = "{";
        for (std::size_t i = 0; i < triples.size(); ++i) {
            name += (i ? "," : "") + triples[i].witness;
        }
        name += "}";
    }
    n->name = std::move(name);
    for (std::size_t i = 0; i < triples.size(); ++i) {
        n->bySource.emplace(triples[i].source, i);
    }
    n->triples = std::move(triples);
    return Span(std::move(n));
}

Span Span::primitive(std::string name, Space source, Space target, ForwardRule rule) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Primitive;
    n->name = std::move(name);
    n->source = std::move(source);
    n->target = std::move(target);
    n->rule = std::move(rule);
    return Span(std::move(n));
}

Span Span::taggedSum(std::vector<std::pair<std::string, Span>> parts) {
    if (parts.empty()) {
        throw InternalError("taggedSum of no parts");
    }
    const Space& src = parts.front().second.source();
    const Space& tgt = parts.front().second.target();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->source = src;
    n->target = tgt;
    for (auto& [tag, s] : parts) {
        if (s.source() != src || s.target() != tgt) {
            throw TypeError("span sum: legs differ (" + s.source().str() + " -> " + s.target().str() +
                            " vs " + src.str() + " -> " + tgt.str() + ")");
        }
        n->tags.push_back(std::move(tag));
        n->operands.push_back(std::move(s));
    }
    return Span(std::move(n));
}

const Space& Span::source() const { return node_->source; }
const Space& Span::target() const { return node_->target; }
Span::Kind Span::kind() const { return node_->kind; }
const std::vector<Triple>& Span::triples() const { return node_->triples; }
const std::vector<Span>& Span::operands() const { return node_->operands; }
const std::vector<std::string>& Span::tags() const { return node_->tags; }

std::string Span::name() const {
    switch (node_->kind) {
    case Kind::Empty:
        return "0";
    case Kind::Identity:
        return "1";
    case Kind::Finite:
    case Kind::Primitive:
        return node_->name;
    case Kind::Sum: {
        std::string out;
        for (std::size_t i = 0; i < node_->operands.size(); ++i) {
            out += (i ? " + " : "") + node_->operands[i].name();
        }
        return out;
    }
    case Kind::Tensor:
        return atomName(node_->operands[0]) + "x" + atomName(node_->operands[1]);
    case Kind::Compose:
        return atomName(node_->operands[0]) + " ; " + atomName(node_->operands[1]);
    }
    return "?";
}

std::vector<Transition> Span::forward(const Value& v) const {
    if (!contains(node_->source, v)) {
        throw TypeError("source mismatch: " + v.str() + " is not in " + node_->source.str());
    }
    return step(v);
}

std::vector<Transition> Span::step(const Value& v) const {
    const Node& n = *node_;
    std::vector<Transition> out;
    switch (n.kind) {
    case Kind::Empty:
        break;
    case Kind::Identity:
        out.push_back({"id", v});
        break;
    case Kind::Finite: {
        auto [lo, hi] = n.bySource.equal_range(v);
        for (auto it = lo; it != hi; ++it) {
            const Triple& t = n.triples[it->second];
            out.push_back({t.witness, t.target});
        }
        break;
    }
    case Kind::Primitive:
        out = n.rule(v);
        for (const auto& t : out) {
            if (!contains(n.target, t.target)) {
                throw InternalError("rule " + n.name + " produced " + t.target.str() + " outside " +
                                    n.target.str());
            }
        }
        break;
    case Kind::Sum:
        for (std::size_t i = 0; i < n.operands.size(); ++i) {
            for (auto& t : n.operands[i].step(v)) {
                out.push_back({n.tags[i] + ":" + t.witness, std::move(t.target)});
            }
        }
        break;
    case Kind::Tensor: {
        const Span& l = n.operands[0];
        const Span& r = n.operands[1];
        auto [a, b] = unpairValue(l.source(), r.source(), v);
        auto left = l.step(a);
        if (left.empty()) {
            break;
        }
        auto right = r.step(b);
        for (const auto& x : left) {
            for (const auto& y : right) {
                out.push_back({"(" + x.witness + "," + y.witness + ")",
                               pairValues(l.target(), r.target(), x.target, y.target)});
            }
        }
        break;
    }
    case Kind::Compose:
        for (const auto& x : n.operands[0].step(v)) {
            for (auto& y : n.operands[1].step(x.target)) {
                out.push_back({x.witness + "." + y.witness, std::move(y.target)});
            }
        }
        break;
    }
    return out;
}

Span compose(const Span& first, const Span& second) {
    if (first.target() != second.source()) {
        throw InterfaceError("span compose: " + first.target().str() + " does not match " +
                             second.source().str());
    }
    if (first.isEmpty() || second.isEmpty()) {
        return Span::empty(first.source(), second.target());
    }
    if (first.isIdentity()) {
        return second;
    }
    if (second.isIdentity()) {
        return first;
    }
    if (first.kind() == Span::Kind::Finite && second.kind() == Span::Kind::Finite) {
        std::vector<Triple> out;
        for (const auto& f : first.triples()) {
            for (const auto& g : second.triples()) {
                if (f.target == g.source) {
                    out.push_back({f.witness + "." + g.witness, f.source, g.target});
                }
            }
        }
        return Span::finite(first.source(), second.target(), std::move(out));
    }
    auto n = std::make_shared<Span::Node>();
    n->kind = Span::Kind::Compose;
    n->source = first.source();
    n->target = second.target();
    n->operands = {first, second};
    return Span(std::move(n));
}

Span sum(const Span& f, const Span& g) {
    if (f.source() != g.source() || f.target() != g.target()) {
        throw InterfaceError("span sum: legs differ (" + f.source().str() + " -> " + f.target().str() +
                             " vs " + g.source().str() + " -> " + g.target().str() + ")");
    }
    if (f.isEmpty()) {
        return g;
    }
    if (g.isEmpty()) {
        return f;
    }
    return Span::taggedSum({{"0", f}, {"1", g}});
}

Span tensor(const Span& f, const Span& g) {
    Space src = times(f.source(), g.source());
    Space tgt = times(f.target(), g.target());
    if (f.isEmpty() || g.isEmpty()) {
        return Span::empty(std::move(src), std::move(tgt));
    }
    if (f.isIdentity() && g.isIdentity()) {
        return Span::identity(std::move(src));
    }
    if (f.kind() == Span::Kind::Finite && g.kind() == Span::Kind::Finite) {
        std::vector<Triple> out;
        for (const auto& x : f.triples()) {
            for (const auto& y : g.triples()) {
                out.push_back({"(" + x.witness + "," + y.witness + ")",
                               pairValues(f.source(), g.source(), x.source, y.source),
                               pairValues(f.target(), g.target(), x.target, y.target)});
            }
        }
        return Span::finite(std::move(src), std::move(tgt), std::move(out));
    }
    auto n = std::make_shared<Span::Node>();
    n->kind = Span::Kind::Tensor;
    n->source = std::move(src);
    n->target = std::move(tgt);
    n->operands = {f, g};
    return Span(std::move(n));
}

Span finiteNormalize(const Span& s, std::uint64_t natBound) {
    std::vector<Triple> out;
    for (const auto& v : enumerate(s.source(), natBound)) {
        for (auto& t : s.forward(v)) {
            out.push_back({"t" + std::to_string(out.size()), v, std::move(t.target)});
        }
    }
    return Span::finite(s.source(), s.target(), std::move(out), "normal(" + s.name() + ")");
}

std::vector<std::pair<Value, Value>> transitionMultiset(const Span& s, std::uint64_t natBound) {
    std::vector<std::pair<Value, Value>> out;
    for (const auto& v : enumerate(s.source(), natBound)) {
        for (auto& t : s.forward(v)) {
            out.emplace_back(v, std::move(t.target));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool isoAtBound(const Span& a, const Span& b, std::uint64_t natBound) {
    return a.source() == b.source() && a.target() == b.target() &&
           transitionMultiset(a, natBound) == transitionMultiset(b, natBound);
}

} // namespace csp
