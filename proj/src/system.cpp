#include "csp/system.hpp"

#include "csp/error.hpp"

#include <algorithm>
#include <set>

namespace csp {

namespace {

void checkLabels(const LabelSet& labels, const char* side) {
    if (labels.empty()) {
        throw InterfaceError(std::string(side) + " parallel interface must be nonempty");
    }
    std::set<Label> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw InterfaceError(std::string("duplicate ") + side + " label '" + l + "'");
        }
    }
}

void checkInclusion(const Family& iface, const std::vector<std::size_t>& map, const Family& states,
                    const char* which) {
    if (iface.size() != map.size()) {
        throw InterfaceError(std::string(which) + " inclusion has " + std::to_string(map.size()) +
                             " entries for " + std::to_string(iface.size()) + " interface components");
    }
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] >= states.size()) {
            throw InterfaceError(std::string(which) + " inclusion " + std::to_string(i + 1) +
                                 " points outside the state family");
        }
        if (iface[i] != states[map[i]]) {
            throw TypeError(std::string(which) + " interface component " + std::to_string(i + 1) +
                            " is " + iface[i].str() + " but state component " +
                            std::to_string(map[i] + 1) + " is " + states[map[i]].str());
        }
    }
}

std::string labelSetStr(const LabelSet& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? "," : "") + labels[i];
    }
    return out + "}";
}

} // namespace

System::System(LabelSet left, LabelSet right, Family top, Family bottom, Family states,
               std::vector<std::size_t> phi, std::vector<std::size_t> psi,
               std::map<SpanKey, Span> spans)
    : left_(std::move(left)), right_(std::move(right)), top_(std::move(top)),
      bottom_(std::move(bottom)), states_(std::move(states)), phi_(std::move(phi)),
      psi_(std::move(psi)) {
    checkLabels(left_, "left");
    checkLabels(right_, "right");
    checkInclusion(top_, phi_, states_, "top");
    checkInclusion(bottom_, psi_, states_, "bottom");
    bySource_.resize(states_.size());
    for (auto& [key, s] : spans) {
        if (key.left >= left_.size() || key.right >= right_.size() || key.from >= states_.size() ||
            key.to >= states_.size()) {
            throw InterfaceError("span key out of range");
        }
        if (s.source() != states_[key.from] || s.target() != states_[key.to]) {
            throw TypeError("span " + s.name() + " at (" + left_[key.left] + "," + right_[key.right] +
                            ") must be " + states_[key.from].str() + " -> " + states_[key.to].str());
        }
        if (s.isEmpty()) {
            continue;
        }
        bySource_[key.from].push_back(key);
        spans_.emplace(key, std::move(s));
    }
    for (auto& keys : bySource_) {
        std::sort(keys.begin(), keys.end());
    }
}

Span System::span(std::size_t a, std::size_t b, std::size_t from, std::size_t to) const {
    if (auto it = spans_.find({a, b, from, to}); it != spans_.end()) {
        return it->second;
    }
    return Span::empty(states_.at(from), states_.at(to));
}

std::size_t System::leftIndex(const Label& label) const {
    auto it = std::find(left_.begin(), left_.end(), label);
    if (it == left_.end()) {
        throw InterfaceError("unknown left label '" + label + "' (labels are " + labelSetStr(left_) + ")");
    }
    return static_cast<std::size_t>(it - left_.begin());
}

std::size_t System::rightIndex(const Label& label) const {
    auto it = std::find(right_.begin(), right_.end(), label);
    if (it == right_.end()) {
        throw InterfaceError("unknown right label '" + label + "' (labels are " + labelSetStr(right_) +
                             ")");
    }
    return static_cast<std::size_t>(it - right_.begin());
}

bool System::isBottomComponent(std::size_t component) const {
    return std::find(psi_.begin(), psi_.end(), component) != psi_.end();
}

std::size_t System::bottomIndexOf(std::size_t component) const {
    auto it = std::find(psi_.begin(), psi_.end(), component);
    if (it == psi_.end()) {
        throw InternalError("component is not a bottom component");
    }
    return static_cast<std::size_t>(it - psi_.begin());
}

bool System::isPassive() const {
    const LabelSet trivial{kTrivialLabel};
    return left_ == trivial && right_ == trivial && spans_.empty();
}

std::vector<Move> System::successors(const StatePoint& p) const {
    if (p.component >= states_.size() || !contains(states_[p.component], p.value)) {
        throw TypeError("state " + p.value.str() + " is not in component " +
                        std::to_string(p.component + 1));
    }
    std::vector<Move> out;
    for (const auto& key : bySource_[p.component]) {
        for (auto& t : spans_.at(key).forward(p.value)) {
            out.push_back({key.left, key.right, key.to, std::move(t)});
        }
    }
    return out;
}

System constantSystem(ConstantKind kind, const Space& space) {
    const LabelSet triv{kTrivialLabel};
    switch (kind) {
    case ConstantKind::Eta:
        return System(triv, triv, {}, {space, space}, {space}, {}, {0, 0});
    case ConstantKind::Epsilon:
        return System(triv, triv, {space, space}, {}, {space}, {0, 0}, {});
    case ConstantKind::Codiag:
        return System(triv, triv, {space, space}, {space}, {space}, {0, 0}, {0});
    case ConstantKind::Ident:
        return System(triv, triv, {space}, {space}, {space}, {0}, {0});
    }
    throw InternalError("unknown constant");
}

Span predNN() {
    return Span::primitive("pred_{N,N}", Space::nat(), Space::nat(), [](const Value& v) {
        std::vector<Transition> out;
        if (v.natValue() > 0) {
            out.push_back({"pred", Value::nat(v.natValue() - 1)});
        }
        return out;
    });
}

Span predN1() {
    return Span::primitive("pred_{N,1}", Space::nat(), Space::unit(), [](const Value& v) {
        std::vector<Transition> out;
        if (v.natValue() == 0) {
            out.push_back({"pred", Value::star()});
        }
        return out;
    });
}

namespace {

Span succNN(std::string name) {
    return Span::primitive(std::move(name), Space::nat(), Space::nat(), [](const Value& v) {
        return std::vector<Transition>{{"succ", Value::nat(v.natValue() + 1)}};
    });
}

} // namespace

System basicSystem(const std::string& name) {
    const LabelSet triv{kTrivialLabel};
    const Space n = Space::nat();
    const Space one = Space::unit();
    if (name == "pred") {
        return System(triv, triv, {n}, {n, one}, {n, n, one}, {0}, {1, 2},
                      {{SpanKey{0, 0, 0, 1}, predNN()}, {SpanKey{0, 0, 0, 2}, predN1()}});
    }
    if (name == "succ") {
        return System(triv, triv, {n}, {n}, {n, n}, {0}, {1}, {{SpanKey{0, 0, 0, 1}, succNN("succ")}});
    }
    if (name == "succ_total") {
        Span zero = Span::primitive("succ_{1,N}", one, n, [](const Value&) {
            return std::vector<Transition>{{"succ", Value::nat(0)}};
        });
        return System(triv, triv, {n, one}, {n}, {n, one, n}, {0, 1}, {2},
                      {{SpanKey{0, 0, 0, 2}, succNN("succ_{N,N}")}, {SpanKey{0, 0, 1, 2}, zero}});
    }
    throw Error("unknown basic system '" + name + "' (expected pred, succ or succ_total)");
}

SpanMatrix systemMatrix(const System& g, std::size_t a, std::size_t b) {
    if (a >= g.left().size() || b >= g.right().size()) {
        throw InterfaceError("label index out of range");
    }
    SpanMatrix m(g.states(), g.states());
    for (const auto& [key, s] : g.spans()) {
        if (key.left == a && key.right == b) {
            m.set(key.to, key.from, s);
        }
    }
    return m;
}

SpanMatrix extendedMatrix(const System& g, std::size_t a, std::size_t b) {
    Family rows = g.bottom();
    rows.insert(rows.end(), g.states().begin(), g.states().end());
    Family cols = g.top();
    cols.insert(cols.end(), g.states().begin(), g.states().end());
    SpanMatrix m(rows, cols);
    const std::size_t l = g.bottom().size();
    const std::size_t k = g.top().size();
    for (std::size_t i = 0; i < k; ++i) {
        m.set(l + g.phi()[i], i, Span::identity(g.top()[i]));
    }
    for (std::size_t j = 0; j < l; ++j) {
        m.set(j, k + g.psi()[j], Span::identity(g.bottom()[j]));
    }
    const SpanMatrix data = systemMatrix(g, a, b);
    for (const auto& [idx, s] : data.entries()) {
        m.set(l + idx.first, k + idx.second, s);
    }
    return m;
}

std::size_t spanCount(const System& g) {
    return g.spans().size();
}

} // namespace csp
