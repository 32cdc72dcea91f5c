#include "csp/error.hpp"
#include "csp/lang.hpp"

#include <optional>

namespace csp::lang {

namespace {

std::string where(Location at) {
    return std::to_string(at.line) + ":" + std::to_string(at.column) + ": ";
}

/// Space reached after applying the rule to an element of `from`.
Space ruleType(const std::vector<RuleStep>& rule, const Space& from, const Space& to, Location at) {
    using Op = RuleStep::Op;
    Space cur = from;
    auto natAt = [&](std::size_t k, const std::string& step) {
        if (k == 0) {
            if (cur.kind() != Space::Kind::Nat) {
                throw TypeError(where(at) + "'" + step + "' needs N but the value is in " + cur.str());
            }
            return;
        }
        if (cur.kind() != Space::Kind::Prod || cur.parts().size() < k ||
            cur.parts()[k - 1].kind() != Space::Kind::Nat) {
            throw TypeError(where(at) + "'" + step + "' needs coordinate " + std::to_string(k) +
                            " to be N but the value is in " + cur.str());
        }
    };
    for (const auto& s : rule) {
        const std::string text = ruleText({s});
        switch (s.op) {
        case Op::Id:
            break;
        case Op::Succ:
        case Op::Pred:
        case Op::Zero:
        case Op::Pos:
        case Op::Lt:
        case Op::Ge:
        case Op::Eq:
        case Op::Add:
            natAt(s.coordinate, text);
            break;
        case Op::Set:
            if (!contains(to, s.value)) {
                throw TypeError(where(at) + "'" + text + "': " + s.value.str() + " is not in the target " +
                                to.str());
            }
            cur = to;
            break;
        case Op::Is:
            if (!contains(cur, s.value)) {
                throw TypeError(where(at) + "'" + text + "': " + s.value.str() + " is not in " + cur.str());
            }
            break;
        case Op::Proj:
            if (cur.kind() != Space::Kind::Prod || cur.parts().size() < s.coordinate) {
                throw TypeError(where(at) + "'" + text + "' needs a product with at least " +
                                std::to_string(s.coordinate) + " coordinates, found " + cur.str());
            }
            cur = Space(cur.parts()[s.coordinate - 1]);
            break;
        }
    }
    return cur;
}

std::optional<Value> applyRule(const std::vector<RuleStep>& rule, const Value& start) {
    using Op = RuleStep::Op;
    Value v = start;
    for (const auto& s : rule) {
        if (s.op == Op::Set) {
            v = s.value;
            continue;
        }
        if (s.op == Op::Is) {
            if (v != s.value) {
                return std::nullopt;
            }
            continue;
        }
        if (s.op == Op::Proj) {
            Value part = v.items()[s.coordinate - 1];
            v = std::move(part);
            continue;
        }
        if (s.op == Op::Id) {
            continue;
        }
        const std::uint64_t n = s.coordinate ? v.items()[s.coordinate - 1].natValue() : v.natValue();
        std::optional<std::uint64_t> out = n;
        switch (s.op) {
        case Op::Succ: out = n + 1; break;
        case Op::Pred: out = n > 0 ? std::optional<std::uint64_t>(n - 1) : std::nullopt; break;
        case Op::Zero: if (n != 0) out.reset(); break;
        case Op::Pos: if (n == 0) out.reset(); break;
        case Op::Lt: if (!(n < s.constant)) out.reset(); break;
        case Op::Ge: if (!(n >= s.constant)) out.reset(); break;
        case Op::Eq: if (n != s.constant) out.reset(); break;
        case Op::Add: out = n + s.constant; break;
        default: break;
        }
        if (!out) {
            return std::nullopt;
        }
        if (s.coordinate) {
            std::vector<Value> items = v.items();
            items[s.coordinate - 1] = Value::nat(*out);
            v = Value::tuple(std::move(items));
        } else {
            v = Value::nat(*out);
        }
    }
    return v;
}

std::size_t stateIndex(const MachineDecl& m, const std::string& name, Location at) {
    for (std::size_t i = 0; i < m.states.size(); ++i) {
        if (m.states[i].first == name) {
            return i;
        }
    }
    throw InterfaceError(where(at) + "machine " + m.name + " has no state '" + name + "'");
}

std::size_t labelIndex(const LabelSet& labels, const Label& l, const char* side, Location at) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == l) {
            return i;
        }
    }
    throw InterfaceError(where(at) + "'" + l + "' is not a " + side + " label");
}

} // namespace

System buildMachine(const MachineDecl& m) {
    Family states;
    for (std::size_t i = 0; i < m.states.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m.states[j].first == m.states[i].first) {
                throw InterfaceError(where(m.at) + "machine " + m.name + " declares state '" +
                                     m.states[i].first + "' twice");
            }
        }
        states.push_back(m.states[i].second);
    }
    Family top;
    Family bottom;
    std::vector<std::size_t> phi;
    std::vector<std::size_t> psi;
    for (const auto& s : m.top) {
        phi.push_back(stateIndex(m, s, m.at));
        top.push_back(states[phi.back()]);
    }
    for (const auto& s : m.bottom) {
        psi.push_back(stateIndex(m, s, m.at));
        bottom.push_back(states[psi.back()]);
    }
    std::map<SpanKey, Span> spans;
    for (const auto& t : m.transitions) {
        const SpanKey key{labelIndex(m.left, t.left, "left", t.at), labelIndex(m.right, t.right, "right", t.at),
                          stateIndex(m, t.from, t.at), stateIndex(m, t.to, t.at)};
        const Space& from = states[key.from];
        const Space& to = states[key.to];
        const Space reached = ruleType(t.rule, from, to, t.at);
        if (reached != to) {
            throw TypeError(where(t.at) + "rule '" + ruleText(t.rule) + "' maps " + from.str() + " to " +
                            reached.str() + " but state '" + t.to + "' is " + to.str());
        }
        const std::string name = ruleText(t.rule);
        Span s = Span::primitive(name, from, to, [rule = t.rule, name](const Value& v) {
            std::vector<Transition> out;
            if (auto w = applyRule(rule, v)) {
                out.push_back({name, std::move(*w)});
            }
            return out;
        });
        auto it = spans.find(key);
        if (it == spans.end()) {
            spans.emplace(key, std::move(s));
        } else {
            it->second = sum(it->second, s);
        }
    }
    try {
        return System(m.left, m.right, std::move(top), std::move(bottom), std::move(states), std::move(phi),
                      std::move(psi), std::move(spans));
    } catch (const TypeError& e) {
        throw TypeError(where(m.at) + "machine " + m.name + ": " + e.what());
    } catch (const InterfaceError& e) {
        throw InterfaceError(where(m.at) + "machine " + m.name + ": " + e.what());
    }
}

} // namespace csp::lang
