#include "csp/lang.hpp"

namespace csp::lang {

namespace {

int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::LocalSum: return 1;
    case Expr::Kind::Seq: return 2;
    case Expr::Kind::LocalSeq: return 3;
    case Expr::Kind::Par: return 4;
    case Expr::Kind::Prod: return 5;
    default: return 6;
    }
}

const char* opText(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::LocalSum: return " (+) ";
    case Expr::Kind::Seq: return " o ";
    case Expr::Kind::LocalSeq: return " ; ";
    case Expr::Kind::Par: return " || ";
    case Expr::Kind::Prod: return " * ";
    default: return " ";
    }
}

const char* constantName(ConstantKind c) {
    switch (c) {
    case ConstantKind::Eta: return "eta";
    case ConstantKind::Epsilon: return "eps";
    case ConstantKind::Codiag: return "codiag";
    case ConstantKind::Ident: return "id";
    }
    return "id";
}

std::string render(const Expr& e, const std::map<const Expr*, Space>* inferred) {
    switch (e.kind) {
    case Expr::Kind::Const: {
        std::optional<Space> s = e.space;
        if (!s && inferred) {
            if (auto it = inferred->find(&e); it != inferred->end()) {
                s = it->second;
            }
        }
        return s ? std::string(constantName(e.constant)) + "(" + s->str() + ")" : "id";
    }
    case Expr::Kind::Basic:
    case Expr::Kind::Ref:
        return e.name;
    default: {
        const int p = precedence(e.kind);
        std::string l = render(*e.lhs, inferred);
        std::string r = render(*e.rhs, inferred);
        if (precedence(e.lhs->kind) < p) {
            l = "(" + l + ")";
        }
        if (precedence(e.rhs->kind) <= p) {
            r = "(" + r + ")";
        }
        return l + opText(e.kind) + r;
    }
    }
}

std::string labelList(const LabelSet& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? ", " : "") + labels[i];
    }
    return out + "}";
}

std::string nameList(const std::vector<std::string>& names) {
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i ? ", " : "") + names[i];
    }
    return out + "]";
}

std::string at(std::size_t coordinate) {
    return coordinate ? " @" + std::to_string(coordinate) : "";
}

} // namespace

std::string ruleText(const std::vector<RuleStep>& rule) {
    using Op = RuleStep::Op;
    std::string out;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const RuleStep& s = rule[i];
        std::string step;
        switch (s.op) {
        case Op::Id: step = "id"; break;
        case Op::Succ: step = "succ" + at(s.coordinate); break;
        case Op::Pred: step = "pred" + at(s.coordinate); break;
        case Op::Zero: step = "zero?" + at(s.coordinate); break;
        case Op::Pos: step = "pos?" + at(s.coordinate); break;
        case Op::Lt: step = "lt " + std::to_string(s.constant) + at(s.coordinate); break;
        case Op::Ge: step = "ge " + std::to_string(s.constant) + at(s.coordinate); break;
        case Op::Eq: step = "eq " + std::to_string(s.constant) + at(s.coordinate); break;
        case Op::Add: step = "add " + std::to_string(s.constant) + at(s.coordinate); break;
        case Op::Set: step = "set " + s.value.str(); break;
        case Op::Is: step = "is " + s.value.str(); break;
        case Op::Proj: step = "proj " + std::to_string(s.coordinate); break;
        }
        out += (i ? ", " : "") + step;
    }
    return out;
}

std::string print(const Expr& e) {
    return render(e, nullptr);
}

std::string printElaborated(const Expr& e, const std::map<const Expr*, Space>& inferred) {
    return render(e, &inferred);
}

std::string print(const MachineDecl& m) {
    std::string out = "machine " + m.name + " {\n";
    out += "  left " + labelList(m.left) + "\n";
    out += "  right " + labelList(m.right) + "\n";
    out += "  top " + nameList(m.top) + "\n";
    out += "  bottom " + nameList(m.bottom) + "\n";
    out += "  states {";
    for (std::size_t i = 0; i < m.states.size(); ++i) {
        out += (i ? ", " : " ") + m.states[i].first + ": " + m.states[i].second.str();
    }
    out += " }\n";
    for (const auto& t : m.transitions) {
        out += "  on (" + t.left + ", " + t.right + ") from " + t.from + " to " + t.to + " : " + ruleText(t.rule) +
               "\n";
    }
    return out + "}\n";
}

std::string print(const Program& p) {
    std::string out;
    for (const auto& d : p.definitions) {
        if (const auto* e = std::get_if<ExprPtr>(&d.body)) {
            out += "def " + d.name + " = " + print(**e) + "\n";
        } else {
            out += print(std::get<MachineDecl>(d.body));
        }
    }
    return out;
}

std::string signatureStr(const Signature& s) {
    return "left " + labelList(s.left) + ", right " + labelList(s.right) + ", top " + familyStr(s.top) +
           ", bottom " + familyStr(s.bottom);
}

Signature signatureOf(const System& g) {
    return {g.left(), g.right(), g.top(), g.bottom()};
}

} // namespace csp::lang
