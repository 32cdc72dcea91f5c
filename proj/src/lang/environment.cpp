#include "csp/algebra.hpp"
#include "csp/error.hpp"
#include "csp/lang.hpp"

#include <algorithm>

namespace csp::lang {

namespace {

std::string where(Location at) {
    return std::to_string(at.line) + ":" + std::to_string(at.column) + ": ";
}

std::string labelsStr(const LabelSet& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? "," : "") + labels[i];
    }
    return out + "}";
}

const char* opName(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::Par: return "parallel composition";
    case Expr::Kind::Seq: return "sequential composition";
    case Expr::Kind::LocalSeq: return "local sequential composition";
    case Expr::Kind::LocalSum: return "local sum";
    case Expr::Kind::Prod: return "product";
    default: return "expression";
    }
}

bool isGenerator(const std::string& name) {
    return name == "pred" || name == "succ" || name == "succ_total";
}

bool needsContext(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Const:
        return !e.space.has_value();
    case Expr::Kind::Seq:
    case Expr::Kind::LocalSeq:
        return needsContext(*e.lhs);
    case Expr::Kind::LocalSum:
        return needsContext(*e.lhs) || needsContext(*e.rhs);
    default:
        return false;
    }
}

Signature constantSignature(ConstantKind k, const Space& s) {
    const LabelSet triv{kTrivialLabel};
    switch (k) {
    case ConstantKind::Eta: return {triv, triv, {}, {s, s}};
    case ConstantKind::Epsilon: return {triv, triv, {s, s}, {}};
    case ConstantKind::Codiag: return {triv, triv, {s, s}, {s}};
    case ConstantKind::Ident: return {triv, triv, {s}, {s}};
    }
    throw InternalError("unknown constant");
}

Signature machineSignature(const MachineDecl& m) {
    Signature s{m.left, m.right, {}, {}};
    auto spaceOf = [&](const std::string& name) {
        for (const auto& [n, sp] : m.states) {
            if (n == name) {
                return sp;
            }
        }
        throw InterfaceError(where(m.at) + "machine " + m.name + " has no state '" + name + "'");
    };
    for (const auto& t : m.top) {
        s.top.push_back(spaceOf(t));
    }
    for (const auto& b : m.bottom) {
        s.bottom.push_back(spaceOf(b));
    }
    return s;
}

void requireGlue(const Family& bottom, const Family& top, const Expr& e) {
    const std::string head = where(e.at) + opName(e.kind) + ": bottom interface " + familyStr(bottom) +
                             " of the left operand does not match top interface " + familyStr(top) +
                             " of the right operand";
    if (bottom.size() != top.size()) {
        throw InterfaceError(head + " (" + std::to_string(bottom.size()) + " vs " + std::to_string(top.size()) +
                             " components)");
    }
    for (std::size_t i = 0; i < bottom.size(); ++i) {
        if (bottom[i] != top[i]) {
            throw InterfaceError(head + " (component " + std::to_string(i + 1) + ": " + bottom[i].str() +
                                 " vs " + top[i].str() + ")");
        }
    }
}

void requireSameLabels(const Signature& l, const Signature& r, const Expr& e) {
    if (l.left != r.left || l.right != r.right) {
        throw InterfaceError(where(e.at) + opName(e.kind) + " needs equal parallel interfaces: left operand " +
                             labelsStr(l.left) + "/" + labelsStr(l.right) + ", right operand " +
                             labelsStr(r.left) + "/" + labelsStr(r.right));
    }
}

Family concat(Family a, const Family& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

Environment::Environment(Program program) : program_(std::move(program)) {}

const Definition& Environment::lookup(const std::string& name, Location at) const {
    if (const Definition* d = program_.find(name)) {
        return *d;
    }
    throw Error(where(at) + "undefined name '" + name + "'");
}

bool Environment::defines(const std::string& name) const {
    return program_.find(name) || isGenerator(name);
}

Signature Environment::check(const std::string& name) {
    if (auto it = signatures_.find(name); it != signatures_.end()) {
        return it->second;
    }
    const Definition* d = program_.find(name);
    if (!d && isGenerator(name)) {
        return signatureOf(basicSystem(name));
    }
    if (!d) {
        throw Error("undefined name '" + name + "'");
    }
    if (std::find(active_.begin(), active_.end(), name) != active_.end()) {
        throw Error(where(d->at) + "definition '" + name + "' refers to itself");
    }
    active_.push_back(name);
    Signature s;
    try {
        if (const auto* e = std::get_if<ExprPtr>(&d->body)) {
            s = checkExpr(**e, std::nullopt);
        } else {
            s = machineSignature(std::get<MachineDecl>(d->body));
        }
    } catch (...) {
        active_.pop_back();
        throw;
    }
    active_.pop_back();
    signatures_.emplace(name, s);
    return s;
}

Signature Environment::checkExpr(const Expr& e, const std::optional<Family>& context) {
    switch (e.kind) {
    case Expr::Kind::Const: {
        if (e.space) {
            return constantSignature(e.constant, *e.space);
        }
        if (!context || context->size() != 1) {
            throw TypeError(where(e.at) + "cannot infer the space of 'id' here" +
                            (context ? " (the incoming interface " + familyStr(*context) + " is not a single space)"
                                     : std::string()) +
                            "; write id(<space>)");
        }
        inferred_[&e] = context->front();
        return constantSignature(ConstantKind::Ident, context->front());
    }
    case Expr::Kind::Basic:
        return signatureOf(basicSystem(e.name));
    case Expr::Kind::Ref:
        lookup(e.name, e.at);
        return check(e.name);
    case Expr::Kind::Par: {
        const Signature l = checkExpr(*e.lhs, std::nullopt);
        const Signature r = checkExpr(*e.rhs, std::nullopt);
        if (l.right != r.left) {
            throw InterfaceError(where(e.at) + "parallel composition: right labels " + labelsStr(l.right) +
                                 " of the left operand differ from left labels " + labelsStr(r.left) +
                                 " of the right operand");
        }
        return {l.left, r.right, distributeFamilies(l.top, r.top), distributeFamilies(l.bottom, r.bottom)};
    }
    case Expr::Kind::Prod: {
        const Signature l = checkExpr(*e.lhs, std::nullopt);
        const Signature r = checkExpr(*e.rhs, std::nullopt);
        return {productLabels(l.left, r.left), productLabels(l.right, r.right), distributeFamilies(l.top, r.top),
                distributeFamilies(l.bottom, r.bottom)};
    }
    case Expr::Kind::Seq:
    case Expr::Kind::LocalSeq: {
        const Signature l = checkExpr(*e.lhs, context);
        const Signature r = checkExpr(*e.rhs, l.bottom);
        if (e.kind == Expr::Kind::LocalSeq) {
            requireSameLabels(l, r, e);
        }
        requireGlue(l.bottom, r.top, e);
        if (e.kind == Expr::Kind::LocalSeq) {
            return {l.left, l.right, l.top, r.bottom};
        }
        return {sumLabels(l.left, r.left), sumLabels(l.right, r.right), l.top, r.bottom};
    }
    case Expr::Kind::LocalSum: {
        Signature l;
        Signature r;
        auto slice = [&](std::size_t from, std::size_t count) -> std::optional<Family> {
            if (!context || from + count > context->size()) {
                return std::nullopt;
            }
            return Family(context->begin() + static_cast<std::ptrdiff_t>(from),
                          context->begin() + static_cast<std::ptrdiff_t>(from + count));
        };
        const std::size_t width = context ? context->size() : 0;
        if (!needsContext(*e.lhs)) {
            l = checkExpr(*e.lhs, std::nullopt);
            r = checkExpr(*e.rhs, width >= l.top.size() ? slice(l.top.size(), width - l.top.size()) : std::nullopt);
        } else if (!needsContext(*e.rhs)) {
            r = checkExpr(*e.rhs, std::nullopt);
            l = checkExpr(*e.lhs, width >= r.top.size() ? slice(0, width - r.top.size()) : std::nullopt);
        } else if (e.lhs->kind == Expr::Kind::Const) {
            l = checkExpr(*e.lhs, slice(0, 1));
            r = checkExpr(*e.rhs, width >= 1 ? slice(1, width - 1) : std::nullopt);
        } else {
            throw TypeError(where(e.at) + "local sum: cannot split the incoming interface between two operands "
                                          "that both contain a bare 'id'; give one of them a space");
        }
        requireSameLabels(l, r, e);
        return {l.left, l.right, concat(l.top, r.top), concat(l.bottom, r.bottom)};
    }
    }
    throw InternalError("unknown expression kind");
}

System Environment::evaluate(const std::string& name) {
    const Signature expected = check(name);
    if (auto it = systems_.find(name); it != systems_.end()) {
        return it->second;
    }
    if (!program_.find(name) && isGenerator(name)) {
        return basicSystem(name);
    }
    const Definition& d = lookup(name, {});
    System g = std::holds_alternative<ExprPtr>(d.body) ? evalExpr(*std::get<ExprPtr>(d.body))
                                                       : buildMachine(std::get<MachineDecl>(d.body));
    if (signatureOf(g) != expected) {
        throw InternalError("evaluation of '" + name + "' produced " + signatureStr(signatureOf(g)) +
                            " but the checker computed " + signatureStr(expected));
    }
    systems_.emplace(name, g);
    return g;
}

System Environment::evalExpr(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Const:
        return constantSystem(e.constant, e.space ? *e.space : inferred_.at(&e));
    case Expr::Kind::Basic:
        return basicSystem(e.name);
    case Expr::Kind::Ref:
        return evaluate(e.name);
    case Expr::Kind::Par:
        return parallel(evalExpr(*e.lhs), evalExpr(*e.rhs));
    case Expr::Kind::Seq:
        return sequential(evalExpr(*e.lhs), evalExpr(*e.rhs));
    case Expr::Kind::LocalSeq:
        return localSequential(evalExpr(*e.lhs), evalExpr(*e.rhs));
    case Expr::Kind::LocalSum:
        return localSum(evalExpr(*e.lhs), evalExpr(*e.rhs));
    case Expr::Kind::Prod:
        return product(evalExpr(*e.lhs), evalExpr(*e.rhs));
    }
    throw InternalError("unknown expression kind");
}

} // namespace csp::lang
