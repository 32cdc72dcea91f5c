#pragma once

#include "csp/system.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace csp::lang {

struct Location {
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Program expression. `space` is absent only for a bare `id`, whose space is
/// inferred by the checker from the surrounding composite.
struct Expr {
    enum class Kind { Const, Basic, Ref, Par, Seq, LocalSeq, LocalSum, Prod };

    Kind kind = Kind::Const;
    ConstantKind constant = ConstantKind::Ident;
    std::optional<Space> space;
    std::string name; // Basic and Ref
    ExprPtr lhs;
    ExprPtr rhs;
    Location at;

    static ExprPtr makeConstant(ConstantKind c, std::optional<Space> s, Location at = {});
    static ExprPtr makeBasic(std::string name, Location at = {});
    static ExprPtr makeRef(std::string name, Location at = {});
    static ExprPtr makeBinary(Kind kind, ExprPtr lhs, ExprPtr rhs, Location at = {});
};

/// Structural equality, ignoring source locations.
bool sameTree(const Expr& a, const Expr& b);

/// One step of a machine transition rule. `coordinate` is 1-based; 0 means
/// the whole value.
struct RuleStep {
    enum class Op { Id, Succ, Pred, Zero, Pos, Lt, Ge, Eq, Add, Set, Is, Proj };

    Op op = Op::Id;
    std::uint64_t constant = 0;
    std::size_t coordinate = 0;
    Value value; // Set and Is
};

struct MachineTransition {
    Label left;
    Label right;
    std::string from;
    std::string to;
    std::vector<RuleStep> rule;
    Location at;
};

struct MachineDecl {
    std::string name;
    LabelSet left;
    LabelSet right;
    std::vector<std::string> top;
    std::vector<std::string> bottom;
    std::vector<std::pair<std::string, Space>> states;
    std::vector<MachineTransition> transitions;
    Location at;
};

struct Definition {
    std::string name;
    std::variant<ExprPtr, MachineDecl> body;
    Location at;
};

struct Program {
    std::vector<Definition> definitions;

    const Definition* find(std::string_view name) const;
};

/// Parses a whole `.csp` file. Throws SyntaxError with line and column.
Program parse(std::string_view text);
/// Parses a single space expression such as `N*N + 1`.
Space parseSpace(std::string_view text);

std::string ruleText(const std::vector<RuleStep>& rule);

/// Source text for an expression; bare identities are written as `id`.
std::string print(const Expr& e);
/// As print, but bare identities are written with their inferred space.
std::string printElaborated(const Expr& e, const std::map<const Expr*, Space>& inferred);
std::string print(const MachineDecl& m);
std::string print(const Program& p);

struct Signature {
    LabelSet left;
    LabelSet right;
    Family top;
    Family bottom;

    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signatureOf(const System& g);
std::string signatureStr(const Signature& s);

/// Builds the span family of a machine block. Rules are type-checked
/// against the source and target components.
System buildMachine(const MachineDecl& m);

/// Interface checker and evaluator over one program. Results are cached per
/// definition; cyclic references are rejected.
class Environment {
public:
    explicit Environment(Program program);

    const Program& program() const { return program_; }

    /// True for program definitions and for the generator names (pred, succ,
    /// succ_total), which check and evaluate accept as top-level names.
    bool defines(const std::string& name) const;

    /// Interface signature, computed without building any spans.
    Signature check(const std::string& name);
    System evaluate(const std::string& name);
    /// Evaluates a subexpression of a definition that has already been checked.
    System evaluate(const Expr& node) { return evalExpr(node); }

    /// Spaces inferred for bare identities (keyed by node), filled by check.
    const std::map<const Expr*, Space>& inferred() const { return inferred_; }

private:
    const Definition& lookup(const std::string& name, Location at) const;
    Signature checkExpr(const Expr& e, const std::optional<Family>& context);
    System evalExpr(const Expr& e);

    Program program_;
    std::map<std::string, Signature> signatures_;
    std::map<std::string, System> systems_;
    std::vector<std::string> active_;
    std::map<const Expr*, Space> inferred_;
};

} // namespace csp::lang
