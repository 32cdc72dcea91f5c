#include "cli.hpp"

#include "csp/algebra.hpp"
#include "csp/error.hpp"
#include "csp/exec.hpp"
#include "csp/export.hpp"
#include "csp/lang.hpp"
#include "csp/oracle.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace csp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string command;
    std::string file;
    std::string name;
    std::vector<std::string> labels;
    std::string init;
    std::uint64_t natBound = 8;
    std::size_t depth = 50;
    std::size_t maxSteps = 10000;
    std::size_t top = 1;
    std::size_t maxStates = 256;
    std::string policy = "deterministic";
    std::string format = "text";
    std::string out;
};

/// A failed cross-check against the graph constructions.
struct OracleMismatch : InternalError {
    using InternalError::InternalError;
};

bool colorEnabled() {
    const char* v = std::getenv("CSP_COLOR");
    return v && std::string(v) == "1";
}

std::string diagnostic(const std::string& file, const std::string& message) {
    std::string where = file.empty() ? "csp" : file;
    const bool located = !message.empty() && message[0] >= '0' && message[0] <= '9';
    const std::string head = colorEnabled() ? "\033[1;31merror\033[0m: " : "error: ";
    return head + where + (located ? ":" : ": ") + message;
}

lang::Program load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file");
    }
    std::stringstream text;
    text << in.rdbuf();
    return lang::parse(text.str());
}

std::string point(const StatePoint& p) {
    return "U" + std::to_string(p.component + 1) + " = " + p.value.str();
}

std::size_t labelArg(const LabelSet& labels, const std::vector<std::string>& given, std::size_t k,
                     const char* side) {
    if (given.size() <= k) {
        return 0;
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == given[k]) {
            return i;
        }
    }
    std::string known;
    for (const auto& l : labels) {
        known += (known.empty() ? "" : ", ") + l;
    }
    throw InterfaceError("'" + given[k] + "' is not a " + side + " label (expected one of " + known + ")");
}

bool hasBareIdentity(const lang::Expr& e) {
    if (e.kind == lang::Expr::Kind::Const) {
        return !e.space.has_value();
    }
    return (e.lhs && hasBareIdentity(*e.lhs)) || (e.rhs && hasBareIdentity(*e.rhs));
}

std::string cmdCheck(const Config& c, lang::Environment& env) {
    std::vector<std::string> names;
    if (!c.name.empty()) {
        names.push_back(c.name);
    } else {
        for (const auto& d : env.program().definitions) {
            names.push_back(d.name);
        }
    }
    Json all = Json::array();
    std::string text;
    for (const auto& n : names) {
        const lang::Signature s = env.check(n);
        const lang::Definition* d = env.program().find(n);
        std::string elaborated;
        if (const auto* e = d ? std::get_if<lang::ExprPtr>(&d->body) : nullptr; e && hasBareIdentity(**e)) {
            elaborated = lang::printElaborated(**e, env.inferred());
        }
        text += n + ": " + lang::signatureStr(s) + "\n";
        if (!elaborated.empty()) {
            text += "  = " + elaborated + "\n";
        }
        Json j;
        j["name"] = n;
        j["left"] = s.left;
        j["right"] = s.right;
        j["top"] = Json::array();
        for (const auto& x : s.top) {
            j["top"].push_back(x.str());
        }
        j["bottom"] = Json::array();
        for (const auto& y : s.bottom) {
            j["bottom"].push_back(y.str());
        }
        if (!elaborated.empty()) {
            j["elaborated"] = elaborated;
        }
        all.push_back(std::move(j));
    }
    return c.format == "json" ? all.dump(2) + "\n" : text;
}

std::string cmdRun(const Config& c, lang::Environment& env) {
    const System g = env.evaluate(c.name);
    if (c.top == 0) {
        throw TypeError("--top is 1-based");
    }
    Value v;
    try {
        v = parseValue(c.init);
    } catch (const SyntaxError& e) {
        throw Error("--init \"" + c.init + "\": " + e.what());
    }
    const Trace t = run(g, c.top - 1, v, c.maxSteps,
                        c.policy == "first" ? Policy::FirstEnabled : Policy::Deterministic);
    if (c.format == "json") {
        return traceJson(t);
    }
    std::string out = "start top[" + std::to_string(c.top) + "] = " + v.str() + " at U" +
                      std::to_string(t.initial.component + 1) + "\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const TraceStep& s = t.steps[i];
        out += std::to_string(i + 1) + ". (" + s.left + "," + s.right + ") " + s.witness + " -> " + point(s.next) +
               "\n";
    }
    const std::string steps = std::to_string(t.steps.size()) + (t.steps.size() == 1 ? " step" : " steps");
    switch (t.outcome.kind) {
    case Outcome::Kind::AtBottomInterface:
        out += "halted after " + steps + "\n";
        out += "bottom[" + std::to_string(t.outcome.bottomIndex + 1) + "] = " + t.outcome.value.str() + "\n";
        break;
    case Outcome::Kind::Stuck:
        out += "stuck after " + steps + " at " + point(t.steps.empty() ? t.initial : t.steps.back().next) + "\n";
        break;
    case Outcome::Kind::StepBudgetExhausted:
        out += "step budget exhausted after " + steps + " at " +
               point(t.steps.empty() ? t.initial : t.steps.back().next) + "\n";
        break;
    }
    return out;
}

std::string cmdReach(const Config& c, lang::Environment& env) {
    const System g = env.evaluate(c.name);
    ReachOptions o;
    o.natBound = c.natBound;
    o.depthBound = c.depth;
    const ReachReport r = reach(g, o);
    if (c.format == "json") {
        return reportJson(r);
    }
    auto points = [](const std::vector<StatePoint>& ps) {
        if (ps.empty()) {
            return std::string("none");
        }
        std::string s;
        for (const auto& p : ps) {
            s += (s.empty() ? "" : ", ") + point(p);
        }
        return s;
    };
    std::string out;
    out += "bounds: nat " + std::to_string(r.natBound) + ", depth " + std::to_string(r.depthBound) + "\n";
    out += "visited: " + std::to_string(r.visited) + "\n";
    out += "transitions: " + std::to_string(r.transitions) + "\n";
    out += "clipped above bound: " + std::to_string(r.clipped) + "\n";
    out += "unexpanded at depth bound: " + std::to_string(r.depthFrontier) + "\n";
    out += "deadlocked: " + points(r.deadlocked) + "\n";
    out += "bottom hits: " + points(r.bottomHits) + "\n";
    for (const auto& [labels, count] : r.labelCounts) {
        out += "label (" + labels.first + "," + labels.second + "): " + std::to_string(count) + "\n";
    }
    return out;
}

std::string cmdDot(const Config& c, lang::Environment& env) {
    const System g = env.evaluate(c.name);
    if (c.labels.empty()) {
        return toDot(g, c.name);
    }
    if (c.labels.size() != 2) {
        throw Error("dot takes either no label pair or both labels");
    }
    return toDot(g, c.name,
                 std::make_pair(labelArg(g.left(), c.labels, 0, "left"), labelArg(g.right(), c.labels, 1, "right")));
}

std::string cmdMatrix(const Config& c, lang::Environment& env) {
    const System g = env.evaluate(c.name);
    if (c.labels.size() == 1) {
        throw Error("matrix takes either no label pair or both labels");
    }
    return matrixTable(g, c.name, labelArg(g.left(), c.labels, 0, "left"), labelArg(g.right(), c.labels, 1, "right"));
}

SpanMatrix operandMatrix(const System& g, const System& other, std::size_t a, std::size_t b) {
    if (g.isPassive() && !other.isPassive()) {
        return identityMatrix(g.states());
    }
    return systemMatrix(g, a, b);
}

std::string cmdOracle(const Config& c, lang::Environment& env) {
    const System g = env.evaluate(c.name);
    const lang::Definition* d = env.program().find(c.name);
    const auto* body = d ? std::get_if<lang::ExprPtr>(&d->body) : nullptr;
    using Kind = lang::Expr::Kind;
    if (!body || !(*body)->lhs) {
        throw Error("definition '" + c.name + "' is not a composite; nothing to cross-check");
    }
    const lang::Expr& e = **body;
    const System l = env.evaluate(*e.lhs);
    const System r = env.evaluate(*e.rhs);
    const std::string bound = " at nat bound " + std::to_string(c.natBound);

    if (e.kind == Kind::Par || e.kind == Kind::Seq || e.kind == Kind::LocalSeq) {
        const oracle::OpenGraph tl = oracle::truncate(l, c.natBound);
        const oracle::OpenGraph tr = oracle::truncate(r, c.natBound);
        const oracle::OpenGraph expected = e.kind == Kind::Par
                                               ? oracle::parallelOracle(tl, tr).graph
                                               : oracle::sequentialOracle(tl, tr, e.kind == Kind::LocalSeq).graph;
        const oracle::OpenGraph actual = oracle::truncate(g, c.natBound);
        const char* what = e.kind == Kind::Par ? "parallel composite vs pullback of the operands"
                                               : "sequential composite vs pushout of the operands";
        if (!oracle::graphIso(actual, expected, c.maxStates)) {
            throw OracleMismatch(std::string(what) + ": not isomorphic" + bound);
        }
        return std::string(what) + ": isomorphic" + bound + " (" + std::to_string(actual.graph.states) +
               " states, " + std::to_string(actual.graph.edges.size()) + " transitions)\n";
    }
    if (e.kind == Kind::Prod) {
        std::size_t checked = 0;
        for (std::size_t a = 0; a < l.left().size(); ++a) {
            for (std::size_t b = 0; b < l.right().size(); ++b) {
                for (std::size_t p = 0; p < r.left().size(); ++p) {
                    for (std::size_t q = 0; q < r.right().size(); ++q) {
                        const SpanMatrix want = matTensor(operandMatrix(l, r, a, b), operandMatrix(r, l, p, q));
                        const SpanMatrix got =
                            systemMatrix(g, pairIndex(a, p, l.left().size()), pairIndex(b, q, l.right().size()));
                        if (!isoAtBound(got, want, c.natBound)) {
                            throw OracleMismatch("product matrix differs from the tensor of the operand matrices "
                                                 "at labels (" + g.left()[pairIndex(a, p, l.left().size())] + "," +
                                                 g.right()[pairIndex(b, q, l.right().size())] + ")" + bound);
                        }
                        ++checked;
                    }
                }
            }
        }
        return "product matrices equal the tensor of the operand matrices" + bound + " (" +
               std::to_string(checked) + " label pairs)\n";
    }
    throw Error("no graph construction to cross-check a local sum against");
}

int execute(const Config& c, std::ostream& out) {
    lang::Environment env(load(c.file));
    if (!c.name.empty() && !env.defines(c.name)) {
        throw Error("undefined name '" + c.name + "'");
    }
    std::string result;
    if (c.command == "check") {
        result = cmdCheck(c, env);
    } else if (c.command == "run") {
        result = cmdRun(c, env);
    } else if (c.command == "reach") {
        result = cmdReach(c, env);
    } else if (c.command == "dot") {
        result = cmdDot(c, env);
    } else if (c.command == "matrix") {
        result = cmdMatrix(c, env);
    } else {
        result = cmdOracle(c, env);
    }
    if (c.out.empty()) {
        out << result;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f || !(f << result)) {
            throw Error("cannot write " + c.out);
        }
    }
    return 0;
}

} // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Cospan-span systems: check, run and inspect .csp programs", "csp"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool nameRequired) {
        sub->add_option("file", c.file, "program file (.csp)")->required();
        auto* name = sub->add_option("name", c.name, "definition name");
        if (nameRequired) {
            name->required();
        }
        sub->add_option("--out", c.out, "write output to this path");
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    };

    auto* check = app.add_subcommand("check", "print interface signatures");
    common(check, false);

    auto* runCmd = app.add_subcommand("run", "run from a top interface point");
    common(runCmd, true);
    runCmd->add_option("--init", c.init, "start value, e.g. \"(2,3)\"")->required();
    runCmd->add_option("--top", c.top, "top interface index (1-based)")->capture_default_str();
    runCmd->add_option("--max-steps", c.maxSteps, "step budget")->capture_default_str();
    runCmd->add_option("--policy", c.policy, "deterministic or first")
        ->check(CLI::IsMember({"deterministic", "first"}))
        ->capture_default_str();

    auto* reachCmd = app.add_subcommand("reach", "bounded breadth-first exploration");
    common(reachCmd, true);
    reachCmd->add_option("--nat-bound", c.natBound, "largest natural explored")->capture_default_str();
    reachCmd->add_option("--depth", c.depth, "depth bound")->capture_default_str();

    auto* dot = app.add_subcommand("dot", "labelled automaton in DOT");
    common(dot, true);
    dot->add_option("labels", c.labels, "optional left and right label")->expected(0, 2);

    auto* matrix = app.add_subcommand("matrix", "extended span matrix for a label pair");
    common(matrix, true);
    matrix->add_option("labels", c.labels, "left and right label (default: the first of each)")->expected(0, 2);

    auto* oracleCmd = app.add_subcommand("oracle", "cross-check a composite against explicit graph constructions");
    common(oracleCmd, true);
    oracleCmd->add_option("--nat-bound", c.natBound, "truncation bound")->capture_default_str();
    oracleCmd->add_option("--max-states", c.maxStates, "largest graph the isomorphism search accepts")
        ->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    for (auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
    }

    try {
        return execute(c, out);
    } catch (const OracleMismatch& e) {
        err << diagnostic(c.file, e.what()) << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << diagnostic(c.file, std::string("internal error: ") + e.what()) << "\n";
        return 2;
    } catch (const Error& e) {
        err << diagnostic(c.file, e.what()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << diagnostic(c.file, std::string("internal error: ") + e.what()) << "\n";
        return 2;
    }
}

} // namespace csp::cli
