#include "csp/error.hpp"
#include "csp/lang.hpp"

#include <cctype>
#include <set>

namespace csp::lang {

ExprPtr Expr::makeConstant(ConstantKind c, std::optional<Space> s, Location at) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Const;
    e->constant = c;
    e->space = std::move(s);
    e->at = at;
    return e;
}

ExprPtr Expr::makeBasic(std::string name, Location at) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Basic;
    e->name = std::move(name);
    e->at = at;
    return e;
}

ExprPtr Expr::makeRef(std::string name, Location at) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Ref;
    e->name = std::move(name);
    e->at = at;
    return e;
}

ExprPtr Expr::makeBinary(Kind kind, ExprPtr lhs, ExprPtr rhs, Location at) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    e->at = at;
    return e;
}

bool sameTree(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case Expr::Kind::Const:
        return a.constant == b.constant && a.space == b.space;
    case Expr::Kind::Basic:
    case Expr::Kind::Ref:
        return a.name == b.name;
    default:
        return sameTree(*a.lhs, *b.lhs) && sameTree(*a.rhs, *b.rhs);
    }
}

const Definition* Program::find(std::string_view name) const {
    for (const auto& d : definitions) {
        if (d.name == name) {
            return &d;
        }
    }
    return nullptr;
}

namespace {

enum class Tok {
    Name,
    Number,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Equals,
    Star,
    Plus,
    Semi,
    Bars,
    LocalSum,
    Hash,
    At,
    End
};

struct Token {
    Tok kind;
    std::string text;
    Location at;
    std::size_t offset;
    std::size_t length;
};

const char* tokName(Tok t) {
    switch (t) {
    case Tok::Name: return "name";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Semi: return "';'";
    case Tok::Bars: return "'||'";
    case Tok::LocalSum: return "'(+)'";
    case Tok::Hash: return "'#'";
    case Tok::At: return "'@'";
    case Tok::End: return "end of input";
    }
    return "token";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        const Location at{line, col};
        const std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            if (j < text.size() && text[j] == '?') {
                ++j;
            }
            out.push_back({Tok::Name, std::string(text.substr(i, j - i)), at, start, j - i});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            if (j - i > 18) {
                throw SyntaxError("number too large", at.line, at.column);
            }
            out.push_back({Tok::Number, std::string(text.substr(i, j - i)), at, start, j - i});
            advance(j - i);
            continue;
        }
        if (text.substr(i, 3) == "(+)") {
            out.push_back({Tok::LocalSum, "(+)", at, start, 3});
            advance(3);
            continue;
        }
        if (text.substr(i, 2) == "||") {
            out.push_back({Tok::Bars, "||", at, start, 2});
            advance(2);
            continue;
        }
        Tok kind;
        switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case ',': kind = Tok::Comma; break;
        case ':': kind = Tok::Colon; break;
        case '=': kind = Tok::Equals; break;
        case '*': kind = Tok::Star; break;
        case '+': kind = Tok::Plus; break;
        case ';': kind = Tok::Semi; break;
        case '#': kind = Tok::Hash; break;
        case '@': kind = Tok::At; break;
        default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", at.line, at.column);
        }
        out.push_back({kind, std::string(1, c), at, start, 1});
        advance(1);
    }
    out.push_back({Tok::End, "", {line, col}, text.size(), 0});
    return out;
}

const std::set<std::string>& keywords() {
    static const std::set<std::string> k{"def", "machine", "eta", "eps", "codiag", "id", "pred", "succ",
                                         "succ_total", "o"};
    return k;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text), toks_(lex(text)) {}

    Program program() {
        Program p;
        std::set<std::string> names;
        while (!at(Tok::End)) {
            const Token& head = peek();
            Definition d;
            if (isName("def")) {
                next();
                d.at = head.at;
                d.name = defName();
                expect(Tok::Equals);
                d.body = expr();
                if (!at(Tok::End) && !isName("def") && !isName("machine")) {
                    fail("expected an operator or the next definition, found " + describe(peek()));
                }
            } else if (isName("machine")) {
                MachineDecl m = machine();
                d.at = m.at;
                d.name = m.name;
                d.body = std::move(m);
            } else {
                fail("expected 'def' or 'machine', found " + describe(head));
            }
            if (!names.insert(d.name).second) {
                throw SyntaxError("duplicate definition '" + d.name + "'", d.at.line, d.at.column);
            }
            p.definitions.push_back(std::move(d));
        }
        return p;
    }

    Space spaceOnly() {
        Space s = space();
        if (!at(Tok::End)) {
            fail("unexpected " + describe(peek()) + " after space");
        }
        return s;
    }

private:
    // ---- tokens

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool at(Tok t) const { return peek().kind == t; }
    bool isName(std::string_view word) const { return at(Tok::Name) && peek().text == word; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::Name || t.kind == Tok::Number) {
            return "'" + t.text + "'";
        }
        return tokName(t.kind);
    }

    [[noreturn]] void fail(const std::string& msg) const { failAt(msg, peek().at); }
    [[noreturn]] static void failAt(const std::string& msg, Location at) {
        throw SyntaxError(msg, at.line, at.column);
    }

    const Token& expect(Tok t) {
        if (!at(t)) {
            fail(std::string("expected ") + tokName(t) + ", found " + describe(peek()));
        }
        return next();
    }

    void expectWord(std::string_view word) {
        if (!isName(word)) {
            fail("expected '" + std::string(word) + "', found " + describe(peek()));
        }
        next();
    }

    void close(Tok t, const Token& open) {
        if (!at(t)) {
            failAt(std::string("unclosed ") + tokName(open.kind) + ": expected " + tokName(t) + ", found " +
                       describe(peek()),
                   open.at);
        }
        next();
    }

    std::string name() { return expect(Tok::Name).text; }

    std::string defName() {
        const Token& t = expect(Tok::Name);
        if (keywords().count(t.text)) {
            failAt("'" + t.text + "' is a keyword and cannot name a definition", t.at);
        }
        return t.text;
    }

    std::uint64_t number() { return std::stoull(expect(Tok::Number).text); }

    // ---- expressions

    ExprPtr expr() {
        ExprPtr l = seqExpr();
        while (at(Tok::LocalSum)) {
            const Location op = next().at;
            l = Expr::makeBinary(Expr::Kind::LocalSum, l, seqExpr(), op);
        }
        return l;
    }

    ExprPtr seqExpr() {
        ExprPtr l = localSeqExpr();
        while (isName("o")) {
            const Location op = next().at;
            l = Expr::makeBinary(Expr::Kind::Seq, l, localSeqExpr(), op);
        }
        return l;
    }

    ExprPtr localSeqExpr() {
        ExprPtr l = parExpr();
        while (at(Tok::Semi)) {
            const Location op = next().at;
            l = Expr::makeBinary(Expr::Kind::LocalSeq, l, parExpr(), op);
        }
        return l;
    }

    ExprPtr parExpr() {
        ExprPtr l = prodExpr();
        while (at(Tok::Bars)) {
            const Location op = next().at;
            l = Expr::makeBinary(Expr::Kind::Par, l, prodExpr(), op);
        }
        return l;
    }

    ExprPtr prodExpr() {
        ExprPtr l = atom();
        while (at(Tok::Star)) {
            const Location op = next().at;
            l = Expr::makeBinary(Expr::Kind::Prod, l, atom(), op);
        }
        return l;
    }

    ExprPtr atom() {
        const Token& t = peek();
        if (at(Tok::LParen)) {
            const Token& open = next();
            ExprPtr e = expr();
            close(Tok::RParen, open);
            return e;
        }
        if (!at(Tok::Name)) {
            fail("expected an expression, found " + describe(t));
        }
        static const std::map<std::string, ConstantKind> constants{{"eta", ConstantKind::Eta},
                                                                   {"eps", ConstantKind::Epsilon},
                                                                   {"codiag", ConstantKind::Codiag},
                                                                   {"id", ConstantKind::Ident}};
        if (auto it = constants.find(t.text); it != constants.end()) {
            next();
            if (it->second == ConstantKind::Ident && !at(Tok::LParen)) {
                return Expr::makeConstant(ConstantKind::Ident, std::nullopt, t.at);
            }
            if (!at(Tok::LParen)) {
                fail("expected '(' and a space after '" + t.text + "'");
            }
            const Token& open = next();
            Space s = space();
            close(Tok::RParen, open);
            return Expr::makeConstant(it->second, std::move(s), t.at);
        }
        if (t.text == "pred" || t.text == "succ" || t.text == "succ_total") {
            next();
            return Expr::makeBasic(t.text, t.at);
        }
        if (keywords().count(t.text)) {
            fail("unexpected keyword '" + t.text + "'");
        }
        next();
        return Expr::makeRef(t.text, t.at);
    }

    // ---- spaces

    Space space() {
        std::vector<Space> parts{spaceProduct()};
        while (at(Tok::Plus)) {
            next();
            parts.push_back(spaceProduct());
        }
        return parts.size() == 1 ? parts.front() : Space::sum(std::move(parts));
    }

    Space spaceProduct() {
        std::vector<Space> parts{spaceAtom()};
        while (at(Tok::Star)) {
            next();
            parts.push_back(spaceAtom());
        }
        return parts.size() == 1 ? parts.front() : Space::prod(std::move(parts));
    }

    Space spaceAtom() {
        const Token& t = peek();
        if (at(Tok::Number) && (t.text == "0" || t.text == "1")) {
            next();
            return t.text == "0" ? Space::zero() : Space::unit();
        }
        if (isName("N")) {
            next();
            return Space::nat();
        }
        if (at(Tok::LBrace)) {
            const Token& open = next();
            std::vector<std::string> labels{name()};
            while (at(Tok::Comma)) {
                next();
                labels.push_back(name());
            }
            close(Tok::RBrace, open);
            try {
                return Space::enumeration(std::move(labels));
            } catch (const TypeError& e) {
                failAt(e.what(), open.at);
            }
        }
        if (at(Tok::LParen)) {
            const Token& open = next();
            Space s = space();
            close(Tok::RParen, open);
            return s;
        }
        fail("expected a space (0, 1, N, {labels}, or parenthesised), found " + describe(t));
    }

    // ---- machines

    LabelSet labelSet() {
        const Token& open = expect(Tok::LBrace);
        LabelSet out{name()};
        while (at(Tok::Comma)) {
            next();
            out.push_back(name());
        }
        close(Tok::RBrace, open);
        return out;
    }

    std::vector<std::string> stateList() {
        const Token& open = expect(Tok::LBracket);
        std::vector<std::string> out;
        if (!at(Tok::RBracket)) {
            out.push_back(name());
            while (at(Tok::Comma)) {
                next();
                out.push_back(name());
            }
        }
        close(Tok::RBracket, open);
        return out;
    }

    MachineDecl machine() {
        MachineDecl m;
        m.at = peek().at;
        expectWord("machine");
        m.name = defName();
        const Token& open = expect(Tok::LBrace);
        expectWord("left");
        m.left = labelSet();
        expectWord("right");
        m.right = labelSet();
        expectWord("top");
        m.top = stateList();
        expectWord("bottom");
        m.bottom = stateList();
        expectWord("states");
        const Token& statesOpen = expect(Tok::LBrace);
        do {
            if (!m.states.empty()) {
                next();
            }
            std::string s = name();
            expect(Tok::Colon);
            m.states.emplace_back(std::move(s), space());
        } while (at(Tok::Comma));
        close(Tok::RBrace, statesOpen);
        while (isName("on")) {
            m.transitions.push_back(transition());
        }
        close(Tok::RBrace, open);
        return m;
    }

    MachineTransition transition() {
        MachineTransition t;
        t.at = peek().at;
        expectWord("on");
        const Token& open = expect(Tok::LParen);
        t.left = name();
        expect(Tok::Comma);
        t.right = name();
        close(Tok::RParen, open);
        expectWord("from");
        t.from = name();
        expectWord("to");
        t.to = name();
        expect(Tok::Colon);
        t.rule.push_back(step());
        while (at(Tok::Comma)) {
            next();
            t.rule.push_back(step());
        }
        return t;
    }

    std::size_t coordinate() {
        if (!at(Tok::At)) {
            return 0;
        }
        next();
        const Token& t = peek();
        const std::uint64_t k = number();
        if (k == 0) {
            failAt("coordinates are numbered from 1", t.at);
        }
        return static_cast<std::size_t>(k);
    }

    RuleStep step() {
        using Op = RuleStep::Op;
        static const std::map<std::string, Op> unary{
            {"id", Op::Id}, {"succ", Op::Succ}, {"pred", Op::Pred}, {"zero?", Op::Zero}, {"pos?", Op::Pos}};
        static const std::map<std::string, Op> withConstant{
            {"lt", Op::Lt}, {"ge", Op::Ge}, {"eq", Op::Eq}, {"add", Op::Add}};
        const Token& t = peek();
        if (!at(Tok::Name)) {
            fail("expected a rule step, found " + describe(t));
        }
        RuleStep s;
        next();
        if (auto it = unary.find(t.text); it != unary.end()) {
            s.op = it->second;
            if (s.op != Op::Id) {
                s.coordinate = coordinate();
            }
        } else if (auto jt = withConstant.find(t.text); jt != withConstant.end()) {
            s.op = jt->second;
            s.constant = number();
            s.coordinate = coordinate();
        } else if (t.text == "set" || t.text == "is") {
            s.op = t.text == "set" ? Op::Set : Op::Is;
            s.value = valueLiteral();
        } else if (t.text == "proj") {
            s.op = Op::Proj;
            const Token& k = peek();
            s.coordinate = static_cast<std::size_t>(number());
            if (s.coordinate == 0) {
                failAt("coordinates are numbered from 1", k.at);
            }
        } else {
            failAt("unknown rule step '" + t.text +
                       "' (expected id, succ, pred, zero?, pos?, lt, ge, eq, add, set, is or proj)",
                   t.at);
        }
        return s;
    }

    /// Skips one value literal and hands its source text to the value parser.
    Value valueLiteral() {
        const Token& first = peek();
        skipValue();
        const Token& last = toks_[pos_ - 1];
        const std::string_view src = text_.substr(first.offset, last.offset + last.length - first.offset);
        try {
            return parseValue(src);
        } catch (const SyntaxError& e) {
            failAt(std::string("bad value literal: ") + e.what(), first.at);
        }
    }

    void skipValue() {
        if (at(Tok::Star) || at(Tok::Number)) {
            next();
            return;
        }
        if (at(Tok::Hash)) {
            next();
            expect(Tok::Number);
            skipGroup();
            return;
        }
        if (at(Tok::Name)) {
            const std::string word = next().text;
            if ((word == "inl" || word == "inr") && at(Tok::LParen)) {
                skipGroup();
            }
            return;
        }
        if (at(Tok::LParen)) {
            skipGroup();
            return;
        }
        fail("expected a value, found " + describe(peek()));
    }

    void skipGroup() {
        const Token& open = expect(Tok::LParen);
        skipValue();
        while (at(Tok::Comma)) {
            next();
            skipValue();
        }
        close(Tok::RParen, open);
    }

    std::string_view text_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

Program parse(std::string_view text) {
    return Parser(text).program();
}

Space parseSpace(std::string_view text) {
    return Parser(text).spaceOnly();
}

} // namespace csp::lang
