#include "csp/space.hpp"

#include "csp/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace csp {

Space Space::enumeration(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw TypeError("enumeration space needs at least one label");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw TypeError("duplicate enumeration label '" + l + "'");
        }
    }
    Space s(Kind::Enum);
    s.labels_ = std::move(labels);
    return s;
}

Space Space::sum(std::vector<Space> parts) {
    if (parts.empty()) {
        throw TypeError("sum space needs at least one part");
    }
    Space s(Kind::Sum);
    s.parts_ = std::move(parts);
    return s;
}

Space Space::prod(std::vector<Space> parts) {
    if (parts.empty()) {
        throw TypeError("product space needs at least one part");
    }
    Space s(Kind::Prod);
    s.parts_ = std::move(parts);
    return s;
}

bool Space::hasNat() const {
    if (kind_ == Kind::Nat) {
        return true;
    }
    return std::any_of(parts_.begin(), parts_.end(), [](const Space& p) { return p.hasNat(); });
}

std::string Space::str() const {
    switch (kind_) {
    case Kind::Zero:
        return "0";
    case Kind::Unit:
        return "1";
    case Kind::Nat:
        return "N";
    case Kind::Enum: {
        std::string out = "{";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            out += (i ? "," : "") + labels_[i];
        }
        return out + "}";
    }
    case Kind::Sum: {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            const bool wrap = parts_[i].kind_ == Kind::Sum;
            out += (i ? " + " : "") + (wrap ? "(" + parts_[i].str() + ")" : parts_[i].str());
        }
        return out;
    }
    case Kind::Prod: {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            const bool wrap = parts_[i].kind_ == Kind::Sum || parts_[i].kind_ == Kind::Prod;
            out += (i ? "*" : "") + (wrap ? "(" + parts_[i].str() + ")" : parts_[i].str());
        }
        return out;
    }
    }
    return "?";
}

bool operator==(const Space& a, const Space& b) {
    return a.kind_ == b.kind_ && a.labels_ == b.labels_ && a.parts_ == b.parts_;
}

std::strong_ordering operator<=>(const Space& a, const Space& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) {
        return c;
    }
    if (auto c = a.labels_ <=> b.labels_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
}

Value Value::nat(std::uint64_t n) {
    Value v;
    v.kind_ = Kind::Nat;
    v.number_ = n;
    return v;
}

Value Value::label(std::string name) {
    Value v;
    v.kind_ = Kind::Label;
    v.name_ = std::move(name);
    return v;
}

Value Value::tag(std::size_t branch, Value inner) {
    Value v;
    v.kind_ = Kind::Tag;
    v.number_ = branch;
    v.items_.push_back(std::move(inner));
    return v;
}

Value Value::tuple(std::vector<Value> items) {
    Value v;
    v.kind_ = Kind::Tuple;
    v.items_ = std::move(items);
    return v;
}

std::uint64_t Value::maxNat() const {
    std::uint64_t m = kind_ == Kind::Nat ? number_ : 0;
    for (const auto& item : items_) {
        m = std::max(m, item.maxNat());
    }
    return m;
}

std::string Value::str() const {
    switch (kind_) {
    case Kind::Star:
        return "*";
    case Kind::Nat:
        return std::to_string(number_);
    case Kind::Label:
        return name_;
    case Kind::Tag:
        return "#" + std::to_string(number_) + "(" + items_.front().str() + ")";
    case Kind::Tuple: {
        std::string out = "(";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            out += (i ? ", " : "") + items_[i].str();
        }
        return out + ")";
    }
    }
    return "?";
}

bool operator==(const Value& a, const Value& b) {
    return a.kind_ == b.kind_ && a.number_ == b.number_ && a.name_ == b.name_ && a.items_ == b.items_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) {
        return c;
    }
    if (auto c = a.number_ <=> b.number_; c != 0) {
        return c;
    }
    if (auto c = a.name_ <=> b.name_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                  b.items_.begin(), b.items_.end());
}

bool contains(const Space& space, const Value& value) {
    switch (space.kind()) {
    case Space::Kind::Zero:
        return false;
    case Space::Kind::Unit:
        return value.kind() == Value::Kind::Star;
    case Space::Kind::Nat:
        return value.kind() == Value::Kind::Nat;
    case Space::Kind::Enum: {
        if (value.kind() != Value::Kind::Label) {
            return false;
        }
        const auto& ls = space.labels();
        return std::find(ls.begin(), ls.end(), value.labelName()) != ls.end();
    }
    case Space::Kind::Sum:
        return value.kind() == Value::Kind::Tag && value.branch() < space.parts().size() &&
               contains(space.parts()[value.branch()], value.inner());
    case Space::Kind::Prod: {
        if (value.kind() != Value::Kind::Tuple || value.items().size() != space.parts().size()) {
            return false;
        }
        for (std::size_t i = 0; i < value.items().size(); ++i) {
            if (!contains(space.parts()[i], value.items()[i])) {
                return false;
            }
        }
        return true;
    }
    }
    return false;
}

std::vector<Value> enumerate(const Space& space, std::uint64_t natBound) {
    std::vector<Value> out;
    switch (space.kind()) {
    case Space::Kind::Zero:
        break;
    case Space::Kind::Unit:
        out.push_back(Value::star());
        break;
    case Space::Kind::Nat:
        for (std::uint64_t n = 0; n <= natBound; ++n) {
            out.push_back(Value::nat(n));
        }
        break;
    case Space::Kind::Enum:
        for (const auto& l : space.labels()) {
            out.push_back(Value::label(l));
        }
        break;
    case Space::Kind::Sum:
        for (std::size_t b = 0; b < space.parts().size(); ++b) {
            for (auto& v : enumerate(space.parts()[b], natBound)) {
                out.push_back(Value::tag(b, std::move(v)));
            }
        }
        break;
    case Space::Kind::Prod: {
        std::vector<std::vector<Value>> axes;
        for (const auto& p : space.parts()) {
            axes.push_back(enumerate(p, natBound));
            if (axes.back().empty()) {
                return out;
            }
        }
        std::vector<std::size_t> odometer(axes.size(), 0);
        while (true) {
            std::vector<Value> items;
            items.reserve(axes.size());
            for (std::size_t i = 0; i < axes.size(); ++i) {
                items.push_back(axes[i][odometer[i]]);
            }
            out.push_back(Value::tuple(std::move(items)));
            std::size_t d = axes.size();
            while (d > 0) {
                --d;
                if (++odometer[d] < axes[d].size()) {
                    break;
                }
                odometer[d] = 0;
                if (d == 0) {
                    return out;
                }
            }
        }
    }
    }
    return out;
}

bool withinBound(const Value& value, std::uint64_t natBound) {
    return value.maxNat() <= natBound;
}

Space times(const Space& left, const Space& right) {
    if (left.kind() == Space::Kind::Unit) {
        return right;
    }
    if (right.kind() == Space::Kind::Unit) {
        return left;
    }
    return Space::prod({left, right});
}

Value pairValues(const Space& left, const Space& right, const Value& a, const Value& b) {
    if (left.kind() == Space::Kind::Unit) {
        return b;
    }
    if (right.kind() == Space::Kind::Unit) {
        return a;
    }
    return Value::tuple({a, b});
}

std::pair<Value, Value> unpairValue(const Space& left, const Space& right, const Value& v) {
    if (left.kind() == Space::Kind::Unit) {
        return {Value::star(), v};
    }
    if (right.kind() == Space::Kind::Unit) {
        return {v, Value::star()};
    }
    if (v.kind() != Value::Kind::Tuple || v.items().size() != 2) {
        throw TypeError("expected a pair, got " + v.str());
    }
    return {v.items()[0], v.items()[1]};
}

Family distributeFamilies(const Family& f, const Family& g) {
    Family out;
    out.reserve(f.size() * g.size());
    for (const auto& z : g) {
        for (const auto& x : f) {
            out.push_back(times(x, z));
        }
    }
    return out;
}

std::string familyStr(const Family& family) {
    std::string out = "[";
    for (std::size_t i = 0; i < family.size(); ++i) {
        out += (i ? ", " : "") + family[i].str();
    }
    return out + "]";
}

namespace {

class ValueReader {
public:
    explicit ValueReader(std::string_view text) : text_(text) {}

    Value parseAll() {
        Value v = parse();
        skipSpace();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return v;
    }

private:
    Value parse() {
        skipSpace();
        if (pos_ >= text_.size()) {
            fail("unexpected end of value");
        }
        const char c = text_[pos_];
        if (c == '*') {
            ++pos_;
            return Value::star();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                n = n * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
            }
            return Value::nat(n);
        }
        if (c == '(') {
            ++pos_;
            std::vector<Value> items{parse()};
            skipSpace();
            while (peek(',')) {
                ++pos_;
                items.push_back(parse());
                skipSpace();
            }
            expect(')');
            return Value::tuple(std::move(items));
        }
        if (c == '#') {
            ++pos_;
            std::size_t k = 0;
            bool any = false;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                k = k * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
                any = true;
            }
            if (!any) {
                fail("expected branch index after '#'");
            }
            return tagBody(k);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_++];
            }
            skipSpace();
            if ((name == "inl" || name == "inr") && peek('(')) {
                return tagBody(name == "inl" ? 0 : 1);
            }
            return Value::label(std::move(name));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Value tagBody(std::size_t branch) {
        skipSpace();
        expect('(');
        Value inner = parse();
        skipSpace();
        expect(')');
        return Value::tag(branch, std::move(inner));
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
    void expect(char c) {
        if (!peek(c)) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError("value literal: " + what, 1, pos_ + 1);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Value parseValue(std::string_view text) {
    return ValueReader(text).parseAll();
}

} // namespace csp
