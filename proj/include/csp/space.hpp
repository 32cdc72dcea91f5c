#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csp {

/// Symbolic state space: 0, 1, N, a finite enumeration, or a finite sum or
/// product of spaces. Spaces are never materialized; equality is structural.
class Space {
public:
    enum class Kind { Zero, Unit, Nat, Enum, Sum, Prod };

    Space() : kind_(Kind::Zero) {}

    static Space zero() { return Space(Kind::Zero); }
    static Space unit() { return Space(Kind::Unit); }
    static Space nat() { return Space(Kind::Nat); }
    /// Labels must be pairwise distinct and nonempty as a list.
    static Space enumeration(std::vector<std::string> labels);
    /// Parts must be nonempty.
    static Space sum(std::vector<Space> parts);
    static Space prod(std::vector<Space> parts);

    Kind kind() const { return kind_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Space>& parts() const { return parts_; }

    bool hasNat() const;
    std::string str() const;

    friend bool operator==(const Space& a, const Space& b);
    friend std::strong_ordering operator<=>(const Space& a, const Space& b);

private:
    explicit Space(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<std::string> labels_;
    std::vector<Space> parts_;
};

/// An element of some Space.
class Value {
public:
    enum class Kind { Star, Nat, Label, Tag, Tuple };

    Value() = default;

    static Value star() { return Value(); }
    static Value nat(std::uint64_t n);
    static Value label(std::string name);
    static Value tag(std::size_t branch, Value inner);
    static Value tuple(std::vector<Value> items);

    Kind kind() const { return kind_; }
    std::uint64_t natValue() const { return number_; }
    std::size_t branch() const { return static_cast<std::size_t>(number_); }
    const std::string& labelName() const { return name_; }
    /// Payload of a Tag (exactly one item) or the items of a Tuple.
    const std::vector<Value>& items() const { return items_; }
    const Value& inner() const { return items_.front(); }

    /// Largest natural number embedded anywhere in the value (0 if none).
    std::uint64_t maxNat() const;
    std::string str() const;

    friend bool operator==(const Value& a, const Value& b);
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

private:
    Kind kind_ = Kind::Star;
    std::uint64_t number_ = 0;
    std::string name_;
    std::vector<Value> items_;
};

/// Ordered family of spaces, read as the disjoint sum of its components.
using Family = std::vector<Space>;

bool contains(const Space& space, const Value& value);

/// All elements of `space` whose embedded naturals are <= natBound, in the
/// canonical order: N ascending, enumeration order, sum branch order, and
/// lexicographic (first coordinate slowest) for products.
std::vector<Value> enumerate(const Space& space, std::uint64_t natBound);

bool withinBound(const Value& value, std::uint64_t natBound);

/// Product of two spaces with the unit law applied: 1 x T = T and S x 1 = S.
/// Otherwise Prod[S, T] (never flattened, so pairing stays binary).
Space times(const Space& left, const Space& right);

/// Element of times(left, right) built from a pair of elements.
Value pairValues(const Space& left, const Space& right, const Value& a, const Value& b);
/// Inverse of pairValues.
std::pair<Value, Value> unpairValue(const Space& left, const Space& right, const Value& v);

/// Index of component (i, j) in the distributed family of |f| x |g| pairs.
/// The first index varies fastest: (0,0), (1,0), ..., (k-1,0), (0,1), ...
inline std::size_t pairIndex(std::size_t i, std::size_t j, std::size_t firstSize) {
    return i + firstSize * j;
}
inline std::pair<std::size_t, std::size_t> unpairIndex(std::size_t p, std::size_t firstSize) {
    return {p % firstSize, p / firstSize};
}

/// [X1 x Z1, X2 x Z1, ..., Xk x Z1, X1 x Z2, ...].
Family distributeFamilies(const Family& f, const Family& g);

std::string familyStr(const Family& family);

/// Parses a value literal: `*`, naturals, enumeration labels, `(v, ...)`
/// tuples, and sum tags written `inl(v)`, `inr(v)` or `#k(v)`.
Value parseValue(std::string_view text);

} // namespace csp
