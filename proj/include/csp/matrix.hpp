#pragma once

#include "csp/span.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

namespace csp {

/// Matrix of spans. Column j is the source component cols()[j], row i the
/// target component rows()[i]; entry (i, j) is a span cols()[j] -> rows()[i].
/// Absent entries are the empty span.
class SpanMatrix {
public:
    using Index = std::pair<std::size_t, std::size_t>;

    SpanMatrix(Family rows, Family cols) : rows_(std::move(rows)), cols_(std::move(cols)) {}

    const Family& rows() const { return rows_; }
    const Family& cols() const { return cols_; }

    Span at(std::size_t row, std::size_t col) const;
    /// Stores `s` at (row, col) after checking its legs; an empty span erases.
    void set(std::size_t row, std::size_t col, Span s);
    const std::map<Index, Span>& entries() const { return entries_; }

private:
    Family rows_;
    Family cols_;
    std::map<Index, Span> entries_;
};

SpanMatrix identityMatrix(const Family& family);

/// M . N: first N, then M. Entry (i, j) = sum over k of compose(N(k, j), M(i, k)).
/// Requires M.cols() == N.rows().
SpanMatrix matMul(const SpanMatrix& m, const SpanMatrix& n);

/// Rows and columns distributed with distributeFamilies; entry
/// ((i, i'), (j, j')) = tensor(M(i, j), N(i', j')).
SpanMatrix matTensor(const SpanMatrix& m, const SpanMatrix& n);

/// Entrywise sum. Requires identical row and column families.
SpanMatrix matSum(const SpanMatrix& m, const SpanMatrix& n);

bool isoAtBound(const SpanMatrix& a, const SpanMatrix& b, std::uint64_t natBound);

} // namespace csp
