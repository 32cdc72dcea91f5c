#include "csp/matrix.hpp"

#include "csp/error.hpp"

namespace csp {

Span SpanMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_.size() || col >= cols_.size()) {
        throw InterfaceError("matrix index (" + std::to_string(row) + ", " + std::to_string(col) +
                             ") out of range");
    }
    if (auto it = entries_.find({row, col}); it != entries_.end()) {
        return it->second;
    }
    return Span::empty(cols_[col], rows_[row]);
}

void SpanMatrix::set(std::size_t row, std::size_t col, Span s) {
    if (row >= rows_.size() || col >= cols_.size()) {
        throw InterfaceError("matrix index out of range");
    }
    if (s.source() != cols_[col] || s.target() != rows_[row]) {
        throw TypeError("matrix entry (" + std::to_string(row) + ", " + std::to_string(col) +
                        ") must be " + cols_[col].str() + " -> " + rows_[row].str() + ", got " +
                        s.source().str() + " -> " + s.target().str());
    }
    if (s.isEmpty()) {
        entries_.erase({row, col});
    } else {
        entries_.insert_or_assign({row, col}, std::move(s));
    }
}

SpanMatrix identityMatrix(const Family& family) {
    SpanMatrix m(family, family);
    for (std::size_t i = 0; i < family.size(); ++i) {
        m.set(i, i, Span::identity(family[i]));
    }
    return m;
}

SpanMatrix matMul(const SpanMatrix& m, const SpanMatrix& n) {
    if (m.cols() != n.rows()) {
        throw InterfaceError("matMul: " + familyStr(m.cols()) + " does not match " +
                             familyStr(n.rows()));
    }
    SpanMatrix out(m.rows(), n.cols());
    // Sparse product: pair every N(k, j) with every M(i, k).
    std::map<SpanMatrix::Index, Span> acc;
    for (const auto& [nk, nspan] : n.entries()) {
        const auto [k, j] = nk;
        for (const auto& [mk, mspan] : m.entries()) {
            if (mk.second != k) {
                continue;
            }
            const std::size_t i = mk.first;
            Span term = compose(nspan, mspan);
            auto it = acc.find({i, j});
            if (it == acc.end()) {
                acc.emplace(SpanMatrix::Index{i, j}, std::move(term));
            } else {
                it->second = sum(it->second, term);
            }
        }
    }
    for (auto& [idx, s] : acc) {
        out.set(idx.first, idx.second, std::move(s));
    }
    return out;
}

SpanMatrix matTensor(const SpanMatrix& m, const SpanMatrix& n) {
    SpanMatrix out(distributeFamilies(m.rows(), n.rows()), distributeFamilies(m.cols(), n.cols()));
    const std::size_t mr = m.rows().size();
    const std::size_t mc = m.cols().size();
    for (const auto& [mi, ms] : m.entries()) {
        for (const auto& [ni, ns] : n.entries()) {
            out.set(pairIndex(mi.first, ni.first, mr), pairIndex(mi.second, ni.second, mc),
                    tensor(ms, ns));
        }
    }
    return out;
}

SpanMatrix matSum(const SpanMatrix& m, const SpanMatrix& n) {
    if (m.rows() != n.rows() || m.cols() != n.cols()) {
        throw InterfaceError("matSum: matrices have different shapes");
    }
    SpanMatrix out = m;
    for (const auto& [idx, s] : n.entries()) {
        out.set(idx.first, idx.second, sum(out.at(idx.first, idx.second), s));
    }
    return out;
}

bool isoAtBound(const SpanMatrix& a, const SpanMatrix& b, std::uint64_t natBound) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows().size(); ++i) {
        for (std::size_t j = 0; j < a.cols().size(); ++j) {
            if (!isoAtBound(a.at(i, j), b.at(i, j), natBound)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace csp
