#include "doctest.h"
#include "generators.hpp"

#include "csp/error.hpp"
#include "csp/matrix.hpp"

using namespace csp;

namespace {

Family randomFamily(testing::Rng& rng) {
    Family f;
    const std::size_t n = testing::pick(rng, 1, 3);
    for (std::size_t i = 0; i < n; ++i) {
        f.push_back(testing::finiteSpace(rng, 3));
    }
    return f;
}

SpanMatrix randomMatrix(testing::Rng& rng, const Family& rows, const Family& cols) {
    SpanMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            m.set(i, j, testing::mixedSpan(rng, cols[j], rows[i]));
        }
    }
    return m;
}

// Entry (i, j) of the product counts paths column j -> some k -> row i.
std::size_t pathCount(const SpanMatrix& m, const SpanMatrix& n, std::size_t i, std::size_t j, const Value& v) {
    std::size_t total = 0;
    for (std::size_t k = 0; k < n.rows().size(); ++k) {
        for (const auto& t : n.at(k, j).forward(v)) {
            total += m.at(i, k).forward(t.target).size();
        }
    }
    return total;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("entries are typed and absent entries are empty") {
    SpanMatrix m({Space::nat()}, {Space::unit(), Space::nat()});
    CHECK(m.at(0, 0).isEmpty());
    CHECK_THROWS_AS(m.set(0, 0, Span::identity(Space::nat())), TypeError);
    m.set(0, 1, Span::identity(Space::nat()));
    CHECK(m.entries().size() == 1);
    m.set(0, 1, Span::empty(Space::nat(), Space::nat()));
    CHECK(m.entries().empty());
    CHECK_THROWS_AS(m.at(1, 0), InterfaceError);
}

TEST_CASE("product counts paths") {
    testing::Rng rng(8);
    for (int round = 0; round < 100; ++round) {
        const Family a = randomFamily(rng);
        const Family b = randomFamily(rng);
        const Family c = randomFamily(rng);
        const SpanMatrix n = randomMatrix(rng, b, a);
        const SpanMatrix m = randomMatrix(rng, c, b);
        const SpanMatrix p = matMul(m, n);
        CHECK(p.rows() == c);
        CHECK(p.cols() == a);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = 0; j < a.size(); ++j) {
                for (const auto& v : enumerate(a[j], 2)) {
                    CHECK(p.at(i, j).forward(v).size() == pathCount(m, n, i, j, v));
                }
            }
        }
        CHECK(isoAtBound(matMul(identityMatrix(c), m), m, 2));
        CHECK(isoAtBound(matMul(m, identityMatrix(b)), m, 2));
        const SpanMatrix l = randomMatrix(rng, randomFamily(rng), c);
        CHECK(isoAtBound(matMul(l, matMul(m, n)), matMul(matMul(l, m), n), 2));
    }
    CHECK_THROWS_AS(matMul(SpanMatrix({Space::nat()}, {Space::nat()}), SpanMatrix({Space::unit()}, {Space::nat()})),
                    InterfaceError);
}

TEST_CASE("tensor distributes rows and columns") {
    testing::Rng rng(9);
    for (int round = 0; round < 100; ++round) {
        const Family r1 = randomFamily(rng);
        const Family c1 = randomFamily(rng);
        const Family r2 = randomFamily(rng);
        const Family c2 = randomFamily(rng);
        const SpanMatrix m = randomMatrix(rng, r1, c1);
        const SpanMatrix n = randomMatrix(rng, r2, c2);
        const SpanMatrix t = matTensor(m, n);
        CHECK(t.rows() == distributeFamilies(r1, r2));
        CHECK(t.cols() == distributeFamilies(c1, c2));
        for (std::size_t i = 0; i < r1.size(); ++i) {
            for (std::size_t j = 0; j < c1.size(); ++j) {
                for (std::size_t i2 = 0; i2 < r2.size(); ++i2) {
                    for (std::size_t j2 = 0; j2 < c2.size(); ++j2) {
                        const Span e = t.at(pairIndex(i, i2, r1.size()), pairIndex(j, j2, c1.size()));
                        CHECK(isoAtBound(e, tensor(m.at(i, j), n.at(i2, j2)), 2));
                    }
                }
            }
        }
    }
}

TEST_CASE("sum is entrywise") {
    testing::Rng rng(10);
    const Family a = randomFamily(rng);
    const Family b = randomFamily(rng);
    const SpanMatrix m = randomMatrix(rng, b, a);
    const SpanMatrix n = randomMatrix(rng, b, a);
    const SpanMatrix s = matSum(m, n);
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(isoAtBound(s.at(i, j), sum(m.at(i, j), n.at(i, j)), 2));
        }
    }
    CHECK_THROWS_AS(matSum(m, SpanMatrix(a, b)), InterfaceError);
}

}
