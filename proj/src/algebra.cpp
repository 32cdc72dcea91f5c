#include "csp/algebra.hpp"

#include "csp/error.hpp"

#include <numeric>

namespace csp {

namespace {

std::string labelSetStr(const LabelSet& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? "," : "") + labels[i];
    }
    return out + "}";
}

void requireSameLabels(const System& g, const System& h, const char* op) {
    if (g.left() != h.left()) {
        throw InterfaceError(std::string(op) + ": left labels differ: " + labelSetStr(g.left()) +
                             " vs " + labelSetStr(h.left()));
    }
    if (g.right() != h.right()) {
        throw InterfaceError(std::string(op) + ": right labels differ: " + labelSetStr(g.right()) +
                             " vs " + labelSetStr(h.right()));
    }
}

void requireGlueable(const Family& bottom, const Family& top, const char* op) {
    if (bottom.size() != top.size()) {
        throw InterfaceError(std::string(op) + ": bottom interface " + familyStr(bottom) + " has " +
                             std::to_string(bottom.size()) + " components, top interface " +
                             familyStr(top) + " has " + std::to_string(top.size()));
    }
    for (std::size_t i = 0; i < bottom.size(); ++i) {
        if (bottom[i] != top[i]) {
            throw InterfaceError(std::string(op) + ": family mismatch at component " +
                                 std::to_string(i + 1) + ": " + bottom[i].str() + " vs " +
                                 top[i].str());
        }
    }
}

void accumulate(std::map<SpanKey, Span>& spans, const SpanKey& key, const Span& s) {
    auto it = spans.find(key);
    if (it == spans.end()) {
        spans.emplace(key, s);
    } else {
        it->second = sum(it->second, s);
    }
}

/// Quotient of the disjoint union of G's and H's state families by
/// U_{psi_G(i)} ~ V_{phi_H(i)}. Class representative is the smallest index;
/// classes are numbered in order of their representatives.
struct Gluing {
    Family states;
    std::vector<std::size_t> ofG;
    std::vector<std::size_t> ofH;
};

Gluing glue(const System& g, const System& h) {
    const std::size_t m = g.states().size();
    const std::size_t n = h.states().size();
    std::vector<std::size_t> parent(m + n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < g.psi().size(); ++i) {
        std::size_t a = find(g.psi()[i]);
        std::size_t b = find(m + h.phi()[i]);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    auto spaceOf = [&](std::size_t x) -> const Space& {
        return x < m ? g.states()[x] : h.states()[x - m];
    };
    Gluing out;
    std::vector<std::size_t> classOf(m + n, 0);
    std::vector<std::size_t> number(m + n, m + n);
    for (std::size_t x = 0; x < m + n; ++x) {
        const std::size_t r = find(x);
        if (number[r] == m + n) {
            number[r] = out.states.size();
            out.states.push_back(spaceOf(r));
        }
        if (spaceOf(x) != spaceOf(r)) {
            throw InternalError("gluing identified " + spaceOf(x).str() + " with " + spaceOf(r).str());
        }
        classOf[x] = number[r];
    }
    out.ofG.assign(classOf.begin(), classOf.begin() + static_cast<std::ptrdiff_t>(m));
    out.ofH.assign(classOf.begin() + static_cast<std::ptrdiff_t>(m), classOf.end());
    return out;
}

std::vector<std::size_t> remap(const std::vector<std::size_t>& xs, const std::vector<std::size_t>& via) {
    std::vector<std::size_t> out;
    out.reserve(xs.size());
    for (auto x : xs) {
        out.push_back(via[x]);
    }
    return out;
}

std::vector<std::size_t> distributeMap(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g,
                                       std::size_t fTargetSize) {
    std::vector<std::size_t> out;
    out.reserve(f.size() * g.size());
    for (auto z : g) {
        for (auto x : f) {
            out.push_back(pairIndex(x, z, fTargetSize));
        }
    }
    return out;
}

/// Spans a factor contributes to a product or parallel composite. A passive
/// factor paired with an active one carries its state along unchanged.
std::map<SpanKey, Span> factorSpans(const System& g, const System& other) {
    if (!g.isPassive() || other.isPassive()) {
        return g.spans();
    }
    std::map<SpanKey, Span> out;
    for (std::size_t i = 0; i < g.states().size(); ++i) {
        out.emplace(SpanKey{0, 0, i, i}, Span::identity(g.states()[i]));
    }
    return out;
}

} // namespace

LabelSet sumLabels(const LabelSet& a, const LabelSet& c) {
    LabelSet out;
    for (const auto& l : a) {
        out.push_back("inl." + l);
    }
    for (const auto& l : c) {
        out.push_back("inr." + l);
    }
    return out;
}

LabelSet productLabels(const LabelSet& a, const LabelSet& c) {
    const LabelSet trivial{kTrivialLabel};
    if (a == trivial) {
        return c;
    }
    if (c == trivial) {
        return a;
    }
    LabelSet out;
    for (const auto& y : c) {
        for (const auto& x : a) {
            out.push_back("(" + x + "," + y + ")");
        }
    }
    return out;
}

System parallel(const System& g, const System& h) {
    if (g.right() != h.left()) {
        throw InterfaceError("parallel: right labels " + labelSetStr(g.right()) +
                             " of the left operand differ from left labels " + labelSetStr(h.left()) +
                             " of the right operand");
    }
    const std::size_t m = g.states().size();
    std::map<SpanKey, std::vector<std::pair<std::string, Span>>> parts;
    const auto gSpans = factorSpans(g, h);
    const auto hSpans = factorSpans(h, g);
    for (const auto& [gk, gs] : gSpans) {
        for (const auto& [hk, hs] : hSpans) {
            if (gk.right != hk.left) {
                continue;
            }
            SpanKey key{gk.left, hk.right, pairIndex(gk.from, hk.from, m), pairIndex(gk.to, hk.to, m)};
            parts[key].emplace_back(g.right()[gk.right], tensor(gs, hs));
        }
    }
    std::map<SpanKey, Span> spans;
    for (auto& [key, ps] : parts) {
        spans.emplace(key, Span::taggedSum(std::move(ps)));
    }
    return System(g.left(), h.right(), distributeFamilies(g.top(), h.top()),
                  distributeFamilies(g.bottom(), h.bottom()), distributeFamilies(g.states(), h.states()),
                  distributeMap(g.phi(), h.phi(), m), distributeMap(g.psi(), h.psi(), m), std::move(spans));
}

System sequential(const System& g, const System& h) {
    requireGlueable(g.bottom(), h.top(), "sequential");
    const Gluing gl = glue(g, h);
    const std::size_t na = g.left().size();
    const std::size_t nb = g.right().size();
    std::map<SpanKey, Span> spans;
    for (const auto& [k, s] : g.spans()) {
        accumulate(spans, {k.left, k.right, gl.ofG[k.from], gl.ofG[k.to]}, s);
    }
    for (const auto& [k, s] : h.spans()) {
        accumulate(spans, {na + k.left, nb + k.right, gl.ofH[k.from], gl.ofH[k.to]}, s);
    }
    return System(sumLabels(g.left(), h.left()), sumLabels(g.right(), h.right()), g.top(), h.bottom(),
                  gl.states, remap(g.phi(), gl.ofG), remap(h.psi(), gl.ofH), std::move(spans));
}

System localSequential(const System& g, const System& h) {
    requireSameLabels(g, h, "local sequential");
    requireGlueable(g.bottom(), h.top(), "local sequential");
    const Gluing gl = glue(g, h);
    std::map<SpanKey, Span> spans;
    for (const auto& [k, s] : g.spans()) {
        accumulate(spans, {k.left, k.right, gl.ofG[k.from], gl.ofG[k.to]}, s);
    }
    for (const auto& [k, s] : h.spans()) {
        accumulate(spans, {k.left, k.right, gl.ofH[k.from], gl.ofH[k.to]}, s);
    }
    return System(g.left(), g.right(), g.top(), h.bottom(), gl.states, remap(g.phi(), gl.ofG),
                  remap(h.psi(), gl.ofH), std::move(spans));
}

System localSum(const System& g, const System& h) {
    requireSameLabels(g, h, "local sum");
    const std::size_t m = g.states().size();
    auto concat = [](Family a, const Family& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    auto concatMap = [m](std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
        for (auto x : b) {
            a.push_back(m + x);
        }
        return a;
    };
    std::map<SpanKey, Span> spans = g.spans();
    for (const auto& [k, s] : h.spans()) {
        spans.emplace(SpanKey{k.left, k.right, m + k.from, m + k.to}, s);
    }
    return System(g.left(), g.right(), concat(g.top(), h.top()), concat(g.bottom(), h.bottom()),
                  concat(g.states(), h.states()), concatMap(g.phi(), h.phi()), concatMap(g.psi(), h.psi()),
                  std::move(spans));
}

System product(const System& g, const System& h) {
    const std::size_t m = g.states().size();
    const std::size_t na = g.left().size();
    const std::size_t nb = g.right().size();
    std::map<SpanKey, Span> spans;
    const auto gSpans = factorSpans(g, h);
    const auto hSpans = factorSpans(h, g);
    for (const auto& [gk, gs] : gSpans) {
        for (const auto& [hk, hs] : hSpans) {
            spans.emplace(SpanKey{pairIndex(gk.left, hk.left, na), pairIndex(gk.right, hk.right, nb),
                                  pairIndex(gk.from, hk.from, m), pairIndex(gk.to, hk.to, m)},
                          tensor(gs, hs));
        }
    }
    return System(productLabels(g.left(), h.left()), productLabels(g.right(), h.right()),
                  distributeFamilies(g.top(), h.top()), distributeFamilies(g.bottom(), h.bottom()),
                  distributeFamilies(g.states(), h.states()), distributeMap(g.phi(), h.phi(), m),
                  distributeMap(g.psi(), h.psi(), m), std::move(spans));
}

System relabel(const System& g, const std::vector<std::size_t>& leftMap, LabelSet newLeft,
               const std::vector<std::size_t>& rightMap, LabelSet newRight) {
    if (leftMap.size() != g.left().size() || rightMap.size() != g.right().size()) {
        throw InterfaceError("relabel: map sizes do not match the label sets");
    }
    std::map<SpanKey, Span> spans;
    for (const auto& [k, s] : g.spans()) {
        accumulate(spans, {leftMap[k.left], rightMap[k.right], k.from, k.to}, s);
    }
    return System(std::move(newLeft), std::move(newRight), g.top(), g.bottom(), g.states(), g.phi(),
                  g.psi(), std::move(spans));
}

System labelCodiagonal(const System& composite, const LabelSet& left, const LabelSet& right) {
    if (composite.left().size() != 2 * left.size() || composite.right().size() != 2 * right.size()) {
        throw InterfaceError("label codiagonal: composite labels are not A+A, B+B");
    }
    std::vector<std::size_t> lm(composite.left().size());
    std::vector<std::size_t> rm(composite.right().size());
    for (std::size_t i = 0; i < lm.size(); ++i) {
        lm[i] = i % left.size();
    }
    for (std::size_t i = 0; i < rm.size(); ++i) {
        rm[i] = i % right.size();
    }
    return relabel(composite, lm, left, rm, right);
}

} // namespace csp
