#include "generators.hpp"

#include "csp/space.hpp"

#include <map>

namespace csp::testing {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Space finiteSpace(Rng& rng, std::size_t maxSize) {
    switch (pick(rng, 0, maxSize >= 2 ? (maxSize >= 3 ? 3 : 2) : 0)) {
    case 0: return Space::unit();
    case 1: return Space::enumeration({"p", "q"});
    case 2: return Space::sum({Space::unit(), Space::unit()});
    default: return Space::enumeration({"p", "q", "r"});
    }
}

LabelSet labelSet(Rng& rng, std::size_t maxLabels) {
    const std::size_t n = pick(rng, 0, maxLabels);
    if (n == 0) {
        return {kTrivialLabel};
    }
    LabelSet out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return out;
}

Value randomElement(Rng& rng, const Space& s) {
    const auto all = enumerate(s, 2);
    return all[pick(rng, 0, all.size() - 1)];
}

Span finiteSpan(Rng& rng, const Space& source, const Space& target, std::size_t count, const std::string& prefix) {
    std::vector<Triple> triples;
    for (std::size_t i = 0; i < count; ++i) {
        triples.push_back({prefix + std::to_string(i), randomElement(rng, source), randomElement(rng, target)});
    }
    return Span::finite(source, target, std::move(triples));
}

Span mixedSpan(Rng& rng, const Space& source, const Space& target) {
    switch (pick(rng, 0, 5)) {
    case 0:
        return Span::empty(source, target);
    case 1:
        if (source == target) {
            return Span::identity(source);
        }
        [[fallthrough]];
    case 2: {
        const auto from = enumerate(source, 2);
        const auto to = enumerate(target, 2);
        std::map<Value, std::vector<Value>> table;
        for (const auto& v : from) {
            const std::size_t k = pick(rng, 0, 2);
            for (std::size_t i = 0; i < k; ++i) {
                table[v].push_back(to[pick(rng, 0, to.size() - 1)]);
            }
        }
        return Span::primitive("r" + std::to_string(pick(rng, 0, 999)), source, target, [table](const Value& v) {
            std::vector<Transition> out;
            if (auto it = table.find(v); it != table.end()) {
                for (std::size_t i = 0; i < it->second.size(); ++i) {
                    out.push_back({"k" + std::to_string(i), it->second[i]});
                }
            }
            return out;
        });
    }
    default:
        return finiteSpan(rng, source, target, pick(rng, 1, 3));
    }
}

namespace {

std::vector<std::size_t> include(Rng& rng, const Family& iface, Family& states) {
    std::vector<std::size_t> map;
    for (const auto& x : iface) {
        std::vector<std::size_t> same;
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (states[i] == x) {
                same.push_back(i);
            }
        }
        if (!same.empty() && pick(rng, 0, 2) == 0) {
            map.push_back(same[pick(rng, 0, same.size() - 1)]);
        } else {
            map.push_back(states.size());
            states.push_back(x);
        }
    }
    return map;
}

Family randomFamily(Rng& rng, const Limits& limits) {
    Family f;
    const std::size_t n = pick(rng, 0, limits.maxInterface);
    for (std::size_t i = 0; i < n; ++i) {
        f.push_back(finiteSpace(rng, limits.maxSize));
    }
    return f;
}

} // namespace

System randomSystem(Rng& rng, const Limits& limits, const Shape& shape) {
    LabelSet left = shape.left ? *shape.left : labelSet(rng, limits.maxLabels);
    LabelSet right = shape.right ? *shape.right : labelSet(rng, limits.maxLabels);
    Family top = shape.top ? *shape.top : randomFamily(rng, limits);
    Family bottom = shape.bottom ? *shape.bottom : randomFamily(rng, limits);
    Family states;
    std::vector<std::size_t> phi = include(rng, top, states);
    std::vector<std::size_t> psi = include(rng, bottom, states);
    const std::size_t target = pick(rng, 1, limits.maxComponents);
    while (states.size() < target) {
        states.push_back(finiteSpace(rng, limits.maxSize));
    }

    const std::size_t n = pick(rng, limits.active ? 1 : 0, limits.maxTransitions);
    std::map<SpanKey, std::vector<Triple>> byKey;
    for (std::size_t t = 0; t < n; ++t) {
        const SpanKey key{pick(rng, 0, left.size() - 1), pick(rng, 0, right.size() - 1),
                          pick(rng, 0, states.size() - 1), pick(rng, 0, states.size() - 1)};
        byKey[key].push_back({"t" + std::to_string(t), randomElement(rng, states[key.from]),
                              randomElement(rng, states[key.to])});
    }
    std::map<SpanKey, Span> spans;
    for (auto& [key, triples] : byKey) {
        spans.emplace(key, Span::finite(states[key.from], states[key.to], std::move(triples)));
    }
    return System(std::move(left), std::move(right), std::move(top), std::move(bottom), std::move(states),
                  std::move(phi), std::move(psi), std::move(spans));
}

Quadruple randomQuadruple(Rng& rng, const Limits& limits, bool local) {
    System g = randomSystem(rng, limits);
    System h = randomSystem(rng, limits, {.left = g.right()});
    Shape ks{.top = g.bottom()};
    Shape ls{.top = h.bottom()};
    if (local) {
        ks.left = g.left();
        ks.right = g.right();
        ls.left = h.left();
        ls.right = h.right();
    } else {
        ks.right = labelSet(rng, limits.maxLabels);
        ls.left = ks.right;
    }
    System k = randomSystem(rng, limits, ks);
    System l = randomSystem(rng, limits, ls);
    return {std::move(g), std::move(h), std::move(k), std::move(l)};
}

System unitLoop(std::size_t topSize, std::size_t bottomSize) {
    const Space one = Space::unit();
    return System({kTrivialLabel}, {kTrivialLabel}, Family(topSize, one), Family(bottomSize, one), {one},
                  std::vector<std::size_t>(topSize, 0), std::vector<std::size_t>(bottomSize, 0),
                  {{SpanKey{0, 0, 0, 0}, Span::finite(one, one, {{"loop", Value::star(), Value::star()}})}});
}

} // namespace csp::testing
