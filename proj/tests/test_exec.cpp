#include "doctest.h"
#include "generators.hpp"

#include "csp/error.hpp"
#include "csp/exec.hpp"
#include "csp/lang.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

using namespace csp;

namespace {

const Space N = Space::nat();

System load(const std::string& file, const std::string& name) {
    std::ifstream in(std::string(CSP_SOURCE_DIR) + "/samples/" + file);
    std::stringstream ss;
    ss << in.rdbuf();
    lang::Environment env(lang::parse(ss.str()));
    return env.evaluate(name);
}

Value pair(std::uint64_t m, std::uint64_t n) {
    return Value::tuple({Value::nat(m), Value::nat(n)});
}

} // namespace

TEST_SUITE("exec") {

TEST_CASE("addition halts at the sum") {
    const System add = load("add.csp", "add");
    for (std::uint64_t m = 0; m <= 30; ++m) {
        for (std::uint64_t n = 0; n <= 30; ++n) {
            const Trace t = run(add, 0, pair(m, n), 1000);
            CHECK(t.outcome.kind == Outcome::Kind::AtBottomInterface);
            CHECK(t.outcome.bottomIndex == 0);
            CHECK(t.outcome.value == Value::nat(m + n));
            CHECK(t.steps.size() == 2 * m + 1);
            CHECK(replay(add, t));
        }
    }
}

TEST_CASE("step budget and stuck states") {
    const System add = load("add.csp", "add");
    const Trace cut = run(add, 0, pair(5, 1), 3);
    CHECK(cut.steps.size() == 3);
    CHECK(cut.outcome.kind == Outcome::Kind::StepBudgetExhausted);
    CHECK(replay(add, cut));
    const Trace exact = run(add, 0, pair(1, 1), 3);
    CHECK(exact.outcome.kind == Outcome::Kind::AtBottomInterface);

    const System stuck(LabelSet{kTrivialLabel}, LabelSet{kTrivialLabel}, {N}, {}, {N, N}, {0}, {},
                       {{SpanKey{0, 0, 0, 1}, predNN()}});
    const Trace t = run(stuck, 0, Value::nat(2), 10);
    CHECK(t.outcome.kind == Outcome::Kind::Stuck);
    CHECK(t.outcome.value == Value::nat(1));
    CHECK(replay(stuck, t));
}

TEST_CASE("start values are type-checked") {
    const System add = load("add.csp", "add");
    CHECK_THROWS_AS(run(add, 0, Value::nat(3), 10), TypeError);
    CHECK_THROWS_AS(run(add, 1, pair(1, 1), 10), TypeError);
}

TEST_CASE("deterministic policy reports the competing moves") {
    const System pq = load("sync.csp", "pq");
    bool raised = false;
    try {
        run(pq, 0, pair(0, 0), 100);
    } catch (const NondeterminismError& e) {
        raised = true;
        CHECK(std::string(e.what()).find("(eps,eps)") != std::string::npos);
    }
    CHECK(raised);
    const Trace t = run(pq, 0, pair(0, 0), 40, Policy::FirstEnabled);
    CHECK(t.outcome.kind == Outcome::Kind::StepBudgetExhausted);
    CHECK(replay(pq, t));
}

TEST_CASE("replay rejects forged traces") {
    const System add = load("add.csp", "add");
    const Trace t = run(add, 0, pair(3, 4), 100);
    REQUIRE(t.steps.size() > 2);
    Trace forged = t;
    forged.steps[1].next.value = pair(9, 9);
    CHECK_FALSE(replay(add, forged));
    forged = t;
    forged.steps[0].witness += "x";
    CHECK_FALSE(replay(add, forged));
    forged = t;
    forged.steps.pop_back();
    CHECK_FALSE(replay(add, forged));
    forged = t;
    forged.outcome.value = Value::nat(0);
    CHECK_FALSE(replay(add, forged));
    forged = t;
    forged.outcome.kind = Outcome::Kind::Stuck;
    CHECK_FALSE(replay(add, forged));
}

TEST_CASE("runs on random systems replay") {
    testing::Rng rng(61);
    for (int round = 0; round < 200; ++round) {
        const System g = testing::randomSystem(rng);
        for (std::size_t i = 0; i < g.top().size(); ++i) {
            for (const auto& v : enumerate(g.top()[i], 1)) {
                const Trace t = run(g, i, v, 8, Policy::FirstEnabled);
                CHECK(replay(g, t));
                CHECK(t == run(g, i, v, 8, Policy::FirstEnabled));
            }
        }
    }
}

TEST_CASE("trace JSON") {
    const System add = load("add.csp", "add");
    const Trace t = run(add, 0, pair(2, 3), 100);
    const std::string text = traceJson(t);
    CHECK(text == traceJson(run(add, 0, pair(2, 3), 100)));
    const auto j = nlohmann::json::parse(text);
    CHECK(j["length"] == 5);
    CHECK(j["initial"]["component"] == 1);
    CHECK(j["initial"]["value"] == "(2, 3)");
    CHECK(j["outcome"]["kind"] == "AtBottomInterface");
    CHECK(j["outcome"]["bottom"] == 1);
    CHECK(j["outcome"]["value"] == "5");
    CHECK(j["steps"].size() == 5);
    CHECK(text.substr(0, 14) == "{\n  \"initial\":");
}

TEST_CASE("reach on the addition program") {
    const System add = load("add.csp", "add");
    ReachOptions options;
    options.natBound = 4;
    options.depthBound = 50;
    options.start = std::vector<StatePoint>{{add.phi()[0], pair(1, 1)}};
    const ReachReport r = reach(add, options);
    CHECK(r.visited == 4);
    CHECK(r.bottomHits.size() == 1);
    CHECK(r.bottomHits[0].value == Value::nat(2));
    CHECK(r.deadlocked.empty());
    CHECK(r.clipped == 0);
    CHECK(r.transitions == 3);
    CHECK(reachableStates(add, options).size() == r.visited);

    options.start.reset();
    options.natBound = 2;
    const ReachReport all = reach(add, options);
    CHECK(all.clipped > 0);
    CHECK(all == reachSerial(add, options));
    options.depthBound = 0;
    const ReachReport shallow = reach(add, options);
    CHECK(shallow.transitions == 0);
    CHECK(shallow.visited == 9);
    CHECK(shallow.depthFrontier == 9);
}

TEST_CASE("reach reports deadlocks") {
    const System stuck(LabelSet{kTrivialLabel}, LabelSet{kTrivialLabel}, {N}, {}, {N, N}, {0}, {},
                       {{SpanKey{0, 0, 0, 1}, predNN()}});
    ReachOptions options;
    options.natBound = 3;
    const ReachReport r = reach(stuck, options);
    CHECK(r.visited == 7);
    CHECK(r.transitions == 3);
    CHECK(r.deadlocked.size() == 4);
    CHECK(r.labelCounts.at({kTrivialLabel, kTrivialLabel}) == 3);
    options.start = std::vector<StatePoint>{{5, Value::nat(0)}};
    CHECK_THROWS_AS(reach(stuck, options), TypeError);
}

TEST_CASE("parallel and serial exploration agree") {
    testing::Rng rng(62);
    for (int round = 0; round < 200; ++round) {
        const System g = testing::randomSystem(rng);
        ReachOptions options;
        options.natBound = 2;
        options.depthBound = testing::pick(rng, 0, 4);
        const ReachReport r = reach(g, options);
        CHECK(r == reachSerial(g, options));
        CHECK(reportJson(r) == reportJson(reachSerial(g, options)));
        CHECK(reachableStates(g, options).size() == r.visited);
        CHECK(r.bottomHits.size() + r.deadlocked.size() <= r.visited);
    }
    const System pq = load("sync.csp", "pq");
    ReachOptions options;
    options.natBound = 6;
    options.depthBound = 20;
    CHECK(reach(pq, options) == reachSerial(pq, options));
}

TEST_CASE("report JSON") {
    const System stuck(LabelSet{kTrivialLabel}, LabelSet{kTrivialLabel}, {N}, {}, {N, N}, {0}, {},
                       {{SpanKey{0, 0, 0, 1}, predNN()}});
    ReachOptions options;
    options.natBound = 1;
    const auto j = nlohmann::json::parse(reportJson(reach(stuck, options)));
    CHECK(j["visited"] == 3);
    CHECK(j["deadlocked"].size() == 2);
    CHECK(j["labels"][0]["left"] == "eps");
    CHECK(j["labels"][0]["count"] == 1);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    CHECK(keys.size() == 9);
}

}
