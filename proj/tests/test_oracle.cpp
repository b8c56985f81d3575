// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>

#include "monoterm/analyzer.hpp"
#include "monoterm/generator.hpp"
#include "monoterm/oracle.hpp"
#include "monoterm/parser.hpp"

using namespace monoterm;

namespace {

LoopProgram example2() {
    return parse("init x = 3; while (x <= 10) { if (x <= 5) { x := x + 2; } else { x := x - 3; } }");
}

// Replays `period` steps from the cycle entry.
void check_cycle(const LoopProgram& p, const CycleDetected& c) {
    Env s = c.entry.values;
    for (std::uint64_t i = 0; i < c.period; ++i) {
        REQUIRE(eval_guard(std::visit([](const auto& sh) { return GuardAtom(sh.guard); }, p.shape), s));
        s = step_once(p, s);
    }
    CHECK(s == c.entry.values);
}

} // namespace

TEST_CASE("run on the documented examples") {
    const LoopProgram ex2 = example2();
    const OracleResult r = run(ex2, {100});
    const auto& c = std::get<CycleDetected>(r);
    CHECK(c.period == 5);
    CHECK(c.entry.step == 0);
    CHECK(c.entry.values.at("x") == 3);
    check_cycle(ex2, c);

    const LoopProgram down = parse("init x = 3; while (x > 0) { x := x - 1; }");
    CHECK(std::get<TerminatedIn>(run(down)).steps == 3);

    const LoopProgram up = parse("init x = 1; while (x > 0) { x := x + 1; }");
    const auto b = std::get<BoundExhausted>(run(up, {100}));
    CHECK(b.steps == 100);
    CHECK(b.reason == ExhaustReason::StepBudget);
    CHECK(b.last.values.at("x") == 101);
}

TEST_CASE("int64 overflow falls back to exact arithmetic") {
    const LoopProgram p = parse("init x = 1; while (x < 1000000000000000000000000000000) { x := 3 * x + 1; }");
    const auto t = std::get<TerminatedIn>(run(p));
    IntVal x = 1;
    std::uint64_t n = 0;
    while (x < parse_int("1000000000000000000000000000000")) {
        x = 3 * x + 1;
        ++n;
    }
    CHECK(t.steps == n);
    const LoopProgram g = parse("init x = 1; while (x > 0) { x := 2 * x; }");
    const auto b = std::get<BoundExhausted>(run(g, {1'000'000, 256}));
    CHECK(b.reason == ExhaustReason::Magnitude);
    CHECK(b.steps == 256);
}

TEST_CASE("diagonal cycles compare full valuations") {
    const LoopProgram p = parse("init x = 4; init y = 0; while (x - y > 0) { x := 7; y := y + 0; }");
    const auto c = std::get<CycleDetected>(run(p));
    CHECK(c.entry.step == 1);
    CHECK(c.period == 1);
    check_cycle(p, c);
}

TEST_CASE("cycle certificates replay and runs are deterministic") {
    gen::Rng rng(41);
    for (int i = 0; i < 2000; ++i) {
        const LoopProgram p = gen::random_program(rng, gen::ShapeMix::Mix, 20);
        const OracleResult a = run(p, {20'000});
        const OracleResult b = run(p, {20'000});
        CHECK(describe(a) == describe(b));
        if (const auto* c = std::get_if<CycleDetected>(&a)) {
            check_cycle(p, *c);
        }
        if (const auto* t = std::get_if<TerminatedIn>(&a)) {
            Env s = p.init;
            for (std::uint64_t k = 0; k < t->steps; ++k) {
                s = step_once(p, s);
            }
            CHECK_FALSE(eval_guard(std::visit([](const auto& sh) { return GuardAtom(sh.guard); }, p.shape), s));
        }
    }
}

TEST_CASE("agreement_check outcomes") {
    const LoopProgram ex2 = example2();
    const Verdict right = analyze(ex2);
    CHECK(agreement_check(ex2, right).status == Agreement::Pass);

    const Verdict wrong = Verdict::terminating("injected");
    const auto r = agreement_check(ex2, wrong);
    CHECK(r.status == Agreement::Fail);
    CHECK(r.details.find("cycle of period 5") != std::string::npos);

    const LoopProgram e1 = parse("init x = 15; while (x >= 5) { if (x >= 10) { x := x + 1; } else { x := x - 1; } }");
    const auto u = agreement_check(e1, analyze(e1), {10'000});
    CHECK(u.status == Agreement::PassUnconfirmed);
    CHECK(u.divergence_consistent);

    const LoopProgram single = parse("init x = 7; while (x >= 5) { x := x - 1; }");
    const Verdict t = analyze(single);
    CHECK(agreement_check(single, t).status == Agreement::Pass);
    CHECK(std::get<TerminatedIn>(agreement_check(single, t).oracle).steps == 3);

    CHECK(agreement_check(single, Verdict::unsupported("x")).status == Agreement::Skipped);
    CHECK(agreement_check(single, Verdict::non_terminating("injected", {})).status == Agreement::Fail);
}

TEST_CASE("MONOTERM_MAX_STEPS overrides the budget") {
    ::setenv("MONOTERM_MAX_STEPS", "1234", 1);
    CHECK(default_max_steps() == 1234);
    ::setenv("MONOTERM_MAX_STEPS", "junk", 1);
    CHECK(default_max_steps() == 1'000'000);
    ::unsetenv("MONOTERM_MAX_STEPS");
    CHECK(default_max_steps(77) == 77);
}
