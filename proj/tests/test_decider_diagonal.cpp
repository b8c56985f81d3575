// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "monoterm/analyzer.hpp"
#include "monoterm/decider_diagonal.hpp"
#include "monoterm/decider_single.hpp"
#include "monoterm/generator.hpp"
#include "monoterm/oracle.hpp"

using namespace monoterm;

namespace {

LoopProgram diag(RelOp op, int c, Update ux, Update uy, int x0, int y0) {
    return {SinglePathDiag{{"x", "y", op, c}, ux, uy}, {{"x", x0}, {"y", y0}}};
}

Verdict decide(const LoopProgram& p) { return decide_diagonal(std::get<SinglePathDiag>(p.shape), p.init); }

bool confirmed(const LoopProgram& p, const Verdict& v) {
    const auto r = agreement_check(p, v);
    return r.status == Agreement::Pass || (r.status == Agreement::PassUnconfirmed && r.divergence_consistent);
}

} // namespace

TEST_CASE("normalize_direction") {
    const SinglePathDiag p{{"x", "y", RelOp::Lt, 5}, {1, 1}, {2, 0}};
    const SinglePathDiag q = normalize_direction(p);
    CHECK(q.guard == Diagonal{"y", "x", RelOp::Gt, -5});
    CHECK(q.update_lhs == Update{2, 0});
    CHECK(q.update_rhs == Update{1, 1});
    const SinglePathDiag r{{"x", "y", RelOp::Ge, 2}, {1, 1}, {2, 0}};
    CHECK(normalize_direction(r) == r);
    CHECK(normalize_direction(SinglePathDiag{{"x", "y", RelOp::Le, 5}, {}, {}}).guard.op == RelOp::Ge);
}

TEST_CASE("additive pairs") {
    CHECK(decide(diag(RelOp::Gt, 0, {1, 2}, {1, 1}, 5, 1)).outcome == Outcome::NonTerminating);
    CHECK(decide(diag(RelOp::Gt, 0, {1, 1}, {1, 2}, 5, 1)).outcome == Outcome::Terminating);
    CHECK(ra_ra_rule(3, 3, Direction::Up).outcome == Outcome::NonTerminating);
    CHECK(ra_ra_rule(-2, -5, Direction::Down).outcome == Outcome::NonTerminating);
    CHECK(ra_ra_rule(-5, -2, Direction::Down).outcome == Outcome::Terminating);
}

TEST_CASE("geometric pairs") {
    auto rg = [](int u1, int u2, int x0, int y0, Direction d) { return rg_rg_rule(u1, u2, x0, y0, d); };
    REQUIRE(rg(3, 2, 4, 2, Direction::Up));
    CHECK(rg(3, 2, 4, 2, Direction::Up)->outcome == Outcome::NonTerminating);
    CHECK(rg(2, 3, 100, 1, Direction::Up)->outcome == Outcome::Terminating);
    CHECK(rg(2, 2, 1, 2, Direction::Up)->outcome == Outcome::Terminating);
    const LoopProgram p = diag(RelOp::Gt, -10, {2, 0}, {2, 0}, 1, 2);
    const Verdict v = decide(p);
    CHECK(v.outcome == Outcome::Terminating);
    CHECK(std::get<TerminatedIn>(run(p)).steps == 4);
}

TEST_CASE("faster leader whose gap dips first needs the search") {
    // x = 3^n, y = 30 * 2^n: the gap falls for seven steps before growing.
    CHECK_FALSE(rg_rg_rule(3, 2, 1, 30, Direction::Up));
    const LoopProgram t = diag(RelOp::Gt, -30, {3, 0}, {2, 0}, 1, 30);
    CHECK(decide(t).outcome == Outcome::Terminating);
    CHECK(std::holds_alternative<TerminatedIn>(run(t)));
    const LoopProgram n = diag(RelOp::Gt, -2000, {3, 0}, {2, 0}, 1, 30); // lowest gap is -1653 at n = 7
    const Verdict v = decide(n);
    CHECK(v.outcome == Outcome::NonTerminating);
    CHECK(v.rule == "T2-rows5-6");
    CHECK(confirmed(n, v));
}

TEST_CASE("search examples") {
    // gap 18, 19, 21, 25, 33, ... never shrinks after the first step.
    const LoopProgram a = diag(RelOp::Ge, 0, {1, -1}, {2, 0}, 10, -8);
    const Verdict va = decide(a);
    CHECK(va.outcome == Outcome::NonTerminating);
    CHECK(va.rule == "T2-rows1-2");
    CHECK(std::get<DivergenceWitness>(va.witness).iteration == 1);

    // gap 11, 7, 4, 3, 6, ... bottoms out at 3 and recovers.
    const LoopProgram b = diag(RelOp::Gt, 0, {1, -5}, {2, 0}, 10, -1);
    const Verdict vb = decide(b);
    CHECK(vb.outcome == Outcome::NonTerminating);
    CHECK(std::get<DivergenceWitness>(vb.witness).iteration == 3);
    CHECK(confirmed(b, vb));

    // gap 1 - 5 > 0 fails at once.
    const Verdict vc = decide(diag(RelOp::Gt, 0, {2, 0}, {1, 3}, 1, 5));
    CHECK(vc.outcome == Outcome::Terminating);
    CHECK(vc.iterations == 0u);
}

TEST_CASE("the printed stopping conditions are not sufficient") {
    // x := x - 5, y := 2y from (-1, -1), c = -8: the row 1 predicate already
    // holds at n = 1 (y = -2 < x - c = 2, both negative) yet the gap keeps
    // shrinking while it is small and the loop exits at n = 3.
    const LoopProgram p = diag(RelOp::Gt, -8, {1, -5}, {2, 0}, -1, -1);
    const Verdict v = decide(p);
    CHECK(v.outcome == Outcome::Terminating);
    CHECK(std::get<TerminatedIn>(run(p)).steps == v.iterations);
}

TEST_CASE("pending constant jumps are taken before deciding") {
    // y jumps to 100 once, then x - y > 0 fails.
    const Verdict v = decide(diag(RelOp::Gt, 0, {1, 1}, {0, 100}, 5, 0));
    CHECK(v.outcome == Outcome::Terminating);
    CHECK(decide(diag(RelOp::Gt, 0, {1, 1}, {0, -100}, 5, 0)).outcome == Outcome::NonTerminating);
    CHECK(decide(diag(RelOp::Gt, 0, {1, 0}, {1, 0}, 5, 0)).outcome == Outcome::NonTerminating);
}

TEST_CASE("additive pairs equal the single-variable gap loop") {
    for (RelOp op : {RelOp::Gt, RelOp::Ge, RelOp::Lt, RelOp::Le}) {
        for (int v1 : {-3, -1, 2, 4}) {
            for (int v2 : {-4, -2, 1, 3}) {
                for (int g0 = -5; g0 <= 5; ++g0) {
                    const LoopProgram p = diag(op, 1, {1, v1}, {1, v2}, g0, 0);
                    const DiagonalFree gap{"g", op, 1};
                    const Update step{1, v1 - v2};
                    const Verdict expected = decide_single(gap, classify(step, g0), g0);
                    CHECK(decide(p).outcome == expected.outcome);
                }
            }
        }
    }
}

TEST_CASE("normalization preserves verdicts and the oracle agrees") {
    gen::Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const LoopProgram p = gen::random_program(rng, gen::ShapeMix::Diagonal, 30);
        const auto& s = std::get<SinglePathDiag>(p.shape);
        const Verdict v = analyze(p);
        LoopProgram flipped = p;
        flipped.shape = normalize_direction(s);
        CHECK(analyze(flipped).outcome == v.outcome);
        if (v.outcome != Outcome::Unsupported) {
            CHECK(confirmed(p, v));
        }
    }
}
