// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "monoterm/generator.hpp"
#include "monoterm/loop_model.hpp"

using namespace monoterm;

TEST_CASE("eval_guard on the documented examples") {
    CHECK(eval_guard(DiagonalFree{"x", RelOp::Ge, 5}, {{"x", 15}}));
    CHECK_FALSE(eval_guard(Diagonal{"x", "y", RelOp::Gt, 0}, {{"x", 3}, {"y", 3}}));
    CHECK(eval_guard(DiagonalFree{"x", RelOp::Le, 10}, {{"x", 3}}));
}

TEST_CASE("eval_guard rejects unbound variables") {
    CHECK_THROWS_AS(eval_guard(DiagonalFree{"x", RelOp::Lt, 0}, {{"y", 1}}), AnalysisError);
    CHECK_THROWS_AS(eval_guard(Diagonal{"x", "y", RelOp::Lt, 0}, {{"x", 1}}), AnalysisError);
}

TEST_CASE("apply_update is exact") {
    CHECK(apply_update({1, 2}, 5) == 7);
    CHECK(apply_update({0, 9}, -100) == 9);
    CHECK(apply_update({2, 1}, 3) == 7);
    IntVal big = 1;
    for (int i = 0; i < 200; ++i) {
        big = apply_update({3, 0}, big);
    }
    CHECK(bit_length(big) == 317); // 3^200 needs 317 bits
}

TEST_CASE("negating a guard flips its value everywhere") {
    for (RelOp op : {RelOp::Lt, RelOp::Le, RelOp::Gt, RelOp::Ge}) {
        for (int c = -3; c <= 3; ++c) {
            for (int x = -5; x <= 5; ++x) {
                const GuardAtom df = DiagonalFree{"x", op, c};
                const Env env{{"x", x}, {"y", 2}};
                CHECK(eval_guard(df, env) != eval_guard(negate(df), env));
                const GuardAtom dg = Diagonal{"x", "y", op, c};
                CHECK(eval_guard(dg, env) != eval_guard(negate(dg), env));
            }
        }
    }
}

TEST_CASE("mirror swaps operands") {
    for (RelOp op : {RelOp::Lt, RelOp::Le, RelOp::Gt, RelOp::Ge}) {
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                CHECK(compare(a, op, b) == compare(b, mirror(op), a));
            }
        }
    }
}

TEST_CASE("Interval of a guard holds exactly the satisfying values") {
    for (RelOp op : {RelOp::Lt, RelOp::Le, RelOp::Gt, RelOp::Ge}) {
        const DiagonalFree g{"x", op, 4};
        const Interval iv = Interval::of(g);
        for (int x = -2; x <= 10; ++x) {
            CHECK(iv.contains(x) == g.holds(x));
        }
    }
    const Interval both = Interval::of({"x", RelOp::Gt, 3}).intersect(Interval::of({"x", RelOp::Le, 3}));
    CHECK(both.empty());
}

TEST_CASE("validate catches missing and mismatched variables") {
    LoopProgram p{SinglePathDF{{"x", RelOp::Lt, 0}, {1, 1}}, {}};
    CHECK_THROWS_AS(validate(p), AnalysisError);
    p.init["x"] = 0;
    CHECK_NOTHROW(validate(p));
    LoopProgram m{MultiPathDF{{"x", RelOp::Lt, 0}, {"y", RelOp::Lt, 0}, {1, 1}, {1, -1}}, {{"x", 0}, {"y", 0}}};
    CHECK_THROWS_AS(validate(m), AnalysisError);
}

TEST_CASE("rule ids for grouped rows") {
    CHECK(rules::table3_row(17) == "T3-row17");
    CHECK(rules::table3_row(26) == "T3-rows25-28");
    CHECK(rules::table3_row(30) == "T3-rows29-32");
    CHECK(rules::table3_row(36) == "T3-rows33-36");
}
