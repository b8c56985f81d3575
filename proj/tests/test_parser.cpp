// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "monoterm/generator.hpp"
#include "monoterm/parser.hpp"

using namespace monoterm;

TEST_CASE("parse example loops") {
    const LoopProgram e1 =
        parse("init x = 15; while (x >= 5) { if (x >= 10) { x := x + 1; } else { x := x - 1; } }");
    const auto* m = std::get_if<MultiPathDF>(&e1.shape);
    REQUIRE(m);
    CHECK(*m == MultiPathDF{{"x", RelOp::Ge, 5}, {"x", RelOp::Ge, 10}, {1, 1}, {1, -1}});
    CHECK(e1.init == Env{{"x", 15}});

    const LoopProgram e2 = parse("init x = 3; while (x <= 10) { if (x <= 5) { x := x + 2; } else { x := x - 3; } }");
    CHECK(std::get<MultiPathDF>(e2.shape) == MultiPathDF{{"x", RelOp::Le, 10}, {"x", RelOp::Le, 5}, {1, 2}, {1, -3}});

    const LoopProgram s = parse("init x = 0; while (x < 0) { x := x + 1; }");
    CHECK(std::get<SinglePathDF>(s.shape) == SinglePathDF{{"x", RelOp::Lt, 0}, {1, 1}});
}

TEST_CASE("every update form canonicalizes") {
    auto upd = [](const std::string& rhs) {
        return std::get<SinglePathDF>(parse("init x = 1; while (x > 0) { x := " + rhs + "; }").shape).update;
    };
    CHECK(upd("7") == Update{0, 7});
    CHECK(upd("-7") == Update{0, -7});
    CHECK(upd("3 * x") == Update{3, 0});
    CHECK(upd("x + 4") == Update{1, 4});
    CHECK(upd("x - 4") == Update{1, -4});
    CHECK(upd("x + -4") == Update{1, -4});
    CHECK(upd("2 * x + 1") == Update{2, 1});
    CHECK(upd("2 * x - 1") == Update{2, -1});
    CHECK(upd("x + 0") == Update{1, 0});
    CHECK(upd("123456789012345678901234567890") == Update{0, parse_int("123456789012345678901234567890")});
}

TEST_CASE("diagonal loops and comments") {
    const LoopProgram p = parse("# header\ninit y = -2;\ninit x = 4; # trailing\n"
                                "while (x - y > 0) {\n  y := y + 2;\n  x := x + 1;\n}\n");
    const auto& d = std::get<SinglePathDiag>(p.shape);
    CHECK(d.guard == Diagonal{"x", "y", RelOp::Gt, 0});
    CHECK(d.update_lhs == Update{1, 1});
    CHECK(d.update_rhs == Update{1, 2});
}

TEST_CASE("syntax errors carry a position inside the text") {
    const std::string text = "init x = 1;\nwhile (x >) { x := x + 1; }";
    try {
        parse(text);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 11);
    }
    CHECK_THROWS_AS(parse("init x = 1; while (x > 0) { x := x + 1 }"), SyntaxError);
    CHECK_THROWS_AS(parse("init x = 1; while (x > 0) { x := x + 1; } extra"), SyntaxError);
    CHECK_THROWS_AS(parse("init x = 0x10; while (x > 0) { x := x + 1; }"), SyntaxError);
}

TEST_CASE("unsupported shapes are rejected, not truncated") {
    CHECK_THROWS_AS(parse("init x = 1; while (x > 0 && x < 9) { x := x + 1; }"), ShapeError);
    CHECK_THROWS_AS(parse("init x = 1; init y = 1; init z = 1; while (x - y > 0) { x := x + 1; y := y + 1; z := z + 1; }"),
                    ShapeError);
    CHECK_THROWS_AS(parse("init x = 1; init y = 1; while (x > 0) { x := y + 1; }"), ShapeError);
    CHECK_THROWS_AS(parse("init x = 1; init y = 2; while (x > 0) { x := x + 1; }"), ShapeError);
    CHECK_THROWS_AS(parse("init x = 1; init x = 2; while (x > 0) { x := x + 1; }"), ShapeError);
}

TEST_CASE("missing initial values are reported by name") {
    try {
        parse("init x = 1; while (x - y > 0) { x := x + 1; y := y + 1; }");
        FAIL("expected MissingInit");
    } catch (const MissingInit& e) {
        CHECK(e.var() == "y");
    }
}

TEST_CASE("print renders the canonical text") {
    const LoopProgram p{SinglePathDiag{{"x", "y", RelOp::Gt, 0}, {1, 1}, {1, 2}}, {{"x", 5}, {"y", 1}}};
    CHECK(print(p) == "init x = 5;\ninit y = 1;\nwhile (x - y > 0) {\n    x := x + 1;\n    y := y + 2;\n}\n");
}

TEST_CASE("round trip over generated programs") {
    gen::Rng rng(11);
    for (int i = 0; i < 3000; ++i) {
        const LoopProgram p = gen::random_program(rng, gen::ShapeMix::Mix, i % 2 ? 20 : 1'000'000'000);
        const std::string text = print(p);
        CHECK(parse(text) == p);
        CHECK(print(parse(text)) == text);
    }
}
