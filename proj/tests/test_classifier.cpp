// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "monoterm/classifier.hpp"

using namespace monoterm;

TEST_CASE("classify on the documented examples") {
    CHECK(classify({1, 1}, 15) == MonotoneClass::ra(1));
    CHECK(classify({1, 1}, 15).direction == Direction::Up);
    CHECK(classify({2, 0}, 3) == MonotoneClass::rg(2, Direction::Up));
    CHECK(classify({2, 1}, -5) == MonotoneClass::irregular(2, 1, Direction::Down));
    CHECK(classify({1, 0}, 7) == MonotoneClass::constant(7));
}

TEST_CASE("degenerate sequences become constants") {
    CHECK(classify({0, 9}, -100) == MonotoneClass::constant(9));
    CHECK(classify({2, 0}, 0) == MonotoneClass::constant(0));
    CHECK(classify({3, -4}, 2) == MonotoneClass::constant(2)); // fixed point of 3x - 4
    CHECK(classify({2, 0}, -1).direction == Direction::Down);
}

TEST_CASE("negative multipliers are not monotone") {
    CHECK_THROWS_AS(classify({-1, 0}, 3), UnsupportedError);
    CHECK_THROWS_AS(classify_on_region({-2, 1}, {}, 0), UnsupportedError);
}

TEST_CASE("closed forms") {
    CHECK(closed_form(MonotoneClass::ra(-1), 15, 5) == 10);
    CHECK(closed_form(MonotoneClass::rg(2, Direction::Up), 3, 4) == 48);
    CHECK(closed_form(MonotoneClass::irregular(2, 1, Direction::Up), 1, 3) == 15);
    CHECK(closed_form(MonotoneClass::constant(4), 9, 0) == 9);
    CHECK(closed_form(MonotoneClass::constant(4), 9, 3) == 4);
}

TEST_CASE("closed form agrees with iteration and direction is sound") {
    const Update updates[] = {{0, 3}, {0, -6}, {1, 4}, {1, -3}, {1, 0}, {2, 0}, {3, 0}, {2, 5}, {3, -7}, {2, -1}};
    for (const Update& upd : updates) {
        for (int x0 = -50; x0 <= 50; ++x0) {
            const MonotoneClass cls = classify(upd, x0);
            IntVal x = x0;
            for (std::uint64_t n = 0; n <= 40; ++n) {
                REQUIRE(closed_form(cls, x0, n) == x);
                const IntVal next = apply_update(upd, x);
                if (n > 0 || cls.family != Family::Constant) {
                    switch (cls.direction) {
                    case Direction::Up: CHECK(next > x); break;
                    case Direction::Down: CHECK(next < x); break;
                    case Direction::Flat: CHECK(next == x); break;
                    }
                }
                x = next;
            }
        }
    }
}

TEST_CASE("region classification requires one direction on the whole region") {
    // 2x - 10 has its fixed point at 10.
    const Update upd{2, -10};
    CHECK(classify_on_region(upd, {IntVal(11), std::nullopt}, 0).direction == Direction::Up);
    CHECK(classify_on_region(upd, {std::nullopt, IntVal(9)}, 0).direction == Direction::Down);
    CHECK_THROWS_AS(classify_on_region(upd, {IntVal(5), IntVal(20)}, 0), UnsupportedError);
    CHECK_THROWS_AS(classify_on_region({1, 0}, {}, 0), UnsupportedError);
    // Empty region: the branch never runs, direction taken at the fallback.
    CHECK(classify_on_region(upd, {IntVal(3), IntVal(2)}, 40).direction == Direction::Up);
    CHECK(classify_on_region({1, -2}, {IntVal(5), IntVal(20)}, 0) == MonotoneClass::ra(-2));
}
