// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "monoterm/loop_model.hpp"

namespace monoterm {

enum class Direction { Up, Down, Flat };

/// Constant: x := b (or a sequence pinned at b).
/// Ra: x := x + v, v != 0.
/// Rg: x := u * x, u > 1.
/// I:  x := u * x + v, u > 1, v != 0.
enum class Family { Constant, Ra, Rg, I };

std::string_view to_string(Direction d);
std::string_view to_string(Family f);

struct MonotoneClass {
    Family family = Family::Constant;
    Direction direction = Direction::Flat;
    /// Multiplier: 1 for Ra, u for Rg/I, 0 for Constant.
    IntVal u;
    /// Additive term: v for Ra/I, 0 for Rg, b for Constant.
    IntVal v;

    const IntVal& b() const { return v; }
    bool exponential() const { return family == Family::Rg || family == Family::I; }
    /// Growth factor of the value differences: 1 for Ra, u for Rg/I.
    IntVal ratio() const { return exponential() ? u : IntVal(1); }

    static MonotoneClass constant(IntVal b);
    static MonotoneClass ra(IntVal v);
    static MonotoneClass rg(IntVal u, Direction d);
    static MonotoneClass irregular(IntVal u, IntVal v, Direction d);

    friend bool operator==(const MonotoneClass&, const MonotoneClass&) = default;
};

std::string describe(const MonotoneClass& cls);

/// Class and direction of the value sequence x0, f(x0), f(f(x0)), ...
/// Throws UnsupportedError for u < 0 (alternating sequences).
MonotoneClass classify(const Update& upd, const IntVal& x0);

/// Class of an update over every value of `region`, the set of values on
/// which a branch executes. The direction must be the same at every point of
/// the region; a region straddling the update's fixed point, an identity
/// update, or u < 0 throws UnsupportedError. For an empty region the
/// direction is taken at `fallback`.
MonotoneClass classify_on_region(const Update& upd, const Interval& region, const IntVal& fallback);

/// n-th element of the sequence started at x0.
IntVal closed_form(const MonotoneClass& cls, const IntVal& x0, std::uint64_t n);

} // namespace monoterm
