// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/classifier.hpp"

#include <utility>

namespace monoterm {

std::string_view to_string(Direction d) {
    switch (d) {
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    case Direction::Flat: return "flat";
    }
    return "?";
}

std::string_view to_string(Family f) {
    switch (f) {
    case Family::Constant: return "Constant";
    case Family::Ra: return "Ra";
    case Family::Rg: return "Rg";
    case Family::I: return "I";
    }
    return "?";
}

MonotoneClass MonotoneClass::constant(IntVal b) { return {Family::Constant, Direction::Flat, 0, std::move(b)}; }

MonotoneClass MonotoneClass::ra(IntVal v) {
    const Direction d = v > 0 ? Direction::Up : Direction::Down;
    return {Family::Ra, d, 1, std::move(v)};
}

MonotoneClass MonotoneClass::rg(IntVal u, Direction d) { return {Family::Rg, d, std::move(u), 0}; }

MonotoneClass MonotoneClass::irregular(IntVal u, IntVal v, Direction d) {
    return {Family::I, d, std::move(u), std::move(v)};
}

std::string describe(const MonotoneClass& cls) {
    std::string s(to_string(cls.family));
    switch (cls.family) {
    case Family::Constant: s += "{b=" + to_string(cls.v) + "}"; break;
    case Family::Ra: s += "{v=" + to_string(cls.v) + "}"; break;
    case Family::Rg: s += "{u=" + to_string(cls.u) + "}"; break;
    case Family::I: s += "{u=" + to_string(cls.u) + ", v=" + to_string(cls.v) + "}"; break;
    }
    return s + " " + std::string(to_string(cls.direction));
}

namespace {

// For u > 1: x_{n+1} - x_n = ((u - 1) * x_n + v), and the sign of this
// first difference is preserved along the whole sequence.
int step_sign(const Update& upd, const IntVal& x) { return sign((upd.coeff - 1) * x + upd.offset); }

MonotoneClass moving(const Update& upd, Direction d) {
    if (upd.offset == 0) {
        return MonotoneClass::rg(upd.coeff, d);
    }
    return MonotoneClass::irregular(upd.coeff, upd.offset, d);
}

} // namespace

MonotoneClass classify(const Update& upd, const IntVal& x0) {
    if (upd.coeff < 0) {
        throw UnsupportedError("non-monotone update: negative coefficient " + to_string(upd.coeff));
    }
    if (upd.coeff == 0) {
        return MonotoneClass::constant(upd.offset);
    }
    if (upd.coeff == 1) {
        if (upd.offset == 0) {
            return MonotoneClass::constant(x0);
        }
        return MonotoneClass::ra(upd.offset);
    }
    const int s = step_sign(upd, x0);
    if (s == 0) {
        // x0 is the fixed point
        return MonotoneClass::constant(x0);
    }
    return moving(upd, s > 0 ? Direction::Up : Direction::Down);
}

MonotoneClass classify_on_region(const Update& upd, const Interval& region, const IntVal& fallback) {
    if (upd.coeff < 0) {
        throw UnsupportedError("non-monotone update: negative coefficient " + to_string(upd.coeff));
    }
    if (upd.coeff == 0) {
        return MonotoneClass::constant(upd.offset);
    }
    if (upd.coeff == 1) {
        if (upd.offset == 0) {
            throw UnsupportedError("identity update in a branch is not monotone");
        }
        return MonotoneClass::ra(upd.offset);
    }
    if (region.empty()) {
        return moving(upd, step_sign(upd, fallback) < 0 ? Direction::Down : Direction::Up);
    }
    if (region.lo && step_sign(upd, *region.lo) > 0) {
        return moving(upd, Direction::Up);
    }
    if (region.hi && step_sign(upd, *region.hi) < 0) {
        return moving(upd, Direction::Down);
    }
    const std::string offset = upd.offset < 0 ? " - " + to_string(IntVal(-upd.offset)) : " + " + to_string(upd.offset);
    throw UnsupportedError("update " + to_string(upd.coeff) + " * x" + offset +
                           " changes direction within its branch region");
}

IntVal closed_form(const MonotoneClass& cls, const IntVal& x0, std::uint64_t n) {
    switch (cls.family) {
    case Family::Constant: return n == 0 ? x0 : cls.b();
    case Family::Ra: return x0 + cls.v * n;
    case Family::Rg: return x0 * boost::multiprecision::pow(cls.u, static_cast<unsigned>(n));
    case Family::I: {
        const IntVal un = boost::multiprecision::pow(cls.u, static_cast<unsigned>(n));
        return un * x0 + cls.v * (un - 1) / (cls.u - 1);
    }
    }
    return x0;
}

} // namespace monoterm
