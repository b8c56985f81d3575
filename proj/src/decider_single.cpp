// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/decider_single.hpp"

namespace monoterm {

namespace {

std::string holds_label(const std::string& what, const DiagonalFree& g) {
    return what + " " + std::string(symbol(g.op)) + " " + to_string(g.bound);
}

} // namespace

Verdict decide_single(const DiagonalFree& guard, const MonotoneClass& cls, const IntVal& x0) {
    if (!guard.holds(x0)) {
        return Verdict::terminating(RuleId(rules::guard_false), 0);
    }
    FormulaWitness w;
    if (cls.direction == Direction::Flat) {
        const bool stays = guard.holds(cls.b());
        w.disjuncts.push_back({{holds_label("x0", guard), true}, {holds_label("b", guard), stays}});
        if (stays) {
            w.satisfied = 0;
            return Verdict::non_terminating(RuleId(rules::single_constant), std::move(w));
        }
        return Verdict::terminating(RuleId(rules::single_constant), 1, std::move(w));
    }
    const bool up = cls.direction == Direction::Up;
    // Moving away from the bound keeps the guard true forever.
    const bool away = bounded_below(guard.op) ? up : !up;
    w.disjuncts.push_back({{holds_label("x0", guard), true},
                           {std::string("update moves ") + (up ? "up" : "down") + " away from the bound", away}});
    if (away) {
        w.satisfied = 0;
        return Verdict::non_terminating(RuleId(rules::single_monotone), std::move(w));
    }
    return Verdict::terminating(RuleId(rules::single_monotone), std::nullopt, std::move(w));
}

Verdict decide_single(const SinglePathDF& loop, const IntVal& x0) {
    return decide_single(loop.guard, classify(loop.update, x0), x0);
}

} // namespace monoterm
