// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/decider_multipath.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "monoterm/decider_single.hpp"

namespace monoterm {

Bound bound_of(RelOp op) { return bounded_below(op) ? Bound::Below : Bound::Above; }

Trend trend_of(const MonotoneClass& cls) {
    switch (cls.direction) {
    case Direction::Up: return Trend::Up;
    case Direction::Down: return Trend::Down;
    case Direction::Flat: return Trend::Const;
    }
    return Trend::Const;
}

CaseKey case_key(const MultiPathDF& p, const MonotoneClass& then_cls, const MonotoneClass& else_cls) {
    return {bound_of(p.guard.op), bound_of(p.cond.op), trend_of(then_cls), trend_of(else_cls)};
}

int case_row(const CaseKey& k) {
    using B = Bound;
    using T = Trend;
    struct Entry {
        B guard, cond;
        T then_trend, else_trend;
        int row;
    };
    static constexpr Entry table[] = {
        {B::Below, B::Above, T::Up, T::Const, 1},    {B::Above, B::Below, T::Down, T::Const, 2},
        {B::Below, B::Below, T::Const, T::Up, 3},    {B::Above, B::Above, T::Const, T::Down, 4},
        {B::Below, B::Above, T::Down, T::Const, 5},  {B::Above, B::Below, T::Up, T::Const, 6},
        {B::Below, B::Below, T::Const, T::Down, 7},  {B::Above, B::Above, T::Const, T::Up, 8},
        {B::Below, B::Above, T::Const, T::Up, 9},    {B::Above, B::Below, T::Const, T::Down, 10},
        {B::Above, B::Above, T::Down, T::Const, 11}, {B::Below, B::Below, T::Up, T::Const, 12},
        {B::Above, B::Above, T::Up, T::Const, 13},   {B::Above, B::Below, T::Const, T::Up, 14},
        {B::Below, B::Below, T::Down, T::Const, 15}, {B::Below, B::Above, T::Const, T::Down, 16},
        {B::Below, B::Below, T::Up, T::Down, 17},    {B::Above, B::Above, T::Down, T::Up, 18},
        {B::Above, B::Below, T::Up, T::Down, 19},    {B::Below, B::Above, T::Down, T::Up, 20},
        {B::Above, B::Above, T::Up, T::Down, 21},    {B::Above, B::Below, T::Down, T::Up, 22},
        {B::Below, B::Above, T::Up, T::Down, 23},    {B::Below, B::Below, T::Down, T::Up, 24},
    };
    for (const auto& e : table) {
        if (e.guard == k.guard && e.cond == k.cond && e.then_trend == k.then_trend && e.else_trend == k.else_trend) {
            return e.row;
        }
    }
    const int offset = (k.guard == B::Above ? 2 : 0) + (k.cond == B::Above ? 1 : 0);
    if (k.then_trend == T::Const) {
        return 25 + offset;
    }
    return (k.then_trend == T::Up ? 29 : 33) + offset;
}

RuleId row_rule(int row) { return rules::table3_row(row); }

IntVal psi_a(const IntVal& d, const IntVal& c1, const IntVal& v, RelOp op) {
    if (v <= 0 || !bounded_above(op) || !compare(d, op, c1)) {
        throw AnalysisError("psi_a: requires v > 0, an upper bound and a start value inside it");
    }
    const IntVal top = op == RelOp::Le ? c1 : IntVal(c1 - 1);
    return (top + v) - floor_mod(top - d, v);
}

IntVal psi_prime_a(const IntVal& d, const IntVal& c1, const IntVal& step, RelOp op) {
    if (step <= 0 || !bounded_below(op) || !compare(d, op, c1)) {
        throw AnalysisError("psi_prime_a: requires step > 0, a lower bound and a start value inside it");
    }
    const IntVal bottom = op == RelOp::Ge ? c1 : IntVal(c1 + 1);
    return (bottom - step) + floor_mod(d - bottom, step);
}

IntVal psi_iter(const IntVal& d, const IntVal& c1, const Update& upd, RelOp op) {
    if (!compare(d, op, c1)) {
        throw AnalysisError("psi_iter: start value must satisfy the condition");
    }
    IntVal x = d;
    IntVal next = apply_update(upd, x);
    const bool needs_up = bounded_above(op);
    if (upd.coeff < 1 || (needs_up ? next <= x : next >= x)) {
        throw AnalysisError("psi_iter: update does not move towards the bound");
    }
    while (compare(next, op, c1)) {
        x = std::move(next);
        next = apply_update(upd, x);
    }
    return next;
}

IntVal escape_value(const IntVal& d, const DiagonalFree& cond, const MonotoneClass& cls) {
    switch (cls.family) {
    case Family::Ra:
        if (cls.v > 0) {
            return psi_a(d, cond.bound, cls.v, cond.op);
        }
        return psi_prime_a(d, cond.bound, -cls.v, cond.op);
    case Family::Rg:
    case Family::I: return psi_iter(d, cond.bound, Update{cls.u, cls.v}, cond.op);
    case Family::Constant: break;
    }
    throw AnalysisError("escape_value: a constant update never leaves its condition");
}

std::pair<MonotoneClass, MonotoneClass> classify_branches(const MultiPathDF& p, const IntVal& x0) {
    const Interval guard = Interval::of(p.guard);
    const Interval then_region = guard.intersect(Interval::of(p.cond));
    const Interval else_region = guard.intersect(Interval::of(negate(p.cond)));
    return {classify_on_region(p.then_update, then_region, x0), classify_on_region(p.else_update, else_region, x0)};
}

namespace {

class FormulaContext {
  public:
    FormulaContext(const MultiPathDF& p, const IntVal& x0, const MonotoneClass& then_cls,
                   const MonotoneClass& else_cls)
        : p_(p), x0_(x0), then_(then_cls), else_(else_cls), not_cond_(negate(p.cond)) {}

    const IntVal& x0() const { return x0_; }

    Conjunct phi(const std::string& name, const IntVal& x) const { return {name + " |= phi", p_.guard.holds(x)}; }
    Conjunct in_b(const std::string& name, const IntVal& x) const { return {name + " |= B", p_.cond.holds(x)}; }
    Conjunct out_b(const std::string& name, const IntVal& x) const { return {name + " |/= B", !p_.cond.holds(x)}; }

    /// "escape(d) |= phi" for the monotone branch; false when d is not in
    /// that branch's region (the escape value is then undefined and the
    /// enclosing disjunct already fails).
    Conjunct escape_phi(const std::string& fn, const std::string& name, const IntVal& d, bool then_branch) const {
        const DiagonalFree& cond = then_branch ? p_.cond : not_cond_;
        const MonotoneClass& cls = then_branch ? then_ : else_;
        const std::string label = fn + "(" + name + ") |= phi";
        if (!p_.guard.holds(d) || !cond.holds(d)) {
            return {label, false};
        }
        return {label, p_.guard.holds(escape_value(d, cond, cls))};
    }

  private:
    const MultiPathDF& p_;
    const IntVal& x0_;
    const MonotoneClass& then_;
    const MonotoneClass& else_;
    DiagonalFree not_cond_;
};

void add(FormulaWitness& w, std::vector<Conjunct> conjuncts) {
    bool all = true;
    for (const auto& c : conjuncts) {
        all = all && c.value;
    }
    if (all && !w.satisfied) {
        w.satisfied = w.disjuncts.size();
    }
    w.disjuncts.push_back(std::move(conjuncts));
}

/// Rows 13-16: one strictly monotone branch that leaves its condition, and
/// one constant branch. `mono_then` tells which branch is the monotone one.
void monotone_constant_formula(FormulaWitness& w, const FormulaContext& f, const IntVal& b, bool mono_then,
                               const std::string& fn) {
    const IntVal& x0 = f.x0();
    // "x in the monotone branch's condition" / "x in the constant branch's condition"
    auto in_mono = [&](const std::string& n, const IntVal& x) { return mono_then ? f.in_b(n, x) : f.out_b(n, x); };
    auto in_const = [&](const std::string& n, const IntVal& x) { return mono_then ? f.out_b(n, x) : f.in_b(n, x); };
    add(w, {f.phi("x0", x0), in_const("x0", x0), f.phi("b", b), in_const("b", b)});
    add(w, {f.phi("x0", x0), in_mono("x0", x0), f.escape_phi(fn, "x0", x0, mono_then), f.phi("b", b),
            in_const("b", b)});
    add(w, {f.phi("x0", x0), in_mono("x0", x0), f.escape_phi(fn, "x0", x0, mono_then), f.phi("b", b),
            in_mono("b", b), f.escape_phi(fn, "b", b, mono_then)});
    add(w, {f.phi("x0", x0), in_const("x0", x0), f.phi("b", b), in_mono("b", b), f.escape_phi(fn, "b", b, mono_then)});
}

} // namespace

FormulaWitness nt_formula(int row, const MultiPathDF& p, const IntVal& x0, const MonotoneClass& then_cls,
                          const MonotoneClass& else_cls) {
    const FormulaContext f(p, x0, then_cls, else_cls);
    FormulaWitness w;
    // b of the constant branch, for rows with exactly one constant branch
    const IntVal& b = then_cls.family == Family::Constant ? then_cls.b() : else_cls.b();
    switch (row) {
    case 1:
    case 2:
    case 3:
    case 4: add(w, {f.phi("x0", x0), f.phi("b", b)}); break;
    case 5:
    case 6: add(w, {f.phi("x0", x0), f.out_b("x0", x0), f.phi("b", b), f.out_b("b", b)}); break;
    case 7:
    case 8: add(w, {f.phi("x0", x0), f.in_b("x0", x0), f.phi("b", b), f.in_b("b", b)}); break;
    case 9:
    case 10:
        add(w, {f.phi("x0", x0), f.out_b("x0", x0)});
        add(w, {f.phi("x0", x0), f.in_b("x0", x0), f.phi("b", b)});
        break;
    case 11:
    case 12:
        add(w, {f.phi("x0", x0), f.in_b("x0", x0)});
        add(w, {f.phi("x0", x0), f.out_b("x0", x0), f.phi("b", b)});
        break;
    case 13: monotone_constant_formula(w, f, b, true, "psi"); break;
    case 14: monotone_constant_formula(w, f, b, false, "psi"); break;
    case 15: monotone_constant_formula(w, f, b, true, "psi'"); break;
    case 16: monotone_constant_formula(w, f, b, false, "psi'"); break;
    case 17:
    case 18: add(w, {f.phi("x0", x0), f.in_b("x0", x0)}); break;
    case 19:
    case 20: add(w, {f.phi("x0", x0), f.out_b("x0", x0)}); break;
    case 25:
    case 26:
    case 27:
    case 28: {
        const IntVal& b1 = then_cls.b();
        const IntVal& b2 = else_cls.b();
        add(w, {f.phi("x0", x0), f.in_b("x0", x0), f.phi("b1", b1), f.in_b("b1", b1)});
        add(w, {f.phi("x0", x0), f.out_b("x0", x0), f.phi("b2", b2), f.out_b("b2", b2)});
        add(w, {f.phi("x0", x0), f.phi("b1", b1), f.phi("b2", b2)});
        break;
    }
    default: throw AnalysisError("nt_formula: row " + std::to_string(row) + " has no closed formula");
    }
    return w;
}

Verdict fixed_point_search(const MultiPathDF& p, const IntVal& x0, const MonotoneClass& then_cls,
                           const MonotoneClass& else_cls, int row, const MultipathOptions& opts) {
    const RuleId rule = row_rule(row);
    if (!p.guard.holds(x0)) {
        return Verdict::terminating(RuleId(rules::guard_false), 0);
    }
    if (then_cls.direction == Direction::Flat || else_cls.direction == Direction::Flat ||
        then_cls.direction == else_cls.direction) {
        throw AnalysisError("fixed_point_search: branches must move in opposite directions");
    }
    const DiagonalFree not_cond = negate(p.cond);
    // Only the branch heading towards the guard's bound can leave the guard.
    const Direction exit_direction = bounded_above(p.guard.op) ? Direction::Up : Direction::Down;

    // Updates are increasing functions, so the exit branch jumps furthest
    // from the edge of its region. If even that jump stays inside the guard,
    // the loop never leaves; the search below then only looks for a cycle
    // to report.
    const bool exit_then = then_cls.direction == exit_direction;
    const Update& exit_update = exit_then ? p.then_update : p.else_update;
    const Interval exit_region = Interval::of(p.guard).intersect(Interval::of(exit_then ? p.cond : not_cond));
    const std::optional<IntVal>& edge = exit_direction == Direction::Up ? exit_region.hi : exit_region.lo;
    FormulaWitness trapped;
    if (exit_region.empty()) {
        add(trapped, {{"x0 |= phi", true}, {"exit branch region is empty", true}});
    } else if (edge && p.guard.holds(apply_update(exit_update, *edge))) {
        add(trapped, {{"x0 |= phi", true}, {"f(" + to_string(*edge) + ") |= phi", true}});
    }
    const std::uint64_t budget =
        trapped.satisfied ? std::min<std::uint64_t>(opts.search_budget, opts.witness_limit) : opts.search_budget;

    std::set<IntVal> passed;
    std::vector<IntVal> order;
    IntVal val = x0;
    for (std::uint64_t step = 0; step < budget; ++step) {
        const bool in_then = p.cond.holds(val);
        const MonotoneClass& cls = in_then ? then_cls : else_cls;
        IntVal next = escape_value(val, in_then ? p.cond : not_cond, cls);
        if (passed.contains(next)) {
            CycleWitness cw;
            auto it = std::find(order.begin(), order.end(), next);
            cw.switch_points.assign(it, order.end());
            cw.switch_points.push_back(val);
            // Spell out the concrete values from the cycle entry.
            IntVal x = next;
            do {
                if (cw.cycle.size() >= opts.witness_limit) {
                    cw.complete = false;
                    break;
                }
                cw.cycle.push_back(x);
                x = apply_update(p.cond.holds(x) ? p.then_update : p.else_update, x);
            } while (x != next);
            return Verdict::non_terminating(rule, std::move(cw));
        }
        if (cls.direction == exit_direction && !p.guard.holds(next)) {
            return Verdict::terminating(rule);
        }
        passed.insert(val);
        order.push_back(val);
        val = std::move(next);
    }
    if (trapped.satisfied) {
        return Verdict::non_terminating(rule, std::move(trapped));
    }
    return Verdict::unsupported("fixed-point search exceeded " + std::to_string(opts.search_budget) + " switches",
                                rule);
}

Verdict decide_multipath(const MultiPathDF& p, const IntVal& x0, const MonotoneClass& then_cls,
                         const MonotoneClass& else_cls, const MultipathOptions& opts) {
    if (!p.guard.holds(x0)) {
        return Verdict::terminating(RuleId(rules::guard_false), 0);
    }
    const int row = case_row(case_key(p, then_cls, else_cls));
    if (row >= 29) {
        // Both branches move the same way: the condition is irrelevant.
        Verdict v = decide_single(p.guard, then_cls, x0);
        v.rule = row_rule(row);
        return v;
    }
    if (row >= 21 && row <= 24) {
        return fixed_point_search(p, x0, then_cls, else_cls, row, opts);
    }
    FormulaWitness w = nt_formula(row, p, x0, then_cls, else_cls);
    if (w.satisfied) {
        return Verdict::non_terminating(row_rule(row), std::move(w));
    }
    return Verdict::terminating(row_rule(row), std::nullopt, std::move(w));
}

namespace {

bool is_identity(const Update& u) { return u.coeff == 1 && u.offset == 0; }

// One branch is x := x. Reaching it with the guard true pins x forever, so
// the question is only whether the other branch delivers x there.
Verdict identity_branch(const MultiPathDF& p, const IntVal& x0) {
    const RuleId rule(rules::identity_branch);
    const bool then_is_id = is_identity(p.then_update);
    const DiagonalFree id_cond = then_is_id ? p.cond : negate(p.cond);
    const DiagonalFree other_cond = negate(id_cond);
    const Update& other = then_is_id ? p.else_update : p.then_update;
    FormulaWitness w;
    if (id_cond.holds(x0)) {
        add(w, {{"x0 |= phi", true}, {"x0 enters the identity branch", true}});
        return Verdict::non_terminating(rule, std::move(w));
    }
    if (is_identity(other)) {
        throw UnsupportedError("both branches are the identity");
    }
    const Interval region = Interval::of(p.guard).intersect(Interval::of(other_cond));
    const MonotoneClass cls = classify_on_region(other, region, x0);
    if (cls.direction == Direction::Flat) {
        const IntVal& b = cls.b();
        const bool stays = p.guard.holds(b);
        add(w, {{"x0 |= phi", true}, {"b |= phi", stays}});
        return stays ? Verdict::non_terminating(rule, std::move(w)) : Verdict::terminating(rule, 1, std::move(w));
    }
    const bool up = cls.direction == Direction::Up;
    if (bounded_above(other_cond.op) != up) {
        // Moves away from the identity region; only the guard can stop it.
        Verdict v = decide_single(p.guard, cls, x0);
        v.rule = rule;
        return v;
    }
    // Values between x0 and the escape value all satisfy the guard when both
    // ends do, since the guard describes an interval.
    const IntVal e = escape_value(x0, other_cond, cls);
    const bool inside = p.guard.holds(e);
    add(w, {{"x0 |= phi", true}, {"escape(x0) = " + to_string(e) + " |= phi", inside}});
    return inside ? Verdict::non_terminating(rule, std::move(w)) : Verdict::terminating(rule, std::nullopt, std::move(w));
}

} // namespace

Verdict decide_multipath(const MultiPathDF& p, const IntVal& x0, const MultipathOptions& opts) {
    if (!p.guard.holds(x0)) {
        return Verdict::terminating(RuleId(rules::guard_false), 0);
    }
    if (is_identity(p.then_update) || is_identity(p.else_update)) {
        return identity_branch(p, x0);
    }
    const auto [then_cls, else_cls] = classify_branches(p, x0);
    return decide_multipath(p, x0, then_cls, else_cls, opts);
}

} // namespace monoterm
