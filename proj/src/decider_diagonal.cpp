// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/decider_diagonal.hpp"

#include <utility>

namespace monoterm {

std::string_view to_string(StopCondition s) {
    switch (s) {
    case StopCondition::LinearVsExponentialDecay: return "T2-rows1-2";
    case StopCondition::ExponentialVsLinearGrowth: return "T2-rows3-4";
    case StopCondition::BothExponentialGrowth: return "T2-rows5-6";
    case StopCondition::BothExponentialDecay: return "T2-rows7-8";
    }
    return "?";
}

SinglePathDiag normalize_direction(const SinglePathDiag& p) {
    if (bounded_below(p.guard.op)) {
        return p;
    }
    SinglePathDiag q;
    q.guard = Diagonal{p.guard.rhs, p.guard.lhs, mirror(p.guard.op), -p.guard.bound};
    q.update_lhs = p.update_rhs;
    q.update_rhs = p.update_lhs;
    return q;
}

namespace {

FormulaWitness single_disjunct(std::vector<Conjunct> conjuncts) {
    FormulaWitness w;
    bool all = true;
    for (const auto& c : conjuncts) {
        all = all && c.value;
    }
    w.disjuncts.push_back(std::move(conjuncts));
    if (all) {
        w.satisfied = 0;
    }
    return w;
}

Verdict from_formula(RuleId rule, FormulaWitness w) {
    if (w.satisfied) {
        return Verdict::non_terminating(std::move(rule), std::move(w));
    }
    return Verdict::terminating(std::move(rule), std::nullopt, std::move(w));
}

Verdict shift_iterations(Verdict v, std::uint64_t by) {
    if (v.iterations) {
        *v.iterations += by;
    }
    if (auto* dw = std::get_if<DivergenceWitness>(&v.witness)) {
        dw->iteration += by;
    }
    return v;
}

} // namespace

Verdict ra_ra_rule(const IntVal& v1, const IntVal& v2, Direction dir) {
    const RuleId rule(rules::diag_ra_ra);
    if (dir == Direction::Up) {
        return from_formula(rule, single_disjunct({{"x, y increase", true}, {"v1 >= v2", v1 >= v2}}));
    }
    return from_formula(rule, single_disjunct({{"x, y decrease", true},
                                               {"|v1| <= |v2|", boost::multiprecision::abs(v1) <=
                                                                    boost::multiprecision::abs(v2)}}));
}

std::optional<Verdict> rg_rg_rule(const IntVal& u1, const IntVal& u2, const IntVal& x0, const IntVal& y0,
                                  Direction dir) {
    const RuleId rule(rules::diag_rg_rg);
    const bool up = dir == Direction::Up;
    const Conjunct moving{up ? "x, y increase" : "x, y decrease", true};
    // The lagging variable multiplies faster: the gap eventually collapses.
    if (up ? u1 < u2 : u1 > u2) {
        return from_formula(rule, single_disjunct({moving, {up ? "u1 >= u2" : "u1 <= u2", false}}));
    }
    if (u1 == u2) {
        // gap_n = (x0 - y0) * u^n
        return from_formula(rule, single_disjunct({moving, {"u1 == u2", true}, {"x0 >= y0", x0 >= y0}}));
    }
    // The gap grows eventually; it never shrinks if it does not shrink in the
    // first step.
    const IntVal first_step = x0 * (u1 - 1) - y0 * (u2 - 1);
    if (first_step >= 0) {
        return from_formula(rule, single_disjunct({moving,
                                                   {up ? "u1 > u2" : "u1 < u2", true},
                                                   {"x1 - y1 >= x0 - y0", true}}));
    }
    return std::nullopt;
}

Verdict search_decide(const SinglePathDiag& p, const IntVal& x0, const IntVal& y0, const MonotoneClass& cls_x,
                      const MonotoneClass& cls_y, StopCondition stop, const DiagonalOptions& opts) {
    const Diagonal& g = p.guard;
    if (!bounded_below(g.op)) {
        throw AnalysisError("search_decide requires a normalized guard");
    }
    if (!g.holds(x0, y0)) {
        throw AnalysisError("search_decide requires the guard to hold initially");
    }
    const IntVal& u1 = cls_x.ratio();
    const IntVal& u2 = cls_y.ratio();
    // Once the gap stops shrinking it never shrinks again, provided the
    // faster-multiplying variable is the one that widens it.
    bool dominance = true;
    switch (stop) {
    case StopCondition::LinearVsExponentialDecay:
    case StopCondition::ExponentialVsLinearGrowth: break;
    case StopCondition::BothExponentialGrowth: dominance = u1 >= u2; break;
    case StopCondition::BothExponentialDecay: dominance = u1 <= u2; break;
    }

    IntVal x = apply_update(p.update_lhs, x0);
    IntVal y = apply_update(p.update_rhs, y0);
    for (std::uint64_t n = 1; n <= opts.search_budget; ++n) {
        if (!g.holds(x, y)) {
            return Verdict::terminating(std::string(to_string(stop)), n);
        }
        IntVal nx = apply_update(p.update_lhs, x);
        IntVal ny = apply_update(p.update_rhs, y);
        if (dominance && (nx - ny) >= (x - y)) {
            return Verdict::non_terminating(std::string(to_string(stop)),
                                            DivergenceWitness{n, std::string(to_string(stop)), x, y});
        }
        x = std::move(nx);
        y = std::move(ny);
    }
    return Verdict::unsupported("search budget of " + std::to_string(opts.search_budget) + " iterations exceeded",
                                std::string(to_string(stop)));
}

Verdict decide_diagonal(const SinglePathDiag& p, const IntVal& x0, const IntVal& y0, const MonotoneClass& cls_x,
                        const MonotoneClass& cls_y, const DiagonalOptions& opts) {
    const Diagonal& g = p.guard;
    if (!bounded_below(g.op)) {
        throw AnalysisError("decide_diagonal requires a normalized guard");
    }
    if (!g.holds(x0, y0)) {
        return Verdict::terminating(RuleId(rules::guard_false), 0);
    }
    // A constant assignment jumps once and then stays; take that step first.
    const bool pending_x = cls_x.family == Family::Constant && cls_x.b() != x0;
    const bool pending_y = cls_y.family == Family::Constant && cls_y.b() != y0;
    if (pending_x || pending_y) {
        const IntVal x1 = apply_update(p.update_lhs, x0);
        const IntVal y1 = apply_update(p.update_rhs, y0);
        return shift_iterations(
            decide_diagonal(p, x1, y1, classify(p.update_lhs, x1), classify(p.update_rhs, y1), opts), 1);
    }

    const Direction dx = cls_x.direction;
    const Direction dy = cls_y.direction;
    const bool x_not_down = dx != Direction::Down;
    const bool y_not_up = dy != Direction::Up;
    if (dx == Direction::Flat && dy == Direction::Flat) {
        return Verdict::non_terminating(RuleId(rules::diag_stationary),
                                        single_disjunct({{"guard holds initially", true}, {"x, y constant", true}}));
    }
    if (x_not_down && y_not_up) {
        return Verdict::non_terminating(
            RuleId(rules::diag_opposite),
            single_disjunct({{"guard holds initially", true}, {"x - y increases", true}}));
    }
    if (dx != Direction::Up && dy != Direction::Down) {
        return Verdict::terminating(RuleId(rules::diag_opposite), std::nullopt,
                                    single_disjunct({{"guard holds initially", true}, {"x - y increases", false}}));
    }

    // Same direction from here on.
    const bool up = dx == Direction::Up;
    if (cls_x.family == Family::Ra && cls_y.family == Family::Ra) {
        return ra_ra_rule(cls_x.v, cls_y.v, dx);
    }
    if (cls_x.family == Family::Rg && cls_y.family == Family::Rg) {
        if (auto v = rg_rg_rule(cls_x.u, cls_y.u, x0, y0, dx)) {
            return *v;
        }
        return search_decide(p, x0, y0, cls_x, cls_y,
                             up ? StopCondition::BothExponentialGrowth : StopCondition::BothExponentialDecay, opts);
    }
    if (cls_x.family == Family::Ra) {
        if (up) {
            // An exponential y outruns a linear x.
            return Verdict::terminating(RuleId(rules::diag_linear_exp), std::nullopt,
                                        single_disjunct({{"x linear up, y exponential up", true}}));
        }
        return search_decide(p, x0, y0, cls_x, cls_y, StopCondition::LinearVsExponentialDecay, opts);
    }
    if (cls_y.family == Family::Ra) {
        if (!up) {
            return Verdict::terminating(RuleId(rules::diag_linear_exp), std::nullopt,
                                        single_disjunct({{"x exponential down, y linear down", true}}));
        }
        return search_decide(p, x0, y0, cls_x, cls_y, StopCondition::ExponentialVsLinearGrowth, opts);
    }
    return search_decide(p, x0, y0, cls_x, cls_y,
                         up ? StopCondition::BothExponentialGrowth : StopCondition::BothExponentialDecay, opts);
}

Verdict decide_diagonal(const SinglePathDiag& p, const Env& init, const DiagonalOptions& opts) {
    const SinglePathDiag q = normalize_direction(p);
    const auto xi = init.find(q.guard.lhs);
    const auto yi = init.find(q.guard.rhs);
    if (xi == init.end() || yi == init.end()) {
        throw AnalysisError("diagonal loop variables need initial values");
    }
    const IntVal& x0 = xi->second;
    const IntVal& y0 = yi->second;
    if (!q.guard.holds(x0, y0)) {
        return Verdict::terminating(RuleId(rules::guard_false), 0);
    }
    return decide_diagonal(q, x0, y0, classify(q.update_lhs, x0), classify(q.update_rhs, y0), opts);
}

} // namespace monoterm
