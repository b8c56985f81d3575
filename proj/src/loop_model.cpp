// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/loop_model.hpp"

#include <algorithm>
#include <utility>

namespace monoterm {

std::string_view symbol(RelOp op) {
    switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return ">=";
    }
    return "?";
}

RelOp negate(RelOp op) {
    switch (op) {
    case RelOp::Lt: return RelOp::Ge;
    case RelOp::Le: return RelOp::Gt;
    case RelOp::Gt: return RelOp::Le;
    case RelOp::Ge: return RelOp::Lt;
    }
    return op;
}

RelOp mirror(RelOp op) {
    switch (op) {
    case RelOp::Lt: return RelOp::Gt;
    case RelOp::Le: return RelOp::Ge;
    case RelOp::Gt: return RelOp::Lt;
    case RelOp::Ge: return RelOp::Le;
    }
    return op;
}

bool compare(const IntVal& lhs, RelOp op, const IntVal& rhs) {
    switch (op) {
    case RelOp::Lt: return lhs < rhs;
    case RelOp::Le: return lhs <= rhs;
    case RelOp::Gt: return lhs > rhs;
    case RelOp::Ge: return lhs >= rhs;
    }
    return false;
}

namespace {

const IntVal& lookup(const Env& env, const VarName& name) {
    auto it = env.find(name);
    if (it == env.end()) {
        throw AnalysisError("unbound variable '" + name + "'");
    }
    return it->second;
}

} // namespace

bool eval_guard(const GuardAtom& atom, const Env& env) {
    return std::visit(
        [&](const auto& a) -> bool {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, DiagonalFree>) {
                return a.holds(lookup(env, a.var));
            } else {
                return a.holds(lookup(env, a.lhs), lookup(env, a.rhs));
            }
        },
        atom);
}

DiagonalFree negate(const DiagonalFree& atom) { return {atom.var, negate(atom.op), atom.bound}; }

GuardAtom negate(const GuardAtom& atom) {
    return std::visit(
        [](const auto& a) -> GuardAtom {
            auto copy = a;
            copy.op = negate(a.op);
            return copy;
        },
        atom);
}

Interval Interval::of(const DiagonalFree& atom) {
    switch (atom.op) {
    case RelOp::Lt: return {std::nullopt, atom.bound - 1};
    case RelOp::Le: return {std::nullopt, atom.bound};
    case RelOp::Gt: return {atom.bound + 1, std::nullopt};
    case RelOp::Ge: return {atom.bound, std::nullopt};
    }
    return {};
}

Interval Interval::intersect(const Interval& other) const {
    Interval r;
    if (lo && other.lo) {
        r.lo = std::max(*lo, *other.lo);
    } else {
        r.lo = lo ? lo : other.lo;
    }
    if (hi && other.hi) {
        r.hi = std::min(*hi, *other.hi);
    } else {
        r.hi = hi ? hi : other.hi;
    }
    return r;
}

std::vector<VarName> loop_variables(const LoopShape& shape) {
    return std::visit(
        [](const auto& s) -> std::vector<VarName> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SinglePathDiag>) {
                return {s.guard.lhs, s.guard.rhs};
            } else {
                return {s.guard.var};
            }
        },
        shape);
}

void validate(const LoopProgram& p) {
    for (const auto& v : loop_variables(p.shape)) {
        if (!p.init.contains(v)) {
            throw AnalysisError("variable '" + v + "' has no initial value");
        }
    }
    if (const auto* diag = std::get_if<SinglePathDiag>(&p.shape)) {
        if (diag->guard.lhs == diag->guard.rhs) {
            throw AnalysisError("diagonal guard compares a variable with itself");
        }
    }
    if (const auto* mp = std::get_if<MultiPathDF>(&p.shape)) {
        if (mp->cond.var != mp->guard.var) {
            throw AnalysisError("branch condition and guard must refer to the same variable");
        }
    }
}

RuleId rules::table3_row(int row) {
    if (row >= 25 && row <= 28) {
        return "T3-rows25-28";
    }
    if (row >= 29 && row <= 32) {
        return "T3-rows29-32";
    }
    if (row >= 33 && row <= 36) {
        return "T3-rows33-36";
    }
    return "T3-row" + std::to_string(row);
}

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::Terminating: return "terminating";
    case Outcome::NonTerminating: return "nonterminating";
    case Outcome::Unsupported: return "unsupported";
    }
    return "?";
}

Verdict Verdict::terminating(RuleId rule, std::optional<std::uint64_t> iterations, Witness witness) {
    Verdict v;
    v.outcome = Outcome::Terminating;
    v.rule = std::move(rule);
    v.iterations = iterations;
    v.witness = std::move(witness);
    return v;
}

Verdict Verdict::non_terminating(RuleId rule, Witness witness) {
    Verdict v;
    v.outcome = Outcome::NonTerminating;
    v.rule = std::move(rule);
    v.witness = std::move(witness);
    return v;
}

Verdict Verdict::unsupported(std::string reason, RuleId rule) {
    Verdict v;
    v.outcome = Outcome::Unsupported;
    v.rule = std::move(rule);
    v.reason = std::move(reason);
    return v;
}

} // namespace monoterm
