// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/oracle.hpp"

#include <array>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>

namespace monoterm {

std::uint64_t default_max_steps(std::uint64_t fallback) {
    const char* env = std::getenv("MONOTERM_MAX_STEPS");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long long n = std::strtoull(env, &end, 10);
    if (*end != '\0' || n == 0) {
        return fallback;
    }
    return n;
}

Env step_once(const LoopProgram& p, const Env& s) {
    Env next = s;
    std::visit(
        [&](const auto& shape) {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, SinglePathDF>) {
                next[shape.guard.var] = apply_update(shape.update, s.at(shape.guard.var));
            } else if constexpr (std::is_same_v<T, SinglePathDiag>) {
                next[shape.guard.lhs] = apply_update(shape.update_lhs, s.at(shape.guard.lhs));
                next[shape.guard.rhs] = apply_update(shape.update_rhs, s.at(shape.guard.rhs));
            } else {
                const IntVal& x = s.at(shape.guard.var);
                next[shape.guard.var] = apply_update(shape.cond.holds(x) ? shape.then_update : shape.else_update, x);
            }
        },
        p.shape);
    return next;
}

namespace {

// Checked arithmetic: int64 reports overflow, IntVal never does.
bool mul_add(std::int64_t u, std::int64_t x, std::int64_t v, std::int64_t& out) {
    std::int64_t t = 0;
    return !__builtin_mul_overflow(u, x, &t) && !__builtin_add_overflow(t, v, &out);
}
bool mul_add(const IntVal& u, const IntVal& x, const IntVal& v, IntVal& out) {
    out = u * x + v;
    return true;
}
bool diff(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_sub_overflow(a, b, &out); }
bool diff(const IntVal& a, const IntVal& b, IntVal& out) {
    out = a - b;
    return true;
}

template <class T>
bool cmp(const T& a, RelOp op, const T& b) {
    switch (op) {
    case RelOp::Lt: return a < b;
    case RelOp::Le: return a <= b;
    case RelOp::Gt: return a > b;
    case RelOp::Ge: return a >= b;
    }
    return false;
}

enum class Kind { Single, Diag, Multi };

// The loop flattened to at most two integer registers.
template <class T>
struct Machine {
    using State = std::array<T, 2>;
    Kind kind = Kind::Single;
    RelOp guard_op = RelOp::Lt;
    T c{};
    RelOp cond_op = RelOp::Lt;
    T c1{};
    T u1{}, v1{}, u2{}, v2{};
    State init{};
    bool overflow = false;

    bool guard(const State& s) {
        if (kind != Kind::Diag) {
            return cmp(s[0], guard_op, c);
        }
        T d{};
        if (!diff(s[0], s[1], d)) {
            overflow = true;
            return false;
        }
        return cmp(d, guard_op, c);
    }

    void step(State& s) {
        bool ok = true;
        switch (kind) {
        case Kind::Single: ok = mul_add(u1, s[0], v1, s[0]); break;
        case Kind::Diag: ok = mul_add(u1, s[0], v1, s[0]) && mul_add(u2, s[1], v2, s[1]); break;
        case Kind::Multi:
            ok = cmp(s[0], cond_op, c1) ? mul_add(u1, s[0], v1, s[0]) : mul_add(u2, s[0], v2, s[0]);
            break;
        }
        overflow = overflow || !ok;
    }
};

std::size_t bits(const std::int64_t&) { return 0; }
std::size_t bits(const IntVal& x) { return bit_length(x); }

IntVal widen(const std::int64_t& x) { return IntVal(x); }
IntVal widen(const IntVal& x) { return x; }

template <class T>
std::optional<T> narrow(const IntVal& x) {
    if constexpr (std::is_same_v<T, IntVal>) {
        return x;
    } else {
        if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max()) {
            return std::nullopt;
        }
        return x.convert_to<std::int64_t>();
    }
}

template <class T>
std::optional<Machine<T>> build(const LoopProgram& p) {
    Machine<T> m;
    bool ok = true;
    auto set = [&](T& dst, const IntVal& src) {
        if (auto n = narrow<T>(src)) {
            dst = *n;
        } else {
            ok = false;
        }
    };
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, SinglePathDF>) {
                m.kind = Kind::Single;
                m.guard_op = s.guard.op;
                set(m.c, s.guard.bound);
                set(m.u1, s.update.coeff);
                set(m.v1, s.update.offset);
                set(m.init[0], p.init.at(s.guard.var));
            } else if constexpr (std::is_same_v<S, SinglePathDiag>) {
                m.kind = Kind::Diag;
                m.guard_op = s.guard.op;
                set(m.c, s.guard.bound);
                set(m.u1, s.update_lhs.coeff);
                set(m.v1, s.update_lhs.offset);
                set(m.u2, s.update_rhs.coeff);
                set(m.v2, s.update_rhs.offset);
                set(m.init[0], p.init.at(s.guard.lhs));
                set(m.init[1], p.init.at(s.guard.rhs));
            } else {
                m.kind = Kind::Multi;
                m.guard_op = s.guard.op;
                set(m.c, s.guard.bound);
                m.cond_op = s.cond.op;
                set(m.c1, s.cond.bound);
                set(m.u1, s.then_update.coeff);
                set(m.v1, s.then_update.offset);
                set(m.u2, s.else_update.coeff);
                set(m.v2, s.else_update.offset);
                set(m.init[0], p.init.at(s.guard.var));
            }
        },
        p.shape);
    if (!ok) {
        return std::nullopt;
    }
    return m;
}

template <class T>
TraceState to_trace(const LoopProgram& p, const std::array<T, 2>& s, std::uint64_t step) {
    TraceState t;
    t.step = step;
    const auto vars = loop_variables(p.shape);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        t.values[vars[i]] = widen(s[i]);
    }
    return t;
}

// nullopt when int64 arithmetic overflowed.
template <class T>
std::optional<OracleResult> brent(const LoopProgram& p, Machine<T> m, const OracleOptions& opts) {
    using State = typename Machine<T>::State;
    const State x0 = m.init;
    if (!m.guard(x0)) {
        if (m.overflow) {
            return std::nullopt;
        }
        return TerminatedIn{0};
    }
    State tortoise = x0;
    State hare = x0;
    m.step(hare);
    std::uint64_t k = 1;
    std::uint64_t power = 1;
    std::uint64_t lam = 1;
    for (;;) {
        if (m.overflow) {
            return std::nullopt;
        }
        const bool holds = m.guard(hare);
        if (m.overflow) {
            return std::nullopt;
        }
        if (!holds) {
            return TerminatedIn{k};
        }
        if (tortoise == hare) {
            break;
        }
        if (k >= opts.max_steps) {
            return BoundExhausted{to_trace(p, hare, k), k, ExhaustReason::StepBudget};
        }
        if (bits(hare[0]) > opts.max_bits || bits(hare[1]) > opts.max_bits) {
            return BoundExhausted{to_trace(p, hare, k), k, ExhaustReason::Magnitude};
        }
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        m.step(hare);
        ++k;
        ++lam;
    }
    // Locate the first state of the cycle.
    tortoise = x0;
    hare = x0;
    for (std::uint64_t i = 0; i < lam; ++i) {
        m.step(hare);
    }
    std::uint64_t mu = 0;
    while (tortoise != hare) {
        m.step(tortoise);
        m.step(hare);
        ++mu;
    }
    return CycleDetected{to_trace(p, tortoise, mu), lam};
}

bool moves_away(const IntVal& before, const IntVal& after, RelOp op) {
    return bounded_below(op) ? after > before : after < before;
}

// Runs 100 more iterations from `from`; the guard must keep holding and every
// step must move strictly away from the guard's bound (or, for a diagonal
// guard, must not shrink the normalized gap).
bool divergence_consistent(const LoopProgram& p, const Env& from) {
    Env s = from;
    for (int i = 0; i < 100; ++i) {
        const bool ok = std::visit(
            [&](const auto& shape) {
                using S = std::decay_t<decltype(shape)>;
                if (!eval_guard(GuardAtom(shape.guard), s)) {
                    return false;
                }
                const Env next = step_once(p, s);
                if constexpr (std::is_same_v<S, SinglePathDiag>) {
                    const IntVal before = s.at(shape.guard.lhs) - s.at(shape.guard.rhs);
                    const IntVal after = next.at(shape.guard.lhs) - next.at(shape.guard.rhs);
                    if (bounded_below(shape.guard.op) ? after < before : after > before) {
                        return false;
                    }
                } else {
                    if (!moves_away(s.at(shape.guard.var), next.at(shape.guard.var), shape.guard.op)) {
                        return false;
                    }
                }
                s = next;
                return true;
            },
            p.shape);
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::string render(const Env& e) {
    std::string out = "{";
    for (const auto& [k, v] : e) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += k + "=" + to_string(v);
    }
    return out + "}";
}

} // namespace

OracleResult run(const LoopProgram& p, const OracleOptions& opts) {
    validate(p);
    if (auto fast = build<std::int64_t>(p)) {
        if (auto r = brent(p, *fast, opts)) {
            return *r;
        }
    }
    return *brent(p, *build<IntVal>(p), opts);
}

std::string outcome_name(const OracleResult& r) {
    switch (r.index()) {
    case 0: return "terminated";
    case 1: return "cycle";
    default: return "bound-exhausted";
    }
}

std::uint64_t steps_of(const OracleResult& r) {
    if (const auto* t = std::get_if<TerminatedIn>(&r)) {
        return t->steps;
    }
    if (const auto* c = std::get_if<CycleDetected>(&r)) {
        return c->entry.step + c->period;
    }
    return std::get<BoundExhausted>(r).steps;
}

std::string describe(const OracleResult& r) {
    std::ostringstream os;
    if (const auto* t = std::get_if<TerminatedIn>(&r)) {
        os << "terminated after " << t->steps << " iterations";
    } else if (const auto* c = std::get_if<CycleDetected>(&r)) {
        os << "cycle of period " << c->period << " entered at step " << c->entry.step << " in state "
           << render(c->entry.values);
    } else {
        const auto& b = std::get<BoundExhausted>(r);
        os << (b.reason == ExhaustReason::StepBudget ? "step budget" : "magnitude cap") << " exhausted after "
           << b.steps << " iterations in state " << render(b.last.values);
    }
    return os.str();
}

std::string_view to_string(Agreement a) {
    switch (a) {
    case Agreement::Pass: return "pass";
    case Agreement::PassUnconfirmed: return "pass-unconfirmed";
    case Agreement::Fail: return "fail";
    case Agreement::Skipped: return "skipped";
    }
    return "?";
}

AgreementReport agreement_check(const LoopProgram& p, const Verdict& v, const OracleOptions& opts) {
    AgreementReport rep;
    rep.oracle = run(p, opts);
    const std::string seen = describe(rep.oracle);
    switch (v.outcome) {
    case Outcome::Unsupported:
        rep.status = Agreement::Skipped;
        rep.details = "no verdict to check; oracle " + seen;
        break;
    case Outcome::Terminating:
        if (const auto* t = std::get_if<TerminatedIn>(&rep.oracle)) {
            if (v.iterations && *v.iterations != t->steps) {
                rep.status = Agreement::Fail;
                rep.details = "predicted " + std::to_string(*v.iterations) + " iterations, oracle " + seen;
            } else {
                rep.status = Agreement::Pass;
                rep.details = seen;
            }
        } else {
            rep.status = Agreement::Fail;
            rep.details = "verdict terminating, oracle " + seen;
        }
        break;
    case Outcome::NonTerminating:
        if (std::holds_alternative<CycleDetected>(rep.oracle)) {
            rep.status = Agreement::Pass;
            rep.details = seen;
        } else if (const auto* b = std::get_if<BoundExhausted>(&rep.oracle)) {
            rep.status = Agreement::PassUnconfirmed;
            rep.divergence_consistent = divergence_consistent(p, b->last.values);
            rep.details = seen + (rep.divergence_consistent ? "; divergence-consistent" : "; divergence unconfirmed");
        } else {
            rep.status = Agreement::Fail;
            rep.details = "verdict non-terminating, oracle " + seen;
        }
        break;
    }
    return rep;
}

} // namespace monoterm
