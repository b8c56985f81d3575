// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monoterm/integer.hpp"

namespace monoterm {

/// Raised when an analysis precondition does not hold (unbound variable,
/// escape search from a value outside its region, ...). Indicates misuse.
class AnalysisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a loop lies outside the decidable fragment. The analyzer
/// turns it into an Unsupported verdict.
class UnsupportedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class RelOp { Lt, Le, Gt, Ge };

std::string_view symbol(RelOp op);

/// Logical negation over the integers: < <-> >=, <= <-> >.
RelOp negate(RelOp op);

/// Operator with swapped operands: a < b  <=>  b > a.
RelOp mirror(RelOp op);

/// Gt/Ge keep a variable bounded from below; Lt/Le from above.
inline bool bounded_below(RelOp op) { return op == RelOp::Gt || op == RelOp::Ge; }
inline bool bounded_above(RelOp op) { return !bounded_below(op); }

bool compare(const IntVal& lhs, RelOp op, const IntVal& rhs);

using VarName = std::string;
using Env = std::map<VarName, IntVal>;

/// x ~ c
struct DiagonalFree {
    VarName var;
    RelOp op = RelOp::Lt;
    IntVal bound;

    bool holds(const IntVal& x) const { return compare(x, op, bound); }
    friend bool operator==(const DiagonalFree&, const DiagonalFree&) = default;
};

/// (x - y) ~ c
struct Diagonal {
    VarName lhs;
    VarName rhs;
    RelOp op = RelOp::Gt;
    IntVal bound;

    bool holds(const IntVal& x, const IntVal& y) const { return compare(x - y, op, bound); }
    friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

using GuardAtom = std::variant<DiagonalFree, Diagonal>;

bool eval_guard(const GuardAtom& atom, const Env& env);
GuardAtom negate(const GuardAtom& atom);
DiagonalFree negate(const DiagonalFree& atom);

/// Canonical assignment x := coeff * x + offset. A constant assignment
/// x := b is coeff = 0, offset = b.
struct Update {
    IntVal coeff{1};
    IntVal offset{0};

    friend bool operator==(const Update&, const Update&) = default;
};

inline IntVal apply_update(const Update& upd, const IntVal& x) { return upd.coeff * x + upd.offset; }

/// Closed integer interval; a missing end is unbounded.
struct Interval {
    std::optional<IntVal> lo;
    std::optional<IntVal> hi;

    static Interval of(const DiagonalFree& atom);
    bool empty() const { return lo && hi && *lo > *hi; }
    bool contains(const IntVal& x) const { return (!lo || *lo <= x) && (!hi || x <= *hi); }
    Interval intersect(const Interval& other) const;
};

/// while (x ~ c) { x := f(x); }
struct SinglePathDF {
    DiagonalFree guard;
    Update update;
    friend bool operator==(const SinglePathDF&, const SinglePathDF&) = default;
};

/// while ((x - y) ~ c) { x := f1(x); y := f2(y); }
struct SinglePathDiag {
    Diagonal guard;
    Update update_lhs;
    Update update_rhs;
    friend bool operator==(const SinglePathDiag&, const SinglePathDiag&) = default;
};

/// while (x ~ c) { if (x ~' c1) x := f1(x); else x := f2(x); }
struct MultiPathDF {
    DiagonalFree guard;
    DiagonalFree cond;
    Update then_update;
    Update else_update;
    friend bool operator==(const MultiPathDF&, const MultiPathDF&) = default;
};

using LoopShape = std::variant<SinglePathDF, SinglePathDiag, MultiPathDF>;

struct LoopProgram {
    LoopShape shape;
    Env init;

    friend bool operator==(const LoopProgram&, const LoopProgram&) = default;
};

/// Variables read or written by the loop, in guard order.
std::vector<VarName> loop_variables(const LoopShape& shape);

/// Throws AnalysisError if some loop variable has no initial value or a
/// multipath condition names a different variable than the guard.
void validate(const LoopProgram& p);

/// Identifier of the rule or procedure that produced a verdict.
using RuleId = std::string;

namespace rules {
inline constexpr std::string_view guard_false = "guard-false-initially";
inline constexpr std::string_view single_monotone = "single-monotone";
inline constexpr std::string_view single_constant = "single-constant";
inline constexpr std::string_view diag_opposite = "diag-opposite-directions";
inline constexpr std::string_view diag_stationary = "diag-stationary-gap";
inline constexpr std::string_view diag_ra_ra = "diag-ra-ra";
inline constexpr std::string_view diag_rg_rg = "diag-rg-rg";
inline constexpr std::string_view diag_linear_exp = "diag-linear-vs-exponential";
inline constexpr std::string_view identity_branch = "multipath-identity-branch";
RuleId table3_row(int row);
} // namespace rules

/// One conjunct of an instantiated non-termination formula.
struct Conjunct {
    std::string label;
    bool value = false;
    friend bool operator==(const Conjunct&, const Conjunct&) = default;
};

/// Instantiated disjunction of conjunctions; `satisfied` is the index of the
/// first true disjunct, if any.
struct FormulaWitness {
    std::vector<std::vector<Conjunct>> disjuncts;
    std::optional<std::size_t> satisfied;
    friend bool operator==(const FormulaWitness&, const FormulaWitness&) = default;
};

/// A value cycle of a multipath loop. `cycle` lists the concrete values from
/// the cycle entry up to (excluding) its return; `switch_points` the values at
/// which the active branch changes. `cycle` may be truncated for very long
/// cycles, in which case `complete` is false.
struct CycleWitness {
    std::vector<IntVal> cycle;
    std::vector<IntVal> switch_points;
    bool complete = true;
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// A stopping condition that fired at iteration `iteration` of a search.
struct DivergenceWitness {
    std::uint64_t iteration = 0;
    std::string condition;
    IntVal x;
    IntVal y;
    friend bool operator==(const DivergenceWitness&, const DivergenceWitness&) = default;
};

using Witness = std::variant<std::monostate, FormulaWitness, CycleWitness, DivergenceWitness>;

enum class Outcome { Terminating, NonTerminating, Unsupported };

std::string_view to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::Unsupported;
    RuleId rule;
    /// Iterations until exit, for Terminating verdicts where known.
    std::optional<std::uint64_t> iterations;
    Witness witness;
    /// Explanation for Unsupported verdicts.
    std::string reason;

    static Verdict terminating(RuleId rule, std::optional<std::uint64_t> iterations = std::nullopt,
                               Witness witness = {});
    static Verdict non_terminating(RuleId rule, Witness witness);
    static Verdict unsupported(std::string reason, RuleId rule = {});

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

} // namespace monoterm
