// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "monoterm/classifier.hpp"
#include "monoterm/loop_model.hpp"

namespace monoterm {

/// Which side a comparison bounds its variable from.
enum class Bound { Below, Above };

/// Movement of a branch update over the values on which it runs.
enum class Trend { Up, Down, Const };

Bound bound_of(RelOp op);
Trend trend_of(const MonotoneClass& cls);

/// Selects one of the 36 rule-table cases.
struct CaseKey {
    Bound guard = Bound::Below;
    Bound cond = Bound::Below;
    Trend then_trend = Trend::Const;
    Trend else_trend = Trend::Const;

    friend bool operator==(const CaseKey&, const CaseKey&) = default;
};

CaseKey case_key(const MultiPathDF& p, const MonotoneClass& then_cls, const MonotoneClass& else_cls);

/// Row 1..36 of the rule table for `key`. Rows 25-28 (both branches
/// constant), 29-32 (both increasing) and 33-36 (both decreasing) are groups;
/// within a group the row is picked by the two bound sides.
int case_row(const CaseKey& key);

/// Rule id reported for `row`; grouped rows share an id.
RuleId row_rule(int row);

/// First value of d, d + v, d + 2v, ... that falsifies (x op c1) for
/// op in {<, <=}. Requires v > 0 and (d op c1).
IntVal psi_a(const IntVal& d, const IntVal& c1, const IntVal& v, RelOp op);

/// First value of d, d - step, d - 2 step, ... that falsifies (x op c1) for
/// op in {>, >=}. Requires step > 0 and (d op c1).
IntVal psi_prime_a(const IntVal& d, const IntVal& c1, const IntVal& step, RelOp op);

/// Iterates x := u * x + v from d until (x op c1) fails and returns that
/// value. The update must move d towards the bound of the comparison.
IntVal psi_iter(const IntVal& d, const IntVal& c1, const Update& upd, RelOp op);

/// First value that leaves `cond` when `cls` is applied repeatedly from d:
/// the closed form for Ra, the iteration otherwise.
IntVal escape_value(const IntVal& d, const DiagonalFree& cond, const MonotoneClass& cls);

/// Classes of the then/else updates over the values on which each runs.
std::pair<MonotoneClass, MonotoneClass> classify_branches(const MultiPathDF& p, const IntVal& x0);

/// Instantiates the non-termination formula of `row` (rows 1-20, 25-28).
FormulaWitness nt_formula(int row, const MultiPathDF& p, const IntVal& x0, const MonotoneClass& then_cls,
                          const MonotoneClass& else_cls);

struct MultipathOptions {
    /// Cap on branch switches explored by the fixed-point search.
    std::uint64_t search_budget = 1'000'000;
    /// Longest concrete cycle spelled out in a witness.
    std::size_t witness_limit = 10'000;
};

/// Alternating-branch search for rows 21-24. Jumps from one branch switch to
/// the next via the escape values; a repeated switch value proves
/// non-termination, leaving the guard on the branch that moves towards the
/// guard's bound proves termination.
Verdict fixed_point_search(const MultiPathDF& p, const IntVal& x0, const MonotoneClass& then_cls,
                           const MonotoneClass& else_cls, int row, const MultipathOptions& opts = {});

Verdict decide_multipath(const MultiPathDF& p, const IntVal& x0, const MonotoneClass& then_cls,
                         const MonotoneClass& else_cls, const MultipathOptions& opts = {});

/// Classifies both branches and decides. A branch that is the identity
/// x := x is decided by its own rule before the table is consulted.
Verdict decide_multipath(const MultiPathDF& p, const IntVal& x0, const MultipathOptions& opts = {});

} // namespace monoterm
