// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "monoterm/classifier.hpp"
#include "monoterm/loop_model.hpp"

namespace monoterm {

/// Non-termination test used by the iterate-and-check search, one per pair
/// of growth behaviours (x first, y second).
enum class StopCondition {
    LinearVsExponentialDecay,  // x Ra down, y Rg/I down
    ExponentialVsLinearGrowth, // x Rg/I up, y Ra up
    BothExponentialGrowth,     // x, y Rg/I up
    BothExponentialDecay,      // x, y Rg/I down
};

/// Stable name reported in witnesses.
std::string_view to_string(StopCondition s);

struct DiagonalOptions {
    std::uint64_t search_budget = 1'000'000;
};

/// Rewrites a guard bounded from above, (x - y < c), into the equivalent
/// (y - x > -c) with the two variables' roles swapped.
SinglePathDiag normalize_direction(const SinglePathDiag& p);

/// Both variables additive and moving the same way. `dir` is their common
/// direction.
Verdict ra_ra_rule(const IntVal& v1, const IntVal& v2, Direction dir);

/// Both variables geometric and moving the same way. Returns nullopt when the
/// faster variable is the leading one but the gap shrinks at first, so the
/// answer depends on c and needs the search.
std::optional<Verdict> rg_rg_rule(const IntVal& u1, const IntVal& u2, const IntVal& x0, const IntVal& y0,
                                  Direction dir);

/// Iterates x_n, y_n from (x0, y0). Returns Terminating at the first n where
/// the guard fails, NonTerminating at the first n where the guard holds and
/// the gap x - y can no longer decrease, and Unsupported when neither happens
/// within the budget. Requires a normalized loop whose guard holds at (x0, y0).
Verdict search_decide(const SinglePathDiag& p, const IntVal& x0, const IntVal& y0, const MonotoneClass& cls_x,
                      const MonotoneClass& cls_y, StopCondition stop, const DiagonalOptions& opts = {});

/// Requires a normalized loop and the classes of both updates from (x0, y0).
Verdict decide_diagonal(const SinglePathDiag& p, const IntVal& x0, const IntVal& y0, const MonotoneClass& cls_x,
                        const MonotoneClass& cls_y, const DiagonalOptions& opts = {});

/// Normalizes, classifies and decides.
Verdict decide_diagonal(const SinglePathDiag& p, const Env& init, const DiagonalOptions& opts = {});

} // namespace monoterm
