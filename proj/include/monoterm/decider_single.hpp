// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "monoterm/classifier.hpp"
#include "monoterm/loop_model.hpp"

namespace monoterm {

/// Decides `while (x ~ c) x := f(x)` for the start value x0, where `cls` is
/// the class of f from x0.
///
/// A guard bounded from above is escaped by an increasing sequence and kept
/// forever by a decreasing one; symmetrically for guards bounded from below.
/// A Constant sequence is pinned at b after one step.
Verdict decide_single(const DiagonalFree& guard, const MonotoneClass& cls, const IntVal& x0);

Verdict decide_single(const SinglePathDF& loop, const IntVal& x0);

} // namespace monoterm
