// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "monoterm/loop_model.hpp"

namespace monoterm {

struct AnalyzeOptions {
    /// Iteration cap for the diagonal search and switch cap for the
    /// multipath fixed-point search.
    std::uint64_t search_budget = 1'000'000;
};

/// Classifies the loop's updates and runs the decider for its shape. Loops
/// outside the decidable fragment come back as Unsupported, never as an
/// exception.
Verdict analyze(const LoopProgram& p, const AnalyzeOptions& opts = {});

} // namespace monoterm
