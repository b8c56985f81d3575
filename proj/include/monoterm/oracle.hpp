// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "monoterm/loop_model.hpp"

namespace monoterm {

/// Variable valuation after `step` loop iterations.
struct TraceState {
    Env values;
    std::uint64_t step = 0;
    friend bool operator==(const TraceState&, const TraceState&) = default;
};

struct TerminatedIn {
    std::uint64_t steps = 0;
};

/// `entry` is the first state of the cycle; `period` iterations from it
/// return to the same valuation.
struct CycleDetected {
    TraceState entry;
    std::uint64_t period = 0;
};

enum class ExhaustReason { StepBudget, Magnitude };

struct BoundExhausted {
    TraceState last;
    std::uint64_t steps = 0;
    ExhaustReason reason = ExhaustReason::StepBudget;
};

using OracleResult = std::variant<TerminatedIn, CycleDetected, BoundExhausted>;

struct OracleOptions {
    std::uint64_t max_steps = 1'000'000;
    /// Values wider than this many bits stop the run as BoundExhausted.
    std::size_t max_bits = 4096;
};

/// Budget from MONOTERM_MAX_STEPS, or `fallback` when unset or malformed.
std::uint64_t default_max_steps(std::uint64_t fallback = 1'000'000);

/// One loop iteration applied to `s`. The guard must hold at `s`.
Env step_once(const LoopProgram& p, const Env& s);

/// Executes `p` from its initial values. Cycles are found with Brent's
/// algorithm on exact valuations, so no visited set is kept.
OracleResult run(const LoopProgram& p, const OracleOptions& opts = {});

std::string describe(const OracleResult& r);
std::string outcome_name(const OracleResult& r);
std::uint64_t steps_of(const OracleResult& r);

enum class Agreement { Pass, PassUnconfirmed, Fail, Skipped };

std::string_view to_string(Agreement a);

struct AgreementReport {
    Agreement status = Agreement::Skipped;
    OracleResult oracle;
    /// Set for PassUnconfirmed: the run's tail keeps moving away from the
    /// guard's bound.
    bool divergence_consistent = false;
    std::string details;
};

/// Compares a verdict with a concrete run. Unsupported verdicts are Skipped.
AgreementReport agreement_check(const LoopProgram& p, const Verdict& v, const OracleOptions& opts = {});

} // namespace monoterm
