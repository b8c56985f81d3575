// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monoterm/loop_model.hpp"
#include "monoterm/oracle.hpp"

namespace monoterm::report {

/// Integers that fit in 64 bits become JSON numbers, wider ones strings.
nlohmann::json int_json(const IntVal& x);

nlohmann::json witness_json(const Witness& w);

/// "terminating", "nonterminating" or "unsupported".
std::string verdict_word(Outcome o);

/// Bench column: T, NT, TO (a decision procedure ran out of budget) or M
/// (loop outside the decidable fragment).
std::string verdict_column(const Verdict& v);

/// One analyzed file, as reported by both analyze and bench.
struct Row {
    std::string file;
    Verdict verdict;
    double decision_ms = 0;
    std::optional<AgreementReport> oracle;
};

nlohmann::json row_json(const Row& row);

/// First line of the text report, e.g. "NONTERMINATING rule=T3-row17".
std::string headline(const Verdict& v);

/// Multi-line human rendering of a witness.
std::string witness_text(const Witness& w);

struct Summary {
    std::size_t analyzed = 0;
    std::size_t terminating = 0;
    std::size_t nonterminating = 0;
    std::size_t timeout = 0;
    std::size_t unsupported = 0;
    std::size_t errors = 0;
    std::size_t oracle_failures = 0;
    double decision_ms = 0;
};

Summary summarize(const std::vector<Row>& rows, std::size_t errors);

std::string summary_line(const Summary& s);

/// Fixed-width table with a header, one line per row and per error, and the
/// summary line.
std::string bench_table(const std::vector<Row>& rows, const std::vector<std::pair<std::string, std::string>>& errors);

/// Milliseconds rounded to whole microseconds.
double round_ms(double ms);

} // namespace monoterm::report
