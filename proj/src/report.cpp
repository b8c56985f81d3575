// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace monoterm::report {

using nlohmann::json;

json int_json(const IntVal& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return to_string(x);
}

namespace {

json ints(const std::vector<IntVal>& xs) {
    json a = json::array();
    for (const auto& x : xs) {
        a.push_back(int_json(x));
    }
    return a;
}

std::string join(const std::vector<IntVal>& xs) {
    std::string s;
    for (const auto& x : xs) {
        s += (s.empty() ? "" : ", ") + to_string(x);
    }
    return s;
}

} // namespace

json witness_json(const Witness& w) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, FormulaWitness>) {
                json ds = json::array();
                for (const auto& d : x.disjuncts) {
                    json cs = json::array();
                    for (const auto& c : d) {
                        cs.push_back({{"label", c.label}, {"value", c.value}});
                    }
                    ds.push_back(cs);
                }
                json j{{"kind", "formula"}, {"disjuncts", ds}};
                j["satisfied"] = x.satisfied ? json(*x.satisfied) : json(nullptr);
                return j;
            } else if constexpr (std::is_same_v<T, CycleWitness>) {
                return {{"kind", "cycle"},
                        {"cycle", ints(x.cycle)},
                        {"switch_points", ints(x.switch_points)},
                        {"complete", x.complete}};
            } else {
                return {{"kind", "divergence"},
                        {"iteration", x.iteration},
                        {"condition", x.condition},
                        {"x", int_json(x.x)},
                        {"y", int_json(x.y)}};
            }
        },
        w);
}

std::string verdict_word(Outcome o) {
    switch (o) {
    case Outcome::Terminating: return "terminating";
    case Outcome::NonTerminating: return "nonterminating";
    case Outcome::Unsupported: return "unsupported";
    }
    return "?";
}

std::string verdict_column(const Verdict& v) {
    switch (v.outcome) {
    case Outcome::Terminating: return "T";
    case Outcome::NonTerminating: return "NT";
    case Outcome::Unsupported: return v.rule.empty() ? "M" : "TO";
    }
    return "?";
}

double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

json row_json(const Row& row) {
    json j{{"file", row.file},
           {"verdict", verdict_word(row.verdict.outcome)},
           {"rule", row.verdict.rule},
           {"witness", witness_json(row.verdict.witness)},
           {"decision_ms", round_ms(row.decision_ms)}};
    if (row.verdict.iterations) {
        j["iterations"] = *row.verdict.iterations;
    }
    if (row.verdict.outcome == Outcome::Unsupported) {
        j["reason"] = row.verdict.reason;
    }
    if (row.oracle) {
        j["oracle"] = {{"outcome", outcome_name(row.oracle->oracle)},
                       {"steps", steps_of(row.oracle->oracle)},
                       {"agreement", std::string(to_string(row.oracle->status))}};
        if (row.oracle->status == Agreement::PassUnconfirmed) {
            j["oracle"]["divergence_consistent"] = row.oracle->divergence_consistent;
        }
    }
    return j;
}

std::string headline(const Verdict& v) {
    std::string s;
    switch (v.outcome) {
    case Outcome::Terminating: s = "TERMINATING"; break;
    case Outcome::NonTerminating: s = "NONTERMINATING"; break;
    case Outcome::Unsupported: s = "UNSUPPORTED"; break;
    }
    if (!v.rule.empty()) {
        s += " rule=" + v.rule;
    }
    if (v.iterations) {
        s += " iterations=" + std::to_string(*v.iterations);
    }
    if (v.outcome == Outcome::Unsupported) {
        s += " reason=\"" + v.reason + "\"";
    }
    return s;
}

std::string witness_text(const Witness& w) {
    std::ostringstream os;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FormulaWitness>) {
                for (std::size_t i = 0; i < x.disjuncts.size(); ++i) {
                    os << (x.satisfied == i ? "  * " : "    ");
                    for (std::size_t k = 0; k < x.disjuncts[i].size(); ++k) {
                        const auto& c = x.disjuncts[i][k];
                        os << (k ? " && " : "") << c.label << (c.value ? " [true]" : " [false]");
                    }
                    os << "\n";
                }
            } else if constexpr (std::is_same_v<T, CycleWitness>) {
                os << "  cycle: " << join(x.cycle) << (x.complete ? "" : ", ...") << "\n";
                os << "  switch points: " << join(x.switch_points) << "\n";
            } else if constexpr (std::is_same_v<T, DivergenceWitness>) {
                os << "  " << x.condition << " holds at iteration " << x.iteration << " (x=" << to_string(x.x)
                   << ", y=" << to_string(x.y) << ")\n";
            }
        },
        w);
    return os.str();
}

Summary summarize(const std::vector<Row>& rows, std::size_t errors) {
    Summary s;
    s.errors = errors;
    for (const auto& r : rows) {
        ++s.analyzed;
        const std::string col = verdict_column(r.verdict);
        if (col == "T") {
            ++s.terminating;
        } else if (col == "NT") {
            ++s.nonterminating;
        } else if (col == "TO") {
            ++s.timeout;
        } else {
            ++s.unsupported;
        }
        if (r.oracle && r.oracle->status == Agreement::Fail) {
            ++s.oracle_failures;
        }
        s.decision_ms += r.decision_ms;
    }
    return s;
}

std::string summary_line(const Summary& s) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "Total: %zu analyzed, T: %zu, NT: %zu, TO: %zu, M: %zu, errors: %zu, time: %.3f ms",
                  s.analyzed, s.terminating, s.nonterminating, s.timeout, s.unsupported, s.errors, s.decision_ms);
    return buf;
}

std::string bench_table(const std::vector<Row>& rows, const std::vector<std::pair<std::string, std::string>>& errors) {
    std::ostringstream os;
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-28s %-4s %-22s %12s  %s\n", "file", "res", "rule", "time(ms)", "oracle");
    os << buf;
    for (const auto& r : rows) {
        const std::string oracle = r.oracle ? std::string(to_string(r.oracle->status)) : "-";
        std::snprintf(buf, sizeof buf, "%-28s %-4s %-22s %12.3f  %s\n", r.file.c_str(),
                      verdict_column(r.verdict).c_str(), r.verdict.rule.empty() ? "-" : r.verdict.rule.c_str(),
                      r.decision_ms, oracle.c_str());
        os << buf;
    }
    for (const auto& [file, msg] : errors) {
        os << file << ": error: " << msg << "\n";
    }
    const Summary s = summarize(rows, errors.size());
    os << summary_line(s) << "\n";
    if (s.oracle_failures > 0) {
        os << "Oracle disagreements: " << s.oracle_failures << "\n";
    }
    return os.str();
}

} // namespace monoterm::report
