// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "monoterm/report.hpp"

using namespace monoterm;

TEST_CASE("large integers are written as strings") {
    CHECK(report::int_json(42) == 42);
    CHECK(report::int_json(parse_int("-99999999999999999999")) == "-99999999999999999999");
}

TEST_CASE("bench columns") {
    CHECK(report::verdict_column(Verdict::terminating("r")) == "T");
    CHECK(report::verdict_column(Verdict::non_terminating("r", {})) == "NT");
    CHECK(report::verdict_column(Verdict::unsupported("budget", "T2-rows5-6")) == "TO");
    CHECK(report::verdict_column(Verdict::unsupported("negative coefficient")) == "M");
}

TEST_CASE("summary time is the sum of row times") {
    std::vector<report::Row> rows{{"a", Verdict::terminating("r"), 0.25, {}},
                                  {"b", Verdict::non_terminating("r", {}), 1.5, {}},
                                  {"c", Verdict::unsupported("x"), 0.125, {}}};
    const report::Summary s = report::summarize(rows, 2);
    CHECK(s.decision_ms == doctest::Approx(1.875));
    CHECK(report::summary_line(s) == "Total: 3 analyzed, T: 1, NT: 1, TO: 0, M: 1, errors: 2, time: 1.875 ms");
}

TEST_CASE("witness json shapes") {
    FormulaWitness f;
    f.disjuncts = {{{"x0 |= phi", true}, {"x0 |= B", false}}, {{"x0 |= phi", true}}};
    f.satisfied = 1;
    const auto jf = report::witness_json(f);
    CHECK(jf["kind"] == "formula");
    CHECK(jf["satisfied"] == 1);
    CHECK(jf["disjuncts"][0][1]["value"] == false);

    const auto jd = report::witness_json(DivergenceWitness{3, "T2-rows1-2", -5, -8});
    CHECK(jd["iteration"] == 3);
    CHECK(jd["y"] == -8);
    CHECK(report::witness_json(Witness{}).is_null());
}

TEST_CASE("headline") {
    CHECK(report::headline(Verdict::terminating("single-monotone", 3)) == "TERMINATING rule=single-monotone iterations=3");
    CHECK(report::headline(Verdict::unsupported("why")) == "UNSUPPORTED reason=\"why\"");
}
