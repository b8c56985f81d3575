// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Results cross the boundary as JSON text, the same schema the CLI emits;
// the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoterm/analyzer.hpp"
#include "monoterm/decider_multipath.hpp"
#include "monoterm/generator.hpp"
#include "monoterm/oracle.hpp"
#include "monoterm/parser.hpp"
#include "monoterm/report.hpp"

namespace py = pybind11;
using namespace monoterm;

namespace {

RelOp op_from(const std::string& s) {
    if (s == "<") return RelOp::Lt;
    if (s == "<=") return RelOp::Le;
    if (s == ">") return RelOp::Gt;
    if (s == ">=") return RelOp::Ge;
    throw py::value_error("unknown operator '" + s + "'");
}

IntVal to_int(const py::int_& x) { return parse_int(py::str(x).cast<std::string>()); }

py::int_ to_py(const IntVal& x) { return py::int_(py::module_::import("builtins").attr("int")(to_string(x))); }

std::string analyze_json(const std::string& text, bool oracle_check, std::uint64_t max_steps) {
    const LoopProgram p = parse(text);
    report::Row row;
    row.file = "<string>";
    row.verdict = analyze(p);
    if (oracle_check) {
        row.oracle = agreement_check(p, row.verdict, {max_steps ? max_steps : default_max_steps()});
    }
    auto j = report::row_json(row);
    j.erase("decision_ms");
    j.erase("file");
    return j.dump();
}

std::string run_json(const std::string& text, std::uint64_t max_steps) {
    const OracleResult r = run(parse(text), {max_steps ? max_steps : default_max_steps()});
    nlohmann::json j{{"outcome", outcome_name(r)}, {"steps", steps_of(r)}, {"description", describe(r)}};
    if (const auto* c = std::get_if<CycleDetected>(&r)) {
        j["period"] = c->period;
    }
    return j.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Termination analysis for monotone integer loops";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("analyze_json", &analyze_json, py::arg("text"), py::arg("oracle_check") = false,
          py::arg("max_steps") = 0);
    m.def("run_json", &run_json, py::arg("text"), py::arg("max_steps") = 0);
    m.def("canonical", [](const std::string& text) { return print(parse(text)); }, py::arg("text"));
    m.def(
        "psi_a",
        [](const py::int_& d, const py::int_& c1, const py::int_& v, const std::string& op) {
            return to_py(psi_a(to_int(d), to_int(c1), to_int(v), op_from(op)));
        },
        py::arg("d"), py::arg("c1"), py::arg("v"), py::arg("op"));
    m.def(
        "psi_prime_a",
        [](const py::int_& d, const py::int_& c1, const py::int_& step, const std::string& op) {
            return to_py(psi_prime_a(to_int(d), to_int(c1), to_int(step), op_from(op)));
        },
        py::arg("d"), py::arg("c1"), py::arg("step"), py::arg("op"));
    m.def(
        "generate",
        [](std::uint64_t seed, std::size_t count, const std::string& shape, std::int64_t bound, bool cover_rows) {
            const auto mix = gen::parse_shape(shape);
            if (!mix) {
                throw py::value_error("unknown shape '" + shape + "'");
            }
            std::vector<std::pair<std::string, std::string>> out;
            for (auto& f : gen::generate_corpus({seed, count, *mix, bound, cover_rows})) {
                out.emplace_back(std::move(f.name), std::move(f.text));
            }
            return out;
        },
        py::arg("seed"), py::arg("count"), py::arg("shape") = "mix", py::arg("bound") = 20,
        py::arg("cover_rows") = false);
}
