// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monoterm/analyzer.hpp"
#include "monoterm/generator.hpp"
#include "monoterm/oracle.hpp"
#include "monoterm/parser.hpp"
#include "monoterm/report.hpp"

namespace monoterm::cli {

namespace fs = std::filesystem;

namespace {

struct CheckFlags {
    bool oracle_check = false;
    std::uint64_t max_steps = 0;
    std::string format = "text";
};

void add_check_flags(CLI::App* cmd, CheckFlags& f) {
    cmd->add_flag("--oracle-check", f.oracle_check, "Run the loop concretely and compare with the verdict");
    cmd->add_option("--max-steps", f.max_steps, "Iteration budget of the concrete run (default 1000000)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

report::Row analyze_program(const std::string& name, const LoopProgram& p, const CheckFlags& flags) {
    report::Row row;
    row.file = name;
    const auto t0 = std::chrono::steady_clock::now();
    row.verdict = analyze(p);
    const auto t1 = std::chrono::steady_clock::now();
    row.decision_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (flags.oracle_check) {
        OracleOptions o;
        o.max_steps = flags.max_steps ? flags.max_steps : default_max_steps();
        row.oracle = agreement_check(p, row.verdict, o);
    }
    return row;
}

int verdict_exit(const report::Row& row) {
    if (row.oracle && row.oracle->status == Agreement::Fail) {
        return kOracleDisagreement;
    }
    switch (row.verdict.outcome) {
    case Outcome::Terminating: return kTerminating;
    case Outcome::NonTerminating: return kNonTerminating;
    case Outcome::Unsupported: return kUnsupported;
    }
    return kUnsupported;
}

int cmd_analyze(const std::string& file, const CheckFlags& flags, std::ostream& out, std::ostream& err) {
    LoopProgram p;
    try {
        p = parse(read_file(file));
    } catch (const std::exception& e) {
        err << file << ": " << e.what() << "\n";
        return kInputError;
    }
    const report::Row row = analyze_program(file, p, flags);
    if (flags.format == "json") {
        out << report::row_json(row).dump(2) << "\n";
    } else {
        out << report::headline(row.verdict) << "\n";
        out << report::witness_text(row.verdict.witness);
        char buf[64];
        std::snprintf(buf, sizeof buf, "time: %.3f ms\n", row.decision_ms);
        out << buf;
        if (row.oracle) {
            out << "oracle: " << to_string(row.oracle->status) << " (" << row.oracle->details << ")\n";
        }
    }
    return verdict_exit(row);
}

int cmd_bench(const std::string& dir, const CheckFlags& flags, std::ostream& out, std::ostream& err) {
    if (!fs::is_directory(dir)) {
        err << dir << ": not a directory\n";
        return kInputError;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".loop") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<report::Row> rows;
    std::vector<std::pair<std::string, std::string>> errors;
    for (const auto& path : files) {
        const std::string name = path.filename().string();
        LoopProgram p;
        try {
            p = parse(read_file(path));
        } catch (const std::exception& e) {
            errors.emplace_back(name, e.what());
            continue;
        }
        rows.push_back(analyze_program(name, p, flags));
    }

    if (flags.format == "json") {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : rows) {
            a.push_back(report::row_json(r));
        }
        for (const auto& [file, msg] : errors) {
            a.push_back({{"file", file}, {"error", msg}});
        }
        out << a.dump(2) << "\n";
    } else {
        out << report::bench_table(rows, errors);
    }
    const report::Summary s = report::summarize(rows, errors.size());
    return s.oracle_failures > 0 ? kOracleDisagreement : 0;
}

struct GenFlags {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string shape = "mix";
    std::int64_t bound = 20;
    bool cover_rows = false;
    std::string outdir;
};

int cmd_gen(const GenFlags& g, std::ostream& out, std::ostream& err) {
    gen::CorpusOptions opts;
    opts.seed = g.seed;
    opts.count = g.count;
    opts.shape = *gen::parse_shape(g.shape);
    opts.bound = g.bound;
    opts.cover_rows = g.cover_rows;
    std::error_code ec;
    fs::create_directories(g.outdir, ec);
    if (ec) {
        err << g.outdir << ": " << ec.message() << "\n";
        return kInputError;
    }
    const auto files = gen::generate_corpus(opts);
    for (const auto& f : files) {
        std::ofstream o(fs::path(g.outdir) / f.name, std::ios::binary);
        o << f.text;
        if (!o) {
            err << f.name << ": write failed\n";
            return kInputError;
        }
    }
    out << "wrote " << files.size() << " files to " << g.outdir << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Termination analysis for monotone integer loops", "monoterm"};
    app.require_subcommand(1);

    std::string file;
    CheckFlags analyze_flags;
    auto* analyze_cmd = app.add_subcommand("analyze", "Decide one loop file");
    analyze_cmd->add_option("file", file, "Loop file")->required();
    add_check_flags(analyze_cmd, analyze_flags);

    std::string dir;
    CheckFlags bench_flags;
    auto* bench_cmd = app.add_subcommand("bench", "Decide every .loop file of a directory");
    bench_cmd->add_option("dir", dir, "Corpus directory")->required();
    add_check_flags(bench_cmd, bench_flags);

    GenFlags g;
    auto* gen_cmd = app.add_subcommand("gen", "Write a random loop corpus");
    gen_cmd->add_option("--seed", g.seed, "Random seed");
    gen_cmd->add_option("--count", g.count, "Number of files")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--shape", g.shape, "Loop shapes")
        ->check(CLI::IsMember({"single", "diagonal", "multipath", "mix"}));
    gen_cmd->add_option("--bound", g.bound, "Largest constant magnitude")->check(CLI::PositiveNumber);
    gen_cmd->add_flag("--cover-rows", g.cover_rows, "Include one loop per rule-table case first");
    gen_cmd->add_option("outdir", g.outdir, "Output directory")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInputError;
    }
    if (analyze_cmd->parsed()) {
        return cmd_analyze(file, analyze_flags, out, err);
    }
    if (bench_cmd->parsed()) {
        return cmd_bench(dir, bench_flags, out, err);
    }
    return cmd_gen(g, out, err);
}

} // namespace monoterm::cli
