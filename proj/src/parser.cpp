// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace monoterm {

SyntaxError::SyntaxError(std::size_t line, std::size_t col, std::string expected, std::string found)
    : ParseError("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": expected " + expected +
                 ", found " + found),
      line_(line), col_(col), expected_(std::move(expected)) {}

MissingInit::MissingInit(std::string var)
    : ParseError("variable '" + var + "' has no initial value"), var_(std::move(var)) {}

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number '" + t.text + "'";
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Sym: return "'" + t.text + "'";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        const std::size_t l = line;
        const std::size_t cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            out.push_back({Tok::Number, std::string(text.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        static constexpr std::string_view two_char[] = {":=", "<=", ">=", "&&"};
        bool matched = false;
        for (auto sym : two_char) {
            if (text.substr(i, 2) == sym) {
                out.push_back({Tok::Sym, std::string(sym), l, cl});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched) {
            continue;
        }
        if (std::string_view("(){};=+-*<>").find(c) != std::string_view::npos) {
            out.push_back({Tok::Sym, std::string(1, c), l, cl});
            advance(1);
            continue;
        }
        throw SyntaxError(l, cl, "a token", "character '" + std::string(1, c) + "'");
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

struct Stmt {
    VarName target;
    Update update;
    Token at;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    LoopProgram program() {
        Env init;
        while (is_ident("init")) {
            const Token kw = next();
            const Token name = expect_ident();
            expect("=");
            IntVal value = integer();
            expect(";");
            if (!init.emplace(name.text, std::move(value)).second) {
                throw ShapeError("duplicate initial value for '" + name.text + "' at line " +
                                 std::to_string(kw.line));
            }
        }
        LoopProgram p{loop(), std::move(init)};
        if (peek().kind != Tok::End) {
            throw SyntaxError(peek().line, peek().col, "end of input", describe(peek()));
        }
        for (const auto& v : loop_variables(p.shape)) {
            if (!p.init.contains(v)) {
                throw MissingInit(v);
            }
        }
        for (const auto& [name, value] : p.init) {
            const auto vars = loop_variables(p.shape);
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
                throw ShapeError("initial value for '" + name + "', which the loop does not use");
            }
        }
        return p;
    }

  private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token next() {
        Token t = peek();
        if (pos_ < toks_.size() - 1) {
            ++pos_;
        }
        return t;
    }
    bool is_sym(std::string_view s, std::size_t k = 0) const {
        return peek(k).kind == Tok::Sym && peek(k).text == s;
    }
    bool is_ident(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

    [[noreturn]] void fail(std::string expected) const {
        throw SyntaxError(peek().line, peek().col, std::move(expected), describe(peek()));
    }

    void expect(std::string_view s) {
        if (!is_sym(s)) {
            fail("'" + std::string(s) + "'");
        }
        next();
    }
    void expect_keyword(std::string_view kw) {
        if (!is_ident(kw)) {
            fail("'" + std::string(kw) + "'");
        }
        next();
    }
    Token expect_ident() {
        static constexpr std::string_view keywords[] = {"init", "while", "if", "else"};
        if (peek().kind != Tok::Ident) {
            fail("identifier");
        }
        for (auto kw : keywords) {
            if (peek().text == kw) {
                fail("identifier");
            }
        }
        return next();
    }

    IntVal integer() {
        bool negative = false;
        if (is_sym("-")) {
            next();
            negative = true;
        }
        if (peek().kind != Tok::Number) {
            fail("integer");
        }
        IntVal v = parse_int(next().text);
        return negative ? IntVal(-v) : v;
    }

    std::optional<RelOp> relop() {
        static constexpr std::pair<std::string_view, RelOp> ops[] = {
            {"<", RelOp::Lt}, {"<=", RelOp::Le}, {">", RelOp::Gt}, {">=", RelOp::Ge}};
        for (const auto& [s, op] : ops) {
            if (is_sym(s)) {
                next();
                return op;
            }
        }
        return std::nullopt;
    }

    GuardAtom guard() {
        const Token first = expect_ident();
        std::optional<Token> second;
        if (is_sym("-")) {
            next();
            second = expect_ident();
        }
        auto op = relop();
        if (!op) {
            fail(second ? "relational operator" : "relational operator or '-'");
        }
        IntVal bound = integer();
        if (is_sym("&&")) {
            throw ShapeError("conjunctions of guard atoms are not supported (line " + std::to_string(peek().line) +
                             ")");
        }
        if (second) {
            if (second->text == first.text) {
                throw ShapeError("diagonal guard compares '" + first.text + "' with itself");
            }
            return Diagonal{first.text, second->text, *op, std::move(bound)};
        }
        return DiagonalFree{first.text, *op, std::move(bound)};
    }

    Stmt stmt() {
        const Token target = expect_ident();
        expect(":=");
        Update upd;
        if (peek().kind == Tok::Ident) {
            const Token var = expect_ident();
            require_same(target, var);
            upd.coeff = 1;
            upd.offset = signed_offset();
        } else {
            IntVal lead = integer();
            if (is_sym("*")) {
                next();
                const Token var = expect_ident();
                require_same(target, var);
                upd.coeff = std::move(lead);
                upd.offset = (is_sym("+") || is_sym("-")) ? signed_offset() : IntVal(0);
            } else {
                upd.coeff = 0;
                upd.offset = std::move(lead);
            }
        }
        expect(";");
        return {target.text, std::move(upd), target};
    }

    IntVal signed_offset() {
        if (is_sym("+")) {
            next();
            return integer();
        }
        if (is_sym("-")) {
            next();
            return -integer();
        }
        fail("'+' or '-'");
    }

    static void require_same(const Token& target, const Token& var) {
        if (target.text != var.text) {
            throw ShapeError("assignment to '" + target.text + "' reads '" + var.text + "' (line " +
                             std::to_string(var.line) + ")");
        }
    }

    LoopShape loop() {
        expect_keyword("while");
        expect("(");
        const GuardAtom g = guard();
        expect(")");
        expect("{");
        LoopShape shape = is_ident("if") ? conditional_body(g) : straight_body(g);
        expect("}");
        return shape;
    }

    LoopShape conditional_body(const GuardAtom& g) {
        const Token at = next();
        expect("(");
        const GuardAtom c = guard();
        expect(")");
        expect("{");
        Stmt then_s = stmt();
        expect("}");
        expect_keyword("else");
        expect("{");
        Stmt else_s = stmt();
        expect("}");
        const auto* guard_df = std::get_if<DiagonalFree>(&g);
        const auto* cond_df = std::get_if<DiagonalFree>(&c);
        if (!guard_df || !cond_df) {
            throw ShapeError("conditional loops require diagonal-free guard and condition (line " +
                             std::to_string(at.line) + ")");
        }
        if (cond_df->var != guard_df->var || then_s.target != guard_df->var || else_s.target != guard_df->var) {
            throw ShapeError("conditional loops must test and assign the guard variable only (line " +
                             std::to_string(at.line) + ")");
        }
        return MultiPathDF{*guard_df, *cond_df, std::move(then_s.update), std::move(else_s.update)};
    }

    LoopShape straight_body(const GuardAtom& g) {
        std::vector<Stmt> stmts;
        while (!is_sym("}") && peek().kind != Tok::End) {
            stmts.push_back(stmt());
        }
        if (stmts.empty()) {
            fail("statement");
        }
        if (stmts.size() > 2) {
            throw ShapeError("loop body has " + std::to_string(stmts.size()) +
                             " statements; at most two are supported (line " + std::to_string(stmts[2].at.line) +
                             ")");
        }
        if (const auto* df = std::get_if<DiagonalFree>(&g)) {
            if (stmts.size() != 1) {
                throw ShapeError("a diagonal-free guard admits exactly one statement");
            }
            if (stmts[0].target != df->var) {
                throw ShapeError("statement assigns '" + stmts[0].target + "' but the guard tests '" + df->var + "'");
            }
            return SinglePathDF{*df, std::move(stmts[0].update)};
        }
        const auto& dg = std::get<Diagonal>(g);
        if (stmts.size() != 2) {
            throw ShapeError("a diagonal guard requires one statement per variable");
        }
        const Stmt* lhs = nullptr;
        const Stmt* rhs = nullptr;
        for (const auto& s : stmts) {
            if (s.target == dg.lhs && !lhs) {
                lhs = &s;
            } else if (s.target == dg.rhs && !rhs) {
                rhs = &s;
            }
        }
        if (!lhs || !rhs) {
            throw ShapeError("a diagonal guard requires exactly one assignment to each of '" + dg.lhs + "' and '" +
                             dg.rhs + "'");
        }
        return SinglePathDiag{dg, lhs->update, rhs->update};
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

LoopProgram parse(std::string_view text) { return Parser(tokenize(text)).program(); }

std::string print_update(const VarName& var, const Update& upd) {
    const auto offset_suffix = [&] {
        return upd.offset < 0 ? " - " + to_string(IntVal(-upd.offset)) : " + " + to_string(upd.offset);
    };
    if (upd.coeff == 0) {
        return to_string(upd.offset);
    }
    if (upd.coeff == 1) {
        return var + offset_suffix();
    }
    std::string s = to_string(upd.coeff) + " * " + var;
    if (upd.offset != 0) {
        s += offset_suffix();
    }
    return s;
}

std::string print_guard(const GuardAtom& atom) {
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            std::string lhs;
            if constexpr (std::is_same_v<T, DiagonalFree>) {
                lhs = a.var;
            } else {
                lhs = a.lhs + " - " + a.rhs;
            }
            return lhs + " " + std::string(symbol(a.op)) + " " + to_string(a.bound);
        },
        atom);
}

std::string print(const LoopProgram& p) {
    std::ostringstream out;
    for (const auto& [name, value] : p.init) {
        out << "init " << name << " = " << to_string(value) << ";\n";
    }
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            out << "while (" << print_guard(s.guard) << ") {\n";
            if constexpr (std::is_same_v<T, SinglePathDF>) {
                out << "    " << s.guard.var << " := " << print_update(s.guard.var, s.update) << ";\n";
            } else if constexpr (std::is_same_v<T, SinglePathDiag>) {
                out << "    " << s.guard.lhs << " := " << print_update(s.guard.lhs, s.update_lhs) << ";\n";
                out << "    " << s.guard.rhs << " := " << print_update(s.guard.rhs, s.update_rhs) << ";\n";
            } else {
                const auto& x = s.guard.var;
                out << "    if (" << print_guard(s.cond) << ") {\n";
                out << "        " << x << " := " << print_update(x, s.then_update) << ";\n";
                out << "    } else {\n";
                out << "        " << x << " := " << print_update(x, s.else_update) << ";\n";
                out << "    }\n";
            }
            out << "}\n";
        },
        p.shape);
    return out.str();
}

} // namespace monoterm
