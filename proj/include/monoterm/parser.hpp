// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "monoterm/loop_model.hpp"

namespace monoterm {

/// Base class of everything parse() throws.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input. Line and column are 1-based and point into the text.
class SyntaxError : public ParseError {
  public:
    SyntaxError(std::size_t line, std::size_t col, std::string expected, std::string found);

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }
    const std::string& expected() const { return expected_; }

  private:
    std::size_t line_;
    std::size_t col_;
    std::string expected_;
};

/// Well-formed text describing a loop outside the three supported shapes.
class ShapeError : public ParseError {
  public:
    using ParseError::ParseError;
};

class MissingInit : public ParseError {
  public:
    explicit MissingInit(std::string var);
    const std::string& var() const { return var_; }

  private:
    std::string var_;
};

/*
 * Loop-file grammar:
 *
 *   program = { init } loop
 *   init    = "init" ident "=" int ";"
 *   loop    = "while" "(" guard ")" "{" body "}"
 *   guard   = ident relop int | ident "-" ident relop int
 *   body    = stmt [ stmt ]
 *           | "if" "(" guard ")" "{" stmt "}" "else" "{" stmt "}"
 *   stmt    = ident ":=" expr ";"
 *   expr    = int | int "*" ident | ident ("+"|"-") int
 *           | int "*" ident ("+"|"-") int
 *
 * '#' starts a comment that runs to the end of the line.
 */
LoopProgram parse(std::string_view text);

/// Canonical rendering; parse(print(p)) == p.
std::string print(const LoopProgram& p);

/// Right-hand side of `var := ...` for a canonical update.
std::string print_update(const VarName& var, const Update& upd);

std::string print_guard(const GuardAtom& atom);

} // namespace monoterm
