// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoterm {

/// Exact signed integer used for every loop value, constant and coefficient.
using IntVal = boost::multiprecision::cpp_int;

/// Remainder of a / m in [0, m). Requires m > 0.
IntVal floor_mod(const IntVal& a, const IntVal& m);

int sign(const IntVal& a);

/// Number of significant bits of |a|; 0 for a == 0.
std::size_t bit_length(const IntVal& a);

std::string to_string(const IntVal& a);

/// Decimal literal with optional leading '-'. Throws std::invalid_argument.
IntVal parse_int(std::string_view text);

} // namespace monoterm
