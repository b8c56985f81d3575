// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/integer.hpp"

#include <stdexcept>

namespace monoterm {

IntVal floor_mod(const IntVal& a, const IntVal& m) {
    if (m <= 0) {
        throw std::invalid_argument("floor_mod: modulus must be positive");
    }
    IntVal r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

int sign(const IntVal& a) { return a.sign(); }

std::size_t bit_length(const IntVal& a) {
    if (a == 0) {
        return 0;
    }
    return boost::multiprecision::msb(boost::multiprecision::abs(a)) + 1;
}

std::string to_string(const IntVal& a) { return a.str(); }

IntVal parse_int(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && text[0] == '-') {
        i = 1;
    }
    if (i == text.size()) {
        throw std::invalid_argument("empty integer literal");
    }
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') {
            throw std::invalid_argument("invalid integer literal: " + std::string(text));
        }
    }
    return IntVal(std::string(text));
}

} // namespace monoterm
