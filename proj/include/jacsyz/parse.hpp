/*
   Copyright 2026 The jacsyz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "jacsyz/polynomial.hpp"

namespace jacsyz {

/// Syntax error with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*        juxtaposition multiplies
//   factor := atom ['^' nat]
//   atom   := nat ['/' nat] | 'x' | 'y' | 'z' | '(' expr ')'
// '^' binds tightest and its exponent must be a plain natural number.
class PolyParser {
public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    Poly parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty input", 0);
        Poly p = expr();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected character", pos_);
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool starts_atom() {
        skip_ws();
        if (at_end()) return false;
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' ||
               c == '(';
    }

    Poly expr() {
        bool neg = false;
        skip_ws();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++pos_;
        }
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) break;
            const bool minus = peek() == '-';
            ++pos_;
            Poly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (!starts_atom()) throw ParseError("expected factor after '*'", pos_);
                acc = acc * factor();
            } else if (starts_atom()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("exponent must be a non-negative integer", pos_);
            base = base.pow(static_cast<unsigned>(natural()));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const long num = natural();
            skip_ws();
            if (!at_end() && peek() == '/') {
                const std::size_t slash = pos_;
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected integer denominator", pos_);
                const long den = natural();
                if (den == 0) throw ParseError("zero denominator", slash + 1);
                return Poly::constant(make_rat(num, den));
            }
            return Poly::constant(make_rat(num));
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            return Poly::variable(c == 'x' ? Var::x : (c == 'y' ? Var::y : Var::z));
        }
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        throw ParseError("unexpected character", pos_);
    }

    long natural() {
        const std::size_t start = pos_;
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 100000000) throw ParseError("integer literal too large", start);
            ++pos_;
        }
        return value;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the expression grammar into expanded canonical form.
inline Poly parse_poly(const std::string& text) { return detail::PolyParser(text).parse(); }

}  // namespace jacsyz
