/*
   Copyright 2026 The sepinv Authors

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

#ifndef SEPINV_PARSER_HPP
#define SEPINV_PARSER_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace sepinv {

namespace detail {

// expr    := term (('+' | '-') term)*
// term    := unary ('*' unary)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' integer)?
// primary := integer | identifier | '(' expr ')'
class PolynomialParser {
   public:
    PolynomialParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        skip_space();
        if (pos_ >= text_.size()) error("empty expression");
        Polynomial r = expr();
        skip_space();
        if (pos_ < text_.size()) error(std::string("unexpected '") + text_[pos_] + "'");
        return r;
    }

   private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial r = term();
        for (;;) {
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else return r;
        }
    }

    Polynomial term() {
        Polynomial r = unary();
        while (accept('*')) r *= unary();
        skip_space();
        if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' ||
                                    text_[pos_] == '_'))
            error("juxtaposition is not multiplication; use '*'");
        return r;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                error("exponent must be a nonnegative integer");
            unsigned long long k = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                k = k * 10 + static_cast<unsigned>(text_[pos_++] - '0');
                if (k > 0xFFFF) error("exponent too large");
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '^') error("chained exponents need parentheses");
            return base.pow(static_cast<unsigned>(k));
        }
        return base;
    }

    Polynomial primary() {
        skip_space();
        if (pos_ >= text_.size()) error("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial r = expr();
            if (!accept(')')) error("expected ')'");
            return r;
        }
        const Field& F = ring_->field();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = (v * 10 + (text_[pos_++] - '0')) % static_cast<long long>(F.characteristic());
            }
            return Polynomial::constant(ring_, F.from_int(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (auto idx = ring_->index_of(name)) return Polynomial::variable(ring_, *idx);
            if (!F.is_prime_field() && name == ring_->generator_symbol())
                return Polynomial::constant(ring_, F.generator());
            fail(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
        }
        error(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses integer literals, variable names, + - * ^ and parentheses.
/// Integers are reduced into the field; for F_{p^e} the ring's generator
/// symbol denotes the adjoined root of the modulus.
inline Polynomial parse(std::string_view text, const Ring& ring) { return detail::PolynomialParser(text, ring).parse(); }

inline std::string render(const Polynomial& f) { return f.to_string(); }

}  // namespace sepinv

#endif
