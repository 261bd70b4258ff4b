/*
   Copyright 2026 The addix Authors

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

#include <cctype>
#include <sstream>

#include "addix/error.hpp"
#include "addix/poly.hpp"

namespace addix {

namespace {

constexpr std::uint64_t kMaxParsedDegree = std::uint64_t{1} << 22;

class Parser {
   public:
    Parser(const FieldPtr& field, std::string_view text) : field_(field), text_(text) {}

    Poly run() {
        Poly r = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::uint64_t integer() {
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
            if (v > (std::uint64_t{1} << 40)) fail("integer too large");
        }
        return v;
    }

    Poly expr() {
        Poly r = term();
        while (true) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                r += term();
            } else if (c == '-') {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    static bool starts_factor(char c) {
        return c == '(' || c == '[' || c == 'x' || c == 'g' || std::isdigit(static_cast<unsigned char>(c));
    }

    Poly term() {
        Poly r = unary();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                r *= unary();
            } else if (starts_factor(c)) {
                r *= unary();
            } else {
                return r;
            }
        }
    }

    Poly unary() {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (peek() != '^') return base;
        ++pos_;
        const std::uint64_t e = integer();
        if (base.degree() > 0 && e > kMaxParsedDegree / static_cast<std::uint64_t>(base.degree())) {
            fail("resulting degree too large");
        }
        if (base.degree() == 1 && base.coeff(0).code == 0) {
            return Poly::monomial(field_, field_->pow(base.coeff(1), e), e);
        }
        if (base.is_constant()) return Poly::constant(field_, field_->pow(base.coeff(0), e));
        return pow(base, e);
    }

    Poly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '[') {
            ++pos_;
            const std::uint64_t code = integer();
            if (peek() != ']') fail("expected ']'");
            ++pos_;
            if (code >= field_->order()) fail("element code " + std::to_string(code) + " out of range");
            return Poly::constant(field_, Elt{static_cast<std::uint32_t>(code)});
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x(field_);
        }
        if (c == 'g') {
            ++pos_;
            return Poly::constant(field_, field_->primitive());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Poly::constant(field_, field_->from_int(static_cast<std::int64_t>(integer() % field_->characteristic())));
        }
        fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
    }

    const FieldPtr& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) { return Parser(field, text).run(); }

std::string elt_to_string(const Field& F, Elt a) {
    const std::uint32_t p = F.characteristic();
    if (!F.in_prime_field(a)) return "[" + std::to_string(a.code) + "]";
    if (p > 2 && a.code > p / 2) return "-" + std::to_string(p - a.code);
    return std::to_string(a.code);
}

std::string to_string(const Poly& P) {
    if (P.is_zero()) return "0";
    const auto& F = P.F();
    std::ostringstream os;
    bool first = true;
    for (int i = P.degree(); i >= 0; --i) {
        const Elt c = P.coeff(i);
        if (!c.code) continue;
        std::string coef = elt_to_string(F, c);
        std::string term;
        if (i == 0) {
            term = coef;
        } else {
            const std::string mono = i == 1 ? "x" : "x^" + std::to_string(i);
            if (coef == "1") {
                term = mono;
            } else if (coef == "-1") {
                term = "-" + mono;
            } else {
                term = coef + "*" + mono;
            }
        }
        if (!first && term.front() != '-') os << '+';
        os << term;
        first = false;
    }
    return os.str();
}

}  // namespace addix
