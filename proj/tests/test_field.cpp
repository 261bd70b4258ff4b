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

#include <doctest.h>

#include "addix/error.hpp"
#include "addix/field.hpp"
#include "oracle.hpp"

using namespace addix;

namespace {

// Monic polynomials over F_p as coefficient vectors, constant first.
std::vector<std::uint32_t> monic_from_code(std::uint64_t code, unsigned n, std::uint32_t p) {
    std::vector<std::uint32_t> m(n + 1);
    for (unsigned i = 0; i < n; ++i) {
        m[i] = code % p;
        code /= p;
    }
    m[n] = 1;
    return m;
}

bool divisible(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t k = a.size(); k-- > db;) {
        const std::uint32_t c = a[k];
        if (!c) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] = (a[k - db + i] + (p - c) * b[i]) % p;
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i]) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..n/2.
bool irreducible_by_trial(const std::vector<std::uint32_t>& m, std::uint32_t p) {
    const unsigned n = static_cast<unsigned>(m.size() - 1);
    for (unsigned d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c)
            if (divisible(m, monic_from_code(c, d, p), p)) return false;
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned n) {
    for (std::uint64_t c = 0;; ++c) {
        auto m = monic_from_code(c, n, p);
        if (irreducible_by_trial(m, p)) return m;
    }
}

const char* kSpecs[] = {"2", "3", "5", "2^2", "2^3", "3^2", "2^4", "5^2", "3^3", "2^5", "2^6", "7^2"};

}  // namespace

TEST_CASE("default modulus is the smallest-code irreducible") {
    for (const char* s : kSpecs) {
        auto F = Field::parse(s);
        CAPTURE(s);
        if (F->degree() == 1) {
            CHECK(F->modulus() == std::vector<std::uint32_t>{0, 1});
        } else {
            CHECK(F->modulus() == smallest_irreducible(F->characteristic(), F->degree()));
        }
    }
}

TEST_CASE("named moduli") {
    CHECK(Field::parse("2^3")->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(Field::parse("3^2")->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(Field::parse("2^4")->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(Field::parse("5^2")->modulus() == std::vector<std::uint32_t>{2, 0, 1});
    CHECK(Field::parse("3^3")->modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});
    CHECK(Field::parse("2^6")->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1});
}

TEST_CASE("arithmetic agrees with schoolbook reduction") {
    for (const char* s : kSpecs) {
        auto F = Field::parse(s);
        CAPTURE(s);
        for (std::uint32_t a = 0; a < F->order(); ++a) {
            for (std::uint32_t b = 0; b < F->order(); ++b) {
                const Elt x{a}, y{b};
                REQUIRE(F->add(x, y) == oracle::add(*F, x, y));
                REQUIRE(F->sub(x, y) == oracle::sub(*F, x, y));
                REQUIRE(F->mul(x, y) == oracle::mul(*F, x, y));
            }
        }
    }
}

TEST_CASE("inverses, division and powers") {
    for (const char* s : kSpecs) {
        auto F = Field::parse(s);
        for (Elt a : F->elements()) {
            if (!a.code) continue;
            CHECK(F->mul(a, F->inv(a)) == F->one());
            CHECK(F->div(F->one(), a) == F->inv(a));
            CHECK(F->pow(a, F->order() - 1) == F->one());
            CHECK(F->pow(a, 5) == oracle::pow(*F, a, 5));
        }
        CHECK_THROWS_AS(F->inv(F->zero()), PreconditionError);
        CHECK(F->pow(F->zero(), 0) == F->one());
    }
}

TEST_CASE("primitive element is the smallest code of full order") {
    for (const char* s : kSpecs) {
        auto F = Field::parse(s);
        std::uint32_t expected = 0;
        for (std::uint32_t c = 1; c < F->order() && !expected; ++c) {
            Elt y{1};
            std::uint64_t ord = 0;
            do {
                y = oracle::mul(*F, y, Elt{c});
                ++ord;
            } while (y.code != 1);
            if (ord == F->order() - 1) expected = c;
        }
        CHECK(F->primitive().code == expected);
        CHECK(F->multiplicative_order(F->primitive()) == F->order() - 1);
    }
    CHECK(Field::parse("3^2")->primitive().code == 4);
}

TEST_CASE("discrete logarithm table") {
    auto F = Field::parse("2^6");
    for (Elt a : F->elements()) {
        if (!a.code) continue;
        CHECK(F->exp(F->log(a)) == a);
        CHECK(oracle::pow(*F, F->primitive(), F->log(a)) == a);
    }
    CHECK_THROWS_AS(F->log(F->zero()), PreconditionError);
}

TEST_CASE("frobenius is additive and fixes the prime field") {
    auto F = Field::parse("3^3");
    for (Elt a : F->elements()) {
        for (Elt b : F->elements()) CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
        CHECK((F->frobenius(a) == a) == F->in_prime_field(a));
    }
}

TEST_CASE("spec parsing and validation") {
    auto F = Field::parse("2^3/1,0,1,1");
    CHECK(F->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
    CHECK(*Field::parse(F->spec()) == *F);
    CHECK(*Field::parse("7") == *Field::parse("7^1"));
    CHECK_THROWS_AS(Field::parse("9"), PreconditionError);
    CHECK_THROWS_AS(Field::parse("2^2/1,0,1"), PreconditionError);
    CHECK_THROWS_AS(Field::parse("2^2/1,1,0"), PreconditionError);
    CHECK_THROWS_AS(Field::parse("4^2"), PreconditionError);
    CHECK_THROWS_AS(Field::parse("2^21"), PreconditionError);
    CHECK_THROWS_AS(Field::parse("2^5", 16), PreconditionError);
    CHECK_THROWS_AS(Field::parse("2^"), ParseError);
    CHECK_THROWS_AS(Field::parse("x"), ParseError);
    CHECK_THROWS_AS(Field::parse("2^3/1,1"), PreconditionError);
    CHECK_THROWS_AS(Field::parse("2^3")->element(8), PreconditionError);
    CHECK(Field::parse("2^20")->order() == (1u << 20));
}

TEST_CASE("digits round trip and prime-field embedding") {
    auto F = Field::parse("5^2");
    for (Elt a : F->elements()) CHECK(F->from_digits(F->digits(a)) == a);
    CHECK(F->from_int(-1) == Elt{4});
    CHECK(F->from_int(7) == Elt{2});
    CHECK(F->scale(Elt{7}, 3) == oracle::mul(*F, Elt{7}, Elt{3}));
}

TEST_CASE("number theory helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_factors(63) == std::vector<std::uint64_t>{3, 7});
    CHECK(ipow(3, 4) == 81);
}
