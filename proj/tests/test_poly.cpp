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

#include <random>

#include "addix/error.hpp"
#include "addix/poly.hpp"
#include "oracle.hpp"

using namespace addix;

namespace {

Poly rand_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
    std::vector<Elt> c(deg + 1);
    for (auto& x : c) x = Elt{static_cast<std::uint32_t>(rng() % F->order())};
    return Poly(F, c);
}

}  // namespace

TEST_CASE("construction trims and reports degree") {
    auto F = Field::parse("3^2");
    CHECK(Poly(F).degree() == -1);
    CHECK(Poly(F, {Elt{1}, Elt{0}, Elt{0}}).degree() == 0);
    CHECK(Poly::field_poly(F).degree() == 9);
    CHECK(Poly::field_poly(F).coeff(1) == F->from_int(-1));
    CHECK_THROWS_AS(Poly(F, {Elt{9}}), PreconditionError);
}

TEST_CASE("evaluation matches the oracle") {
    auto F = Field::parse("2^4");
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto P = rand_poly(F, 1 + t % 20, rng);
        CHECK(std::vector<Elt>(oracle::table(P)) == [&] {
            std::vector<Elt> v;
            for (Elt y : F->elements()) v.push_back(P(y));
            return v;
        }());
    }
}

TEST_CASE("ring operations as maps") {
    for (const char* s : {"2^3", "3^2", "5^2"}) {
        auto F = Field::parse(s);
        std::mt19937_64 rng(11);
        for (int t = 0; t < 30; ++t) {
            auto a = rand_poly(F, 1 + t % 6, rng), b = rand_poly(F, 1 + t % 4, rng);
            for (Elt y : F->elements()) {
                CHECK((a + b)(y) == oracle::add(*F, oracle::eval(a, y), oracle::eval(b, y)));
                CHECK((a - b)(y) == oracle::sub(*F, oracle::eval(a, y), oracle::eval(b, y)));
                CHECK((a * b)(y) == oracle::mul(*F, oracle::eval(a, y), oracle::eval(b, y)));
                CHECK(compose(a, b)(y) == oracle::eval(a, oracle::eval(b, y)));
            }
        }
    }
}

TEST_CASE("division with remainder") {
    auto F = Field::parse("3^3");
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto a = rand_poly(F, 10, rng), b = rand_poly(F, 1 + t % 7, rng);
        if (b.is_zero()) continue;
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(divrem(Poly::x(F), Poly(F)), PreconditionError);
}

TEST_CASE("gcd is monic and divides both") {
    auto F = Field::parse("5^2");
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        auto c = rand_poly(F, 3, rng);
        auto a = rand_poly(F, 4, rng) * c, b = rand_poly(F, 5, rng) * c;
        auto g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) continue;
        CHECK(g.is_monic());
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        if (!c.is_zero()) CHECK((g % c.monic()).is_zero());
    }
    CHECK(gcd(Poly(F), Poly(F)).is_zero());
}

TEST_CASE("gcd with the field polynomial is the product over roots") {
    for (const char* s : {"2^4", "3^2", "3^3"}) {
        auto F = Field::parse(s);
        std::mt19937_64 rng(13);
        for (int t = 0; t < 30; ++t) {
            auto a = rand_poly(F, 1 + t % 12, rng);
            if (a.is_zero()) continue;
            Poly expected = Poly::constant(F, F->one());
            for (Elt y : F->elements())
                if (oracle::eval(a, y).code == 0) expected *= Poly(F, {F->neg(y), F->one()});
            CHECK(gcd_with_field_poly(a) == expected);
            CHECK(divides_field_poly(expected));
        }
        CHECK(gcd_with_field_poly(Poly(F)) == Poly::field_poly(F));
    }
}

TEST_CASE("reduction modulo x^q - x preserves the map") {
    auto F = Field::parse("3^2");
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        auto a = rand_poly(F, 40, rng);
        auto r = reduce_mod_field_poly(a);
        CHECK(r.degree() < 9);
        CHECK(r == a % Poly::field_poly(F));
        CHECK(oracle::table(r) == oracle::table(a));
    }
}

TEST_CASE("binomials mod p") {
    const BinomialModP C(3);
    std::vector<std::vector<unsigned>> pascal(30, std::vector<unsigned>(30, 0));
    for (int n = 0; n < 30; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k) pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % 3;
        for (int k = 0; k <= n; ++k) CHECK(C(n, k) == pascal[n][k]);
    }
    CHECK(C(2, 5) == 0);
}

TEST_CASE("shift expansion reproduces P0(x + y) - P0(x) - P0(y)") {
    auto F = Field::parse("2^3");
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
        auto P = rand_poly(F, 2 + t % 9, rng);
        if (P.degree() < 2) continue;
        const auto Fi = shift_expand(P);
        REQUIRE(Fi.size() == static_cast<std::size_t>(P.degree() - 1));
        const Poly P0 = P - Poly::constant(F, P.coeff(0));
        for (Elt y : F->elements()) {
            std::vector<Elt> c(P.degree(), Elt{0});
            for (std::size_t i = 0; i < Fi.size(); ++i) c[i + 1] = Fi[i](y);
            const Poly lhs = compose(P0, Poly(F, {y, F->one()})) - P0 - Poly::constant(F, P0(y));
            CHECK(lhs == Poly(F, c));
        }
    }
}

TEST_CASE("lagrange interpolation") {
    auto F = Field::parse("2^4");
    std::mt19937_64 rng(23);
    std::vector<std::pair<Elt, Elt>> pts;
    for (std::uint32_t x = 0; x < 16; x += 3) pts.emplace_back(Elt{x}, Elt{static_cast<std::uint32_t>(rng() % 16)});
    auto P = lagrange_interpolate(F, pts);
    CHECK(P.degree() < static_cast<int>(pts.size()));
    for (auto [x, y] : pts) CHECK(oracle::eval(P, x) == y);
    pts.push_back(pts.front());
    CHECK_THROWS_AS(lagrange_interpolate(F, pts), PreconditionError);
}

TEST_CASE("parser and printer") {
    auto F = Field::parse("3^2");
    CHECK(to_string(parse_poly(F, "(x^3-x)^2+x")) == "x^6+x^4+x^2+x");
    CHECK(parse_poly(F, "2x + 1") == Poly(F, {Elt{1}, Elt{2}}));
    CHECK(parse_poly(F, "[5]*x^2") == Poly::monomial(F, Elt{5}, 2));
    CHECK(parse_poly(F, "g") == Poly::constant(F, F->primitive()));
    CHECK(parse_poly(F, "x(x+1)") == parse_poly(F, "x^2+x"));
    CHECK(parse_poly(F, "-x") == Poly(F, {Elt{0}, Elt{2}}));
    CHECK(to_string(Poly(F)) == "0");
    CHECK_THROWS_AS(parse_poly(F, "x^"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "y"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "(x+1"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "[9]"), ParseError);

    std::mt19937_64 rng(29);
    for (const char* s : {"2^4", "3^3", "5^2", "7"}) {
        auto G = Field::parse(s);
        for (int t = 0; t < 30; ++t) {
            auto P = rand_poly(G, t % 9, rng);
            CHECK(parse_poly(G, to_string(P)) == P);
        }
    }
}

TEST_CASE("operands over different fields are rejected") {
    auto A = Field::parse("2^3");
    auto B = Field::parse("2^3/1,0,1,1");
    CHECK_THROWS_AS(Poly::x(A) + Poly::x(B), PreconditionError);
    CHECK_THROWS_AS(gcd(Poly::x(A), Poly::x(B)), PreconditionError);
}
