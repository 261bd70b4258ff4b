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

#include <set>

#include "addix/analysis.hpp"
#include "addix/error.hpp"
#include "addix/sampling.hpp"
#include "oracle.hpp"

using namespace addix;

namespace {

std::vector<Poly> mixed_sample(const FieldPtr& F, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Poly> out;
    const unsigned n = F->degree();
    for (int t = 0; t < count; ++t) {
        switch (t % 3) {
            case 0: out.push_back(random_poly(F, 1 + t % 12, rng)); break;
            case 1: out.push_back(random_decomposable(F, t % (n + 1), 1 + t % 4, rng).P); break;
            default: out.push_back(random_decomposable_pp(F, t % (n + 1), rng).P); break;
        }
    }
    return out;
}

bool usable(const Poly& P) { return reduce_mod_field_poly(P).degree() >= 1; }

// f interpolated on L(F_q) with values in ker L, so that L(f(L(y))) = 0.
Poly kernel_valued(const LinearizedPoly& L, Rng& rng, bool avoid_zero) {
    const auto& F = L.field();
    const auto K = kernel(L).elements();
    std::vector<std::pair<Elt, Elt>> pts;
    for (Elt s : image(L).elements()) {
        std::size_t i = rng() % K.size();
        if (avoid_zero && K[i].code == 0) i = 1 + rng() % (K.size() - 1);
        pts.emplace_back(s, K[i]);
    }
    return lagrange_interpolate(F, pts);
}

CycleStructure oracle_cycles(const Poly& P) { return oracle::cycles(P); }

}  // namespace

TEST_CASE("value set of x^2 over F_9") {
    auto F = Field::parse("3^2");
    const Poly P = parse_poly(F, "x^2");
    CHECK(value_set_size(P, ValueSetMethod::Theorem).size == 5);
    CHECK(value_set_size(P, ValueSetMethod::Brute).size == 5);
    CHECK(oracle::value_set(P) == 5);
}

TEST_CASE("value set through the coset structure") {
    auto F = Field::parse("3^2");
    const Poly P = parse_poly(F, "(x^3-x)^2+x");
    const auto th = value_set_size(P, ValueSetMethod::Theorem);
    CHECK(th.size == oracle::value_set(P));
    CHECK(th.size == *th.cosets * 3);
    const auto id = value_set_size(Poly::x(F));
    CHECK(id.size == 9);
    CHECK(*id.cosets == 1);
}

TEST_CASE("value set methods agree with the oracle") {
    for (const char* s : {"2^3", "3^2", "2^4", "3^3", "5^2"}) {
        auto F = Field::parse(s);
        for (const auto& P : mixed_sample(F, 90, 71)) {
            if (!usable(P)) continue;
            const auto expected = oracle::value_set(P);
            CHECK(value_set_size(P, ValueSetMethod::Theorem).size == expected);
            CHECK(value_set_size(P, ValueSetMethod::Brute).size == expected);
            const auto th = value_set_pp_threshold(P);
            CHECK(th.implication_holds);
            CHECK(th.threshold == F->order() - ipow(F->characteristic(), F->degree() - th.index_k));
            if (th.gcd_LM_degree == 1 && !th.is_pp) CHECK(expected <= th.threshold);
        }
    }
}

TEST_CASE("comparison bounds in the threshold report") {
    auto F = Field::parse("2^4");
    const auto r = value_set_pp_threshold(parse_poly(F, "x^5+x^3"));
    CHECK(r.degree == 5);
    CHECK(r.multiplicative_index == 15);
    CHECK(r.wan_bound == doctest::Approx(16.0 - 15.0 / 5.0));
    CHECK(r.mww_bound == doctest::Approx(16.0 - 1.0));
}

TEST_CASE("permutation certificates") {
    auto F = Field::parse("3^2");
    CHECK(is_permutation(Poly::x(F)).is_pp);
    const auto sq = is_permutation(parse_poly(F, "x^2"), PPMethod::Brute);
    CHECK_FALSE(sq.is_pp);
    REQUIRE(sq.witness);
    CHECK(sq.witness->second == F->neg(sq.witness->first));
    const auto cert = is_permutation(parse_poly(F, "x^2"), PPMethod::Certificate);
    CHECK_FALSE(cert.is_pp);
    REQUIRE(cert.witness);
    CHECK(cert.witness->first != cert.witness->second);

    for (const char* s : {"2^3", "3^2", "2^4", "3^3"}) {
        auto G = Field::parse(s);
        for (const auto& P : mixed_sample(G, 90, 73)) {
            if (!usable(P)) continue;
            const bool expected = oracle::is_pp(P);
            for (auto m : {PPMethod::Certificate, PPMethod::Brute}) {
                const auto c = is_permutation(P, m);
                CHECK(c.is_pp == expected);
                CHECK(c.witness.has_value() == !expected);
                if (c.witness) {
                    CHECK(c.witness->first != c.witness->second);
                    CHECK(oracle::eval(P, c.witness->first) == oracle::eval(P, c.witness->second));
                }
            }
            const auto c = is_permutation(P);
            CHECK(c.is_pp == (c.gcd_LM_degree == 1 && c.quotient_bijection));
        }
    }
}

TEST_CASE("quotient criterion with L = x^4 + x over F_16") {
    auto F = Field::parse("2^4");
    const LinearizedPoly L(F, {F->one(), Elt{0}, F->one()});
    REQUIRE(is_subspace_poly(L));
    Rng rng(79);
    int pps = 0;
    for (int t = 0; t < 400; ++t) {
        const Poly f = random_poly(F, 1 + t % 5, rng);
        // M maps U into U, hence L divides L(M(x)).
        const Elt c = F->from_int(static_cast<std::int64_t>(rng() % 2));
        const LinearizedPoly M(F, (t % 2 ? std::vector<Elt>{F->one()}
                                         : std::vector<Elt>{F->add(c, Elt{0}), Elt{0}, F->one()}));
        const auto r = pp_criterion_quotient(f, L, M);
        const Poly P = compose(f, L.to_poly()) + M.to_poly();
        const bool expected = oracle::is_pp(P);
        CHECK(r.is_pp == expected);
        CHECK(r.brute_is_pp == expected);
        pps += expected;
        if (t % 2) CHECK(r.N == LinearizedPoly::identity(F));
    }
    CHECK(pps > 0);
    CHECK(pp_criterion_quotient(Poly(F), L, LinearizedPoly::identity(F)).is_pp);
}

TEST_CASE("quotient criterion rejects L not dividing L(M)") {
    auto F = Field::parse("2^2");
    const LinearizedPoly L(F, {F->one(), F->one()});
    const LinearizedPoly M(F, {F->primitive()});
    CHECK_THROWS_AS(pp_criterion_quotient(Poly::x(F), L, M), PreconditionError);
}

TEST_CASE("inverse of affine permutations") {
    auto F = Field::parse("5^2");
    CHECK(inverse_pp(Poly::x(F)).P0 == Poly::x(F));
    const Elt a{7}, b{11};
    const Poly P = Poly(F, {b, a});
    const Poly expected = Poly(F, {F->neg(F->mul(F->inv(a), b)), F->inv(a)});
    CHECK(inverse_pp(P).P0 == expected);
    CHECK_THROWS_AS(inverse_pp(parse_poly(F, "x^2")), PreconditionError);
}

TEST_CASE("inverse of f(L(x)) + x over F_8 with L = x^2 + x") {
    auto F = Field::parse("2^3");
    const LinearizedPoly L(F, {F->one(), F->one()});
    Rng rng(83);
    for (int t = 0; t < 20; ++t) {
        const Poly f = reduce_mod_field_poly(compose(complement(L).to_poly(), random_poly(F, 3, rng)));
        const Poly P = compose(f, L.to_poly()) + Poly::x(F);
        const auto inv = inverse_pp(P);
        for (Elt y : F->elements()) {
            CHECK(oracle::eval(inv.P0, oracle::eval(P, y)) == y);
            CHECK(oracle::eval(P, oracle::eval(inv.P0, y)) == y);
        }
    }
}

TEST_CASE("inverses of constructed permutations keep the additive index") {
    for (const char* s : {"2^4", "3^3", "5^2"}) {
        auto F = Field::parse(s);
        Rng rng(89);
        for (int t = 0; t < 30; ++t) {
            const auto sample = random_decomposable_pp(F, t % (F->degree() + 1), rng);
            REQUIRE(oracle::is_pp(sample.P));
            const auto inv = inverse_pp(sample.P);
            for (Elt y : F->elements()) CHECK(oracle::eval(inv.P0, oracle::eval(sample.P, y)) == y);
            CHECK(additive_index(inv.P0) == additive_index(sample.P));
        }
    }
}

TEST_CASE("cycle structures") {
    auto F5 = Field::parse("5");
    CHECK(cycle_structure(parse_poly(F5, "x+1")) == CycleStructure{{5, 1}});
    auto F = Field::parse("2^4");
    CHECK(cycle_structure(Poly::x(F)) == CycleStructure{{1, 16}});
    CHECK_THROWS_AS(cycle_structure(parse_poly(F, "x^3")), PreconditionError);
}

TEST_CASE("translation permutations match the predicted profile") {
    for (const char* s : {"3^2", "2^4", "5^2"}) {
        auto F = Field::parse(s);
        Rng rng(97);
        for (const auto& U : all_subspaces(F)) {
            const auto L = vanishing_poly(U);
            const Poly f = reduce_mod_field_poly(compose(complement(L).to_poly(), random_poly(F, 4, rng)));
            const auto tp = translation_pp(L, f);
            CHECK(tp.predicted == oracle_cycles(tp.P));
        }
        const auto zero = translation_pp(vanishing_poly(random_subspace(F, 1, rng)), Poly(F));
        CHECK(zero.predicted == CycleStructure{{1, F->order()}});
    }
    auto F9 = Field::parse("3^2");
    const LinearizedPoly L(F9, {F9->neg(F9->one()), F9->one()});
    CHECK_THROWS_AS(translation_pp(L, Poly::x(F9)), PreconditionError);
}

TEST_CASE("2-nilpotent instances permute") {
    for (const char* s : {"2^2", "3^2", "2^4", "5^2"}) {
        auto F = Field::parse(s);
        Rng rng(101);
        const auto pairs = nilpotent_pairs(F);
        REQUIRE_FALSE(pairs.empty());
        for (int t = 0; t < 10; ++t) {
            const auto& pr = pairs[rng() % pairs.size()];
            CHECK(oracle::is_pp(nilpotent_pp(pr.L, random_poly(F, 5, rng))));
        }
    }
}

TEST_CASE("prescribed cycle structures") {
    auto F16 = Field::parse("2^4");
    CHECK(construct_prescribed_cycles(F16, 4).structure == CycleStructure{{1, 4}, {2, 6}});
    auto F9 = Field::parse("3^2");
    CHECK(construct_prescribed_cycles(F9, 3).structure == CycleStructure{{1, 3}, {3, 2}});
    CHECK(construct_prescribed_cycles(F9, 9).P == Poly::x(F9));
    for (const char* s : {"3^2", "2^4", "5^2"}) {
        auto F = Field::parse(s);
        const std::uint64_t p = F->characteristic(), q = F->order();
        for (std::uint64_t fixed = 0; fixed <= q; fixed += p) {
            const auto r = construct_prescribed_cycles(F, fixed);
            CycleStructure want;
            if (fixed) want[1] = fixed;
            if (fixed < q) want[p] = (q - fixed) / p;
            CHECK(oracle_cycles(r.P) == want);
        }
    }
    CHECK_THROWS_AS(construct_prescribed_cycles(F9, 4), PreconditionError);
    CHECK_THROWS_AS(construct_prescribed_cycles(F9, 12), PreconditionError);
}

TEST_CASE("involutions") {
    auto F9 = Field::parse("3^2");
    CHECK(is_involution(Poly::x(F9)).is_involution);
    CHECK(is_involution(parse_poly(F9, "-x")).is_involution);
    CHECK_FALSE(is_involution(parse_poly(F9, "x+1")).is_involution);

    auto F = Field::parse("2^4");
    Rng rng(103);
    for (unsigned dim = 1; dim <= 4; ++dim) {
        const auto L = vanishing_poly(random_subspace(F, dim, rng));
        const Poly f = kernel_valued(L, rng, true);
        const Poly P = compose(f, L.to_poly()) + Poly::x(F);
        CHECK(is_involution(P).is_involution);
        int fixed = 0;
        for (Elt y : F->elements()) fixed += oracle::eval(P, y) == y;
        CHECK(fixed == 0);
    }
    for (const auto& P : mixed_sample(F, 150, 107)) {
        if (!usable(P)) continue;
        bool expected = true;
        for (Elt y : F->elements()) expected = expected && oracle::eval(P, oracle::eval(P, y)) == y;
        CHECK(is_involution(P, InvolutionMethod::Certificate).is_involution == expected);
        CHECK(is_involution(P, InvolutionMethod::Brute).is_involution == expected);
    }
}

TEST_CASE("linear translator checks") {
    auto F4 = Field::parse("2^2");
    const auto U2 = Subspace::span(F4, std::vector<Elt>{F4->one()});
    const TranslatorSpec tr{parse_poly(F4, "x^2+x"), U2, LinearizedPoly(F4)};
    const auto ok = is_linear_translator(tr);
    CHECK(ok.ok());
    CHECK(ok.onto_U);

    auto F9 = Field::parse("3^2");
    const auto U3 = Subspace::span(F9, std::vector<Elt>{F9->one()});
    for (const auto& M : {LinearizedPoly(F9), LinearizedPoly::identity(F9)}) {
        const auto bad = is_linear_translator({parse_poly(F9, "x^2"), U3, M});
        CHECK_FALSE(bad.identity_holds);
        REQUIRE(bad.violation);
        const auto [x, u] = *bad.violation;
        CHECK(oracle::eval(parse_poly(F9, "x^2"), F9->add(x, u)) !=
              F9->add(oracle::eval(parse_poly(F9, "x^2"), x), M(u)));
    }

    Rng rng(109);
    const auto G = random_linearized(F9, 2, rng);
    CHECK(is_linear_translator({G.to_poly(), U3, G}).identity_holds);
}

TEST_CASE("b-linear translator form") {
    auto F = Field::parse("2^4");
    // Tr from F_16 to F_4 is F_4-linear: Tr(x + gamma u) = Tr(x) + Tr(gamma) u.
    const Poly g = parse_poly(F, "x^4+x");
    Elt gamma{0};
    for (Elt y : F->elements())
        if (g(y).code && !gamma.code) gamma = y;
    const Elt b = g(gamma);
    std::vector<Elt> F4;
    for (Elt y : F->elements())
        if (F->pow(y, 4) == y) F4.push_back(F->mul(gamma, y));
    const auto U = Subspace::span(F, F4);
    const LinearizedPoly M(F, {F->mul(F->inv(gamma), b)});
    TranslatorSpec spec{g, U, M, TranslatorKind::BLinear, gamma, b, 0};
    const auto r = is_linear_translator(spec);
    CHECK(r.identity_holds);
    CHECK(r.m_form_holds);
    spec.b = F->add(b, F->one());
    CHECK_FALSE(is_linear_translator(spec).m_form_holds);
}

TEST_CASE("translator permutations") {
    auto F9 = Field::parse("3^2");
    const auto U = Subspace::span(F9, std::vector<Elt>{F9->one()});
    const TranslatorSpec tr{parse_poly(F9, "x^3+x"), U, LinearizedPoly(F9, {F9->from_int(2)})};
    const auto zero = translator_pp(tr, Poly(F9));
    CHECK(zero.small_side);
    CHECK(zero.is_pp);
    CHECK(zero.is_complete);
    const auto hx = translator_pp(tr, Poly::x(F9));
    CHECK_FALSE(hx.small_side);
    CHECK_FALSE(hx.is_pp);
    CHECK_THROWS_AS(translator_pp(tr, parse_poly(F9, "[3]")), PreconditionError);
    CHECK_THROWS_AS(translator_pp({parse_poly(F9, "x^2"), U, LinearizedPoly(F9)}, Poly::x(F9)), PreconditionError);

    for (const char* s : {"3^2", "2^4", "3^3"}) {
        auto F = Field::parse(s);
        Rng rng(113);
        for (int t = 0; t < 40; ++t) {
            const auto sample = random_translator(F, 1 + t % F->degree(), rng);
            const auto r = translator_pp(sample.spec, sample.h);
            std::vector<Elt> full, twice;
            for (Elt x : F->elements()) {
                const Elt v = F->add(x, oracle::eval(sample.h, oracle::eval(sample.spec.g, x)));
                full.push_back(v);
                twice.push_back(F->add(v, x));
            }
            CHECK(r.is_pp == (std::set<Elt>(full.begin(), full.end()).size() == F->order()));
            CHECK(r.is_complete == (r.is_pp && std::set<Elt>(twice.begin(), twice.end()).size() == F->order()));
            CHECK(r.equivalence_holds());
        }
    }
}

TEST_CASE("complete-mapping claim fails for an odd-characteristic translator") {
    // g = Tr onto F_3 with M(u) = 2u and h(u) = 2u: x + 2 Tr(x) permutes F_9,
    // but 2x + 2 Tr(x) = 2(x + Tr(x)) lands in the kernel of the trace.
    auto F = Field::parse("3^2");
    const auto U = Subspace::span(F, std::vector<Elt>{F->one()});
    const TranslatorSpec tr{parse_poly(F, "x^3+x"), U, LinearizedPoly(F, {F->from_int(2)})};
    const auto r = translator_pp(tr, parse_poly(F, "2x"));
    CHECK(r.small_side);
    CHECK(r.is_pp);
    CHECK_FALSE(r.is_complete);
    CHECK(r.complete_claim_violated());
    CHECK(oracle::is_pp(parse_poly(F, "x+2x^3+2x")));
    CHECK_FALSE(oracle::is_pp(parse_poly(F, "2x+2x^3+2x")));
}

TEST_CASE("AGW criterion on tables") {
    std::vector<std::uint32_t> id{0, 1, 2, 3}, swap{1, 0, 3, 2}, collapse{0, 0, 2, 3};
    const auto a = agw_check(swap, id, id, swap, 4);
    CHECK(a.bijective);
    CHECK(a.agree());
    const auto b = agw_check(collapse, id, id, collapse, 4);
    CHECK_FALSE(b.bijective);
    CHECK(b.agree());
    std::vector<std::uint32_t> lam{0, 0, 1, 1};
    CHECK_THROWS_AS(agw_check(swap, lam, lam, std::vector<std::uint32_t>{1, 1}, 2), PreconditionError);
    CHECK_THROWS_AS(agw_check(id, std::vector<std::uint32_t>{0, 0, 0, 0}, lam, std::vector<std::uint32_t>{0, 1}, 2),
                    PreconditionError);
}

TEST_CASE("AGW diagrams from L-quotient maps agree with the oracle") {
    auto F = Field::parse("2^4");
    Rng rng(127);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto U = random_subspace(F, 1 + t % 3, rng);
        const auto L = vanishing_poly(U);
        const Poly f = random_poly(F, 1 + t % 4, rng);
        // M fixes U pointwise, so L(M(x)) = N(L(x)) for a linearized N.
        const LinearizedPoly Mx = t % 2 ? LinearizedPoly::identity(F)
                                        : *is_linearized(compose(random_linearized(F, 2, rng), L).to_poly() +
                                                         Poly::x(F));
        const Poly P = compose(f, L.to_poly()) + Mx.to_poly();
        const auto S = image(L).elements();
        std::vector<std::uint32_t> index(F->order(), 0);
        for (std::uint32_t i = 0; i < S.size(); ++i) index[S[i].code] = i;
        const auto N = linearized_quotient(compose(L, Mx), L);
        std::vector<std::uint32_t> fa, lam, fbar;
        for (Elt x : F->elements()) {
            fa.push_back(oracle::eval(P, x).code);
            lam.push_back(index[L(x).code]);
        }
        for (Elt s : S) fbar.push_back(index[F->add(L(f(s)), N(s)).code]);
        const auto r = agw_check(fa, lam, lam, fbar, S.size());
        CHECK(r.agree());
        CHECK(r.bijective == oracle::is_pp(P));
        ++checked;
    }
    CHECK(checked == 1000);
}
