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

#include "addix/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "addix/additive_index.hpp"
#include "addix/analysis.hpp"
#include "addix/charsum.hpp"
#include "addix/error.hpp"
#include "addix/sampling.hpp"

namespace addix::verify {

namespace {

constexpr double kKernelSeconds = 60.0;
constexpr double kValueSetSeconds = 120.0;
constexpr double kCharSumSeconds = 120.0;
constexpr int kKernelSamples = 200;
constexpr int kKernelMaxDegree = 12;
constexpr int kValueSetUniform = 200;
constexpr int kValueSetDecomposable = 150;
constexpr int kValueSetPP = 150;
constexpr int kInversePerField = 200;
constexpr int kTranslationPerField = 100;
constexpr int kNilpotentPerCase = 20;
constexpr int kRandomSubspaces64 = 100;
constexpr int kCharSamples = 100;
constexpr int kInvolutionPP = 200;
constexpr int kInvolutionDecomposable = 150;
constexpr int kInvolutionTranslation = 150;
constexpr int kTranslatorPerField = 200;

struct Tally {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first;

    void fail(const std::string& what) {
        if (failures++ == 0) first = what;
    }
    // Runs one case, turning exceptions into failures.
    void check(const std::string& label, const std::function<void()>& body) {
        ++cases;
        try {
            body();
        } catch (const InvariantViolation& e) {
            fail(label + ": " + e.what() + " [" + e.counterexample() + "]");
        } catch (const std::exception& e) {
            fail(label + ": " + e.what());
        }
    }
};

Rng rng_for(const Options& o, int id, const Field& F, std::uint64_t salt = 0) {
    return Rng(o.seed * 1000003ULL + static_cast<std::uint64_t>(id) * 7919ULL + F.order() * 31ULL + salt);
}

std::vector<FieldPtr> fields(std::initializer_list<const char*> specs, const Options& o,
                             std::vector<std::string>& skipped) {
    std::vector<FieldPtr> out;
    for (const char* s : specs) {
        auto F = Field::parse(s);
        if (F->order() > o.max_q) {
            skipped.push_back(s);
            continue;
        }
        out.push_back(std::move(F));
    }
    return out;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string label(const Field& F, std::size_t i) { return "F_" + std::to_string(F.order()) + " #" + std::to_string(i); }

std::vector<Poly> kernel_sweep(const FieldPtr& F, const Options& o) {
    Rng rng = rng_for(o, 1, *F);
    std::vector<Poly> out;
    for (int i = 0; i < kKernelSamples; ++i) out.push_back(random_poly(F, uniform(rng, 1, kKernelMaxDegree), rng));
    return out;
}

std::vector<Poly> value_sweep(const FieldPtr& F, const Options& o) {
    Rng rng = rng_for(o, 3, *F);
    const int n = static_cast<int>(F->degree());
    std::vector<Poly> out;
    for (int i = 0; i < kValueSetUniform; ++i) out.push_back(random_poly(F, uniform(rng, 1, kKernelMaxDegree), rng));
    for (int i = 0; i < kValueSetDecomposable; ++i) {
        out.push_back(random_decomposable(F, uniform(rng, 0, n), uniform(rng, 1, 4), rng).P);
    }
    for (int i = 0; i < kValueSetPP; ++i) out.push_back(random_decomposable_pp(F, uniform(rng, 0, n), rng).P);
    return out;
}

bool bijective(const std::vector<Elt>& table) {
    std::vector<bool> hit(table.size(), false);
    for (Elt v : table) {
        if (hit[v.code]) return false;
        hit[v.code] = true;
    }
    return true;
}

std::string skipped_note(const std::vector<std::string>& skipped) {
    if (skipped.empty()) return "";
    std::string s = "; skipped (above max-q):";
    for (auto& f : skipped) s += " " + f;
    return s;
}

Result finish(int id, std::string name, const Tally& t, std::string detail) {
    Result r;
    r.id = id;
    r.name = std::move(name);
    r.cases = t.cases;
    r.passed = t.failures == 0 && t.cases > 0;
    r.detail = t.failures ? std::to_string(t.failures) + " failure(s); first: " + t.first : std::move(detail);
    if (t.cases == 0 && t.failures == 0) r.detail = "no cases ran" + detail;
    return r;
}

// --------------------------------------------------------------------------

Result kernel_methods(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    for (const auto& F : fields({"2^2", "2^3", "3^2", "2^4", "5^2", "3^3", "2^5", "2^6"}, o, skipped)) {
        const auto polys = kernel_sweep(F, o);
        for (std::size_t i = 0; i < polys.size(); ++i) {
            t.check(label(*F, i), [&] {
                const auto a = additive_kernel(polys[i], KernelMethod::Gcd);
                const auto b = additive_kernel(polys[i], KernelMethod::Brute);
                if (!(a == b)) throw std::runtime_error("gcd and brute-force kernels differ for " + to_string(polys[i]));
            });
        }
    }
    return finish(1, "kernel methods agree", t, std::to_string(t.cases) + " polynomials" + skipped_note(skipped));
}

Result decomposition_identity(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    std::uint64_t reduced = 0;
    for (const auto& F : fields({"2^2", "2^3", "3^2", "2^4", "5^2", "3^3", "2^5", "2^6"}, o, skipped)) {
        const auto polys = kernel_sweep(F, o);
        for (std::size_t i = 0; i < polys.size(); ++i) {
            t.check(label(*F, i), [&] {
                const auto D = maximal_decomposition(polys[i]);
                if (D.reduced) ++reduced;
                const std::string who = to_string(polys[i]);
                if (!(D.recompose() == D.P)) throw std::runtime_error("f(L(x)) + M(x) != P for " + who);
                if (!is_linearized(D.M.to_poly())) throw std::runtime_error("M is not linearized for " + who);
                if (D.M.degree() >= D.L.degree()) throw std::runtime_error("deg M >= deg L for " + who);
                if (D.f.coeff(0) != D.P.coeff(0)) throw std::runtime_error("f(0) != P(0) for " + who);
                if (D.L.degree() != ipow(F->characteristic(), F->degree() - D.index_k)) {
                    throw std::runtime_error("deg L != p^(n-k) for " + who);
                }
                if (!(kernel(D.L) == D.kernel_V)) throw std::runtime_error("kernel(L) != V for " + who);
            });
        }
    }
    return finish(2, "decomposition identity", t,
                  std::to_string(t.cases) + " decompositions, " + std::to_string(reduced) +
                      " inputs reduced mod x^q - x first" + skipped_note(skipped));
}

Result value_sets(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    std::uint64_t gcd_x_non_pp = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& F : fields({"2^3", "3^2", "2^4", "3^3"}, o, skipped)) {
        const auto polys = value_sweep(F, o);
        for (std::size_t i = 0; i < polys.size(); ++i) {
            t.check(label(*F, i), [&] {
                const auto a = value_set_size(polys[i], ValueSetMethod::Theorem);
                const auto b = value_set_size(polys[i], ValueSetMethod::Brute);
                if (a.size != b.size) {
                    throw std::runtime_error("value set " + std::to_string(a.size) + " vs brute " +
                                             std::to_string(b.size) + " for " + to_string(polys[i]));
                }
                const auto th = value_set_pp_threshold(polys[i]);
                if (th.gcd_LM_degree == 1 && !th.is_pp) ++gcd_x_non_pp;
                if (!th.implication_holds) {
                    throw InvariantViolation("value set exceeds p^n - p^(n-k) for a non-permutation with gcd x",
                                             to_string(polys[i]) + " over " + F->spec());
                }
            });
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kValueSetSeconds) t.fail("runtime " + std::to_string(secs) + " s exceeds the limit");
    return finish(3, "value set equivalence", t,
                  std::to_string(t.cases) + " polynomials, " + std::to_string(gcd_x_non_pp) +
                      " non-permutations with gcd(L, M) = x checked against the threshold" + skipped_note(skipped));
}

Result pp_certificates(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    std::uint64_t pps = 0, eligible = 0;
    for (const auto& F : fields({"2^3", "3^2", "2^4", "3^3"}, o, skipped)) {
        const auto polys = value_sweep(F, o);
        for (std::size_t i = 0; i < polys.size(); ++i) {
            t.check(label(*F, i), [&] {
                const auto cert = is_permutation(polys[i], PPMethod::Certificate);
                const auto brute = is_permutation(polys[i], PPMethod::Brute);
                if (cert.is_pp != brute.is_pp) throw std::runtime_error("certificate disagrees for " + to_string(polys[i]));
                if (brute.is_pp) ++pps;
                const auto D = maximal_decomposition(polys[i]);
                std::optional<QuotientCriterion> qc;
                try {
                    qc = pp_criterion_quotient(D.f, D.L, D.M);
                } catch (const PreconditionError&) {
                    return;
                }
                ++eligible;
                if (qc->is_pp != brute.is_pp || qc->brute_is_pp != brute.is_pp) {
                    throw std::runtime_error("quotient criterion disagrees for " + to_string(polys[i]));
                }
            });
        }
    }
    return finish(4, "permutation certificate", t,
                  std::to_string(t.cases) + " polynomials, " + std::to_string(pps) + " permutations, " +
                      std::to_string(eligible) + " eligible for the quotient criterion" + skipped_note(skipped));
}

Result inverse_round_trip(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    for (const auto& F : fields({"2^4", "3^3"}, o, skipped)) {
        Rng rng = rng_for(o, 5, *F);
        for (int i = 0; i < kInversePerField; ++i) {
            const auto sample = random_decomposable_pp(F, uniform(rng, 0, F->degree()), rng);
            t.check(label(*F, i), [&] {
                const auto inv = inverse_pp(sample.P);
                const auto fwd = value_table(sample.P);
                const auto back = value_table(inv.P0);
                for (std::uint32_t y = 0; y < F->order(); ++y) {
                    if (back[fwd[y].code].code != y || fwd[back[y].code].code != y) {
                        throw std::runtime_error("inverse fails at y = " + std::to_string(y) + " for " +
                                                 to_string(sample.P));
                    }
                }
                if (additive_index(inv.P0) != additive_index(sample.P)) {
                    throw InvariantViolation("additive index of the inverse differs",
                                             "P = " + to_string(sample.P) + ", P0 = " + to_string(inv.P0));
                }
            });
        }
    }
    return finish(5, "inverse round trip", t, std::to_string(t.cases) + " permutations inverted" + skipped_note(skipped));
}

Result cycles(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    for (const auto& F : fields({"3^2", "2^4", "5^2"}, o, skipped)) {
        Rng rng = rng_for(o, 6, *F);
        for (int i = 0; i < kTranslationPerField; ++i) {
            const Subspace U = random_subspace(F, uniform(rng, 0, F->degree()), rng);
            const LinearizedPoly L = vanishing_poly(U);
            const Poly g = random_poly(F, 6, rng);
            t.check(label(*F, i) + " translation", [&] {
                const Poly f = reduce_mod_field_poly(compose(complement(L).to_poly(), g));
                const auto tp = translation_pp(L, f);
                const auto measured = cycle_structure(tp.P);
                if (measured != tp.predicted) throw std::runtime_error("cycle profile mismatch for " + to_string(tp.P));
                auto table = value_table(tp.P);
                std::vector<Elt> iter(F->order());
                for (std::uint32_t y = 0; y < F->order(); ++y) iter[y] = Elt{y};
                for (std::uint32_t k = 0; k < F->characteristic(); ++k) {
                    for (auto& v : iter) v = table[v.code];
                }
                for (std::uint32_t y = 0; y < F->order(); ++y) {
                    if (iter[y].code != y) throw std::runtime_error("P^(p) is not the identity for " + to_string(tp.P));
                }
            });
        }
        for (std::uint64_t s = 0; s <= F->order(); s += F->characteristic()) {
            t.check(label(*F, s) + " prescribed", [&] { construct_prescribed_cycles(F, s); });
        }
    }
    for (const auto& F : fields({"2^2", "3^2", "2^4", "5^2"}, o, skipped)) {
        Rng rng = rng_for(o, 6, *F, 1);
        const auto pairs = nilpotent_pairs(F);
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        for (int i = 0; i < kNilpotentPerCase; ++i) {
            const auto& pr = pairs[pick(rng)];
            const Poly f = random_poly(F, 6, rng);
            t.check(label(*F, i) + " nilpotent", [&] {
                for (Elt y : F->elements()) {
                    if (pr.L(pr.L(y)).code) throw std::runtime_error("L is not 2-nilpotent");
                }
                if (!bijective(value_table(nilpotent_pp(pr.L, f)))) {
                    throw InvariantViolation("L(f(L(x))) + x is not a permutation",
                                             "L = " + to_string(pr.L.to_poly()) + ", f = " + to_string(f));
                }
            });
        }
    }
    return finish(6, "cycle theorems", t, std::to_string(t.cases) + " instances" + skipped_note(skipped));
}

Result complements(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    auto check_one = [&](const Subspace& U, const std::string& who) {
        t.check(who, [&] {
            const LinearizedPoly L = vanishing_poly(U);
            const LinearizedPoly Lt = complement(L);
            const auto full = LinearizedPoly::field_poly(U.field());
            if (!(compose(Lt, L) == full) || !(compose(L, Lt) == full)) {
                throw std::runtime_error("complement does not commute for L = " + to_string(L.to_poly()));
            }
        });
    };
    for (const auto& F : fields({"2^4"}, o, skipped)) {
        const auto subs = all_subspaces(F);
        if (subs.size() != 67) t.fail("expected 67 subspaces of F_16, found " + std::to_string(subs.size()));
        for (std::size_t i = 0; i < subs.size(); ++i) check_one(subs[i], label(*F, i));
    }
    for (const auto& F : fields({"2^6"}, o, skipped)) {
        Rng rng = rng_for(o, 7, *F);
        for (int i = 0; i < kRandomSubspaces64; ++i) check_one(random_subspace(F, uniform(rng, 0, 6), rng), label(*F, i));
    }
    return finish(7, "complement commutation", t, std::to_string(t.cases) + " subspaces" + skipped_note(skipped));
}

Result character_bounds(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    std::uint64_t sharp = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& F : fields({"2^4", "3^3", "2^6"}, o, skipped)) {
        Rng rng = rng_for(o, 8, *F);
        const unsigned n = F->degree();
        std::vector<MultChar> chars;
        for (std::uint64_t j = 1; j + 1 < F->order(); ++j) chars.emplace_back(F, j);
        for (int i = 0; i < kCharSamples; ++i) {
            const auto sample = random_decomposable(F, 1 + i % n, uniform(rng, 1, 4), rng);
            t.check(label(*F, i), [&] {
                const auto D = maximal_decomposition(sample.P);
                const Subspace V = subspace_image(D.M, D.kernel_V);
                std::vector<Elt> starts;
                for (Elt z : coset_reps(D.kernel_V).reps) starts.push_back(V.reduce(D.P(z)));
                std::sort(starts.begin(), starts.end());
                starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
                for (const auto& chi : chars) {
                    const auto rep = bound_report(sample.P, chi);
                    if (F->order() == 64 && rep.weil_applicable && rep.additive_bound < rep.weil_bound &&
                        rep.additive_bound < rep.trivial_bound) {
                        ++sharp;
                    }
                    for (Elt a : starts) char_sum_affine(a, V, chi);
                }
            });
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kCharSumSeconds) t.fail("runtime " + std::to_string(secs) + " s exceeds the limit");
    if (o.max_q >= 64 && sharp == 0) t.fail("no F_64 instance with the additive bound below both Weil and q");
    return finish(8, "character sum bounds", t,
                  std::to_string(t.cases) + " polynomials, " + std::to_string(sharp) +
                      " (polynomial, character) pairs over F_64 where the additive bound beats Weil and q" +
                      skipped_note(skipped));
}

Result involutions_translators(const Options& o) {
    std::vector<std::string> skipped;
    Tally t;
    std::vector<std::string> events;
    std::uint64_t involutions = 0;
    for (const auto& F : fields({"2^4"}, o, skipped)) {
        Rng rng = rng_for(o, 9, *F);
        const int n = static_cast<int>(F->degree());
        std::vector<Poly> polys;
        for (int i = 0; i < kInvolutionPP; ++i) polys.push_back(random_decomposable_pp(F, uniform(rng, 0, n), rng).P);
        for (int i = 0; i < kInvolutionDecomposable; ++i) {
            polys.push_back(random_decomposable(F, uniform(rng, 0, n), uniform(rng, 1, 4), rng).P);
        }
        for (int i = 0; i < kInvolutionTranslation; ++i) {
            const LinearizedPoly L = vanishing_poly(random_subspace(F, uniform(rng, 1, n), rng));
            const Poly f = reduce_mod_field_poly(compose(complement(L).to_poly(), random_poly(F, 4, rng)));
            Poly P = compose(f, L.to_poly()) + Poly::x(F);
            polys.push_back(std::move(P));
        }
        for (std::size_t i = 0; i < polys.size(); ++i) {
            t.check(label(*F, i) + " involution", [&] {
                const auto a = is_involution(polys[i], InvolutionMethod::Certificate);
                const auto b = is_involution(polys[i], InvolutionMethod::Brute);
                if (a.is_involution != b.is_involution) {
                    throw std::runtime_error("involution certificate disagrees for " + to_string(polys[i]));
                }
                if (b.is_involution) ++involutions;
            });
        }
    }
    for (const auto& F : fields({"3^2", "2^4"}, o, skipped)) {
        Rng rng = rng_for(o, 9, *F, 1);
        std::uint64_t pps = 0, violations = 0;
        for (int i = 0; i < kTranslatorPerField; ++i) {
            const auto sample = random_translator(F, uniform(rng, 1, F->degree()), rng);
            t.check(label(*F, i) + " translator", [&] {
                const auto r = translator_pp(sample.spec, sample.h);
                if (!r.equivalence_holds()) {
                    throw InvariantViolation("small-side bijection and full permutation disagree",
                                             "g = " + to_string(sample.spec.g) + ", h = " + to_string(sample.h));
                }
                if (r.is_pp) ++pps;
                if (r.complete_claim_violated()) ++violations;

                // The same verdict through the commutative diagram with lambda = lambda_bar = g.
                const auto U_elems = sample.spec.U.elements();
                std::vector<std::uint32_t> index(F->order(), 0);
                for (std::uint32_t k = 0; k < U_elems.size(); ++k) index[U_elems[k].code] = k;
                const auto gt = value_table(sample.spec.g);
                std::vector<std::uint32_t> fa(F->order()), lam(F->order()), fbar(U_elems.size());
                for (std::uint32_t x = 0; x < F->order(); ++x) {
                    fa[x] = F->add(Elt{x}, sample.h(gt[x])).code;
                    lam[x] = index[gt[x].code];
                }
                for (std::uint32_t k = 0; k < U_elems.size(); ++k) {
                    fbar[k] = index[F->add(U_elems[k], sample.spec.M(sample.h(U_elems[k]))).code];
                }
                const auto agw = agw_check(fa, lam, lam, fbar, U_elems.size());
                if (!agw.agree() || agw.bijective != r.is_pp) throw std::runtime_error("AGW diagram disagrees");
            });
        }
        events.push_back("complete-mapping claim over F_" + std::to_string(F->order()) + " (p = " +
                         std::to_string(F->characteristic()) + "): " + std::to_string(violations) + " of " +
                         std::to_string(pps) + " translator permutations are not complete mappings");
    }
    auto r = finish(9, "involutions and translators", t,
                    std::to_string(t.cases) + " instances, " + std::to_string(involutions) + " involutions" +
                        skipped_note(skipped));
    r.events = std::move(events);
    return r;
}

Result worked_examples(const Options&) {
    Tally t;
    t.check("x^3 over F_8", [] {
        const auto F = Field::parse("2^3");
        if (additive_index(parse_poly(F, "x^3")) != 3) throw std::runtime_error("index of x^3 over F_8 is not 3");
    });
    t.check("(x^3-x)^2+x over F_9", [] {
        const auto F = Field::parse("3^2");
        const auto D = maximal_decomposition(parse_poly(F, "(x^3-x)^2+x"));
        if (D.index_k != 1) throw std::runtime_error("index is not 1");
        if (!(D.L.to_poly() == parse_poly(F, "x^3-x"))) throw std::runtime_error("L is not x^3 - x");
    });
    for (const char* spec : {"2^2", "2^3", "3^2", "3^3"}) {
        t.check(std::string("trace over ") + spec, [spec] {
            const auto F = Field::parse(spec);
            const std::vector<Elt> sub{F->neg(F->one()), F->one()};
            const auto N = linearized_quotient(LinearizedPoly::field_poly(F), LinearizedPoly(F, sub));
            if (!(N == LinearizedPoly(F, std::vector<Elt>(F->degree(), F->one())))) {
                throw std::runtime_error("quotient is not the trace polynomial");
            }
        });
    }
    return finish(10, "worked examples", t, std::to_string(t.cases) + " fixed examples");
}

}  // namespace

Result run_criterion(int id, const Options& opts) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    switch (id) {
        case 1: r = kernel_methods(opts); break;
        case 2: r = decomposition_identity(opts); break;
        case 3: r = value_sets(opts); break;
        case 4: r = pp_certificates(opts); break;
        case 5: r = inverse_round_trip(opts); break;
        case 6: r = cycles(opts); break;
        case 7: r = complements(opts); break;
        case 8: r = character_bounds(opts); break;
        case 9: r = involutions_translators(opts); break;
        case 10: r = worked_examples(opts); break;
        default: throw PreconditionError("unknown criterion " + std::to_string(id));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (id == 1 && r.seconds >= kKernelSeconds) {
        r.passed = false;
        r.detail = "runtime " + std::to_string(r.seconds) + " s exceeds the limit; " + r.detail;
    }
    return r;
}

std::vector<Result> run_suite(const std::string& suite, const Options& opts) {
    std::vector<int> ids;
    if (suite == "all") {
        for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
    } else {
        std::stringstream ss(suite);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                const int id = std::stoi(tok, &used);
                if (used != tok.size() || id < 1 || id > kCriteria) throw std::out_of_range(tok);
                ids.push_back(id);
            } catch (const std::logic_error&) {
                throw ParseError("suite must be 'all' or a comma-separated list of 1.." + std::to_string(kCriteria));
            }
        }
        if (ids.empty()) throw ParseError("empty suite");
    }
    std::vector<Result> out;
    for (int id : ids) out.push_back(run_criterion(id, opts));
    return out;
}

}  // namespace addix::verify
