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

#include "addix/analysis.hpp"

#include <algorithm>
#include <set>

#include "addix/error.hpp"
#include "addix/parallel.hpp"

namespace addix {

namespace {

bool is_bijection(std::span<const Elt> table, std::uint32_t q) {
    std::vector<bool> hit(q, false);
    for (Elt v : table) {
        if (v.code >= q || hit[v.code]) return false;
        hit[v.code] = true;
    }
    return table.size() == q;
}

std::string pair_text(Elt a, Elt b) {
    return "(" + std::to_string(a.code) + ", " + std::to_string(b.code) + ")";
}

void require_same(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b)) throw PreconditionError("operands over different fields");
}

// u in U with M(u) = target, or nullopt.
std::optional<Elt> preimage_in(const Subspace& U, const LinearizedPoly& M, Elt target) {
    for (Elt u : U.elements()) {
        if (M(u) == target) return u;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Elt> value_table(const Poly& P) {
    const std::uint32_t q = P.F().order();
    std::vector<Elt> table(q);
    parallel_blocks(q, 1024, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) table[c] = P(Elt{static_cast<std::uint32_t>(c)});
    });
    return table;
}

std::optional<std::pair<Elt, Elt>> first_collision(const Poly& P) {
    const auto table = value_table(P);
    std::vector<std::int64_t> seen(table.size(), -1);
    for (std::uint32_t y = 0; y < table.size(); ++y) {
        auto& slot = seen[table[y].code];
        if (slot >= 0) return std::make_pair(Elt{static_cast<std::uint32_t>(slot)}, Elt{y});
        slot = y;
    }
    return std::nullopt;
}

std::uint64_t gcd_degree(const LinearizedPoly& L, const LinearizedPoly& M) {
    return static_cast<std::uint64_t>(gcd(L.to_poly(), M.to_poly()).degree());
}

ValueSetResult value_set_size(const Poly& P, ValueSetMethod method) {
    if (P.degree() < 1) throw PreconditionError("polynomial must have degree >= 1");
    if (method == ValueSetMethod::Brute) {
        const auto table = value_table(P);
        std::vector<bool> hit(table.size(), false);
        std::uint64_t size = 0;
        for (Elt v : table) {
            if (!hit[v.code]) {
                hit[v.code] = true;
                ++size;
            }
        }
        return {size, std::nullopt};
    }
    const auto D = maximal_decomposition(P);
    const Subspace W = subspace_image(D.M, D.kernel_V);
    std::set<Elt> cosets;
    for (Elt z : coset_reps(D.kernel_V).reps) cosets.insert(W.reduce(D.P(z)));
    return {cosets.size() * W.size(), cosets.size()};
}

ValueSetThreshold value_set_pp_threshold(const Poly& P) {
    const auto D = maximal_decomposition(P);
    const auto& F = P.F();
    ValueSetThreshold r;
    r.value_set_size = value_set_size(P, ValueSetMethod::Brute).size;
    r.index_k = D.index_k;
    r.gcd_LM_degree = gcd_degree(D.L, D.M);
    r.is_pp = r.value_set_size == F.order();
    r.threshold = F.order() - D.L.degree();
    r.implication_holds = !(r.gcd_LM_degree == 1 && !r.is_pp) || r.value_set_size <= r.threshold;
    r.degree = D.P.degree();
    r.multiplicative_index = multiplicative_index(D.P);
    const double q = F.order();
    r.wan_bound = q - (q - 1) / r.degree;
    r.mww_bound = q - (q - 1) / static_cast<double>(r.multiplicative_index);
    return r;
}

PPCertificate is_permutation(const Poly& P, PPMethod method) {
    if (P.degree() < 1) throw PreconditionError("polynomial must have degree >= 1");
    PPCertificate cert;
    if (method == PPMethod::Brute) {
        cert.witness = first_collision(P);
        cert.is_pp = !cert.witness;
        const auto D = maximal_decomposition(P);
        cert.gcd_LM_degree = gcd_degree(D.L, D.M);
        cert.quotient_bijection = cert.is_pp;
        return cert;
    }

    const auto D = maximal_decomposition(P);
    const Subspace& U = D.kernel_V;
    const Subspace W = subspace_image(D.M, U);
    cert.gcd_LM_degree = gcd_degree(D.L, D.M);

    const auto reps = coset_reps(U).reps;
    std::map<Elt, Elt> first_rep;  // reduced image -> representative
    std::optional<std::pair<Elt, Elt>> clash;
    for (Elt z : reps) {
        auto [it, fresh] = first_rep.emplace(W.reduce(D.P(z)), z);
        if (!fresh && !clash) clash = std::make_pair(it->second, z);
    }
    cert.quotient_bijection = !clash && W.size() == U.size();
    cert.is_pp = cert.gcd_LM_degree == 1 && cert.quotient_bijection;

    if (cert.gcd_LM_degree != 1) {
        for (Elt u : U.elements()) {
            if (u.code != 0 && D.M(u).code == 0) {
                cert.witness = std::make_pair(Elt{0}, u);
                break;
            }
        }
    } else if (clash) {
        const auto& F = P.F();
        auto [zi, zj] = *clash;
        auto u = preimage_in(U, D.M, F.sub(D.P(zj), D.P(zi)));
        if (!u) {
            throw InvariantViolation("coset images differ by an element outside M(U)",
                                     "P = " + to_string(P) + ", reps " + pair_text(zi, zj));
        }
        Elt a = zj, b = F.add(zi, *u);
        if (b < a) std::swap(a, b);
        cert.witness = std::make_pair(a, b);
    }
    if (cert.witness) {
        auto [a, b] = *cert.witness;
        if (a == b || D.P(a) != D.P(b)) {
            throw InvariantViolation("structural collision witness does not collide",
                                     "P = " + to_string(P) + ", witness " + pair_text(a, b));
        }
    } else if (!cert.is_pp) {
        throw InvariantViolation("no collision witness for a non-permutation", "P = " + to_string(P));
    }
    return cert;
}

QuotientCriterion pp_criterion_quotient(const Poly& f, const LinearizedPoly& L, const LinearizedPoly& M) {
    require_same(f.field(), L.field());
    require_same(f.field(), M.field());
    if (!is_subspace_poly(L)) throw PreconditionError("L must be a monic p-linearized divisor of x^q - x");
    const auto& F = f.F();
    QuotientCriterion r{linearized_quotient(compose(L, M), L)};
    r.gcd_is_x = gcd_degree(L, M) == 1;

    const auto S = image(L);
    std::vector<Elt> mapped;
    mapped.reserve(S.size());
    bool inside = true;
    for (Elt y : S.elements()) {
        const Elt v = F.add(L(f(y)), r.N(y));
        inside = inside && S.contains(v);
        mapped.push_back(v);
    }
    std::sort(mapped.begin(), mapped.end());
    r.image_bijection = inside && std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end();
    r.is_pp = r.gcd_is_x && r.image_bijection;

    const Poly P = compose(f, L.to_poly()) + M.to_poly();
    r.brute_is_pp = P.is_constant() ? F.order() == 1 : !first_collision(P);
    return r;
}

InversePP inverse_pp(const Poly& P) {
    if (P.degree() < 1) throw PreconditionError("polynomial must have degree >= 1");
    if (auto w = first_collision(P)) {
        throw PreconditionError("not a permutation polynomial: inputs " + pair_text(w->first, w->second) +
                                " collide");
    }
    const auto& field = P.field();
    const auto& F = P.F();
    const auto D = maximal_decomposition(P);
    const Subspace& U = D.kernel_V;

    LinearizedPoly L0 = vanishing_poly(subspace_image(D.M, U));
    std::vector<std::pair<Elt, Elt>> lin_pairs;
    for (Elt u : U.basis()) lin_pairs.emplace_back(D.M(u), u);
    LinearizedPoly M0 = linearized_interpolate(field, lin_pairs, U.dim());

    std::vector<std::pair<Elt, Elt>> points;
    std::set<Elt> abscissae;
    for (Elt z : coset_reps(U).reps) {
        const Elt v = D.P(z);
        const Elt a = L0(v);
        if (!abscissae.insert(a).second) {
            throw InvariantViolation("interpolation abscissae collide for a permutation",
                                     "P = " + to_string(P) + ", representative " + std::to_string(z.code));
        }
        points.emplace_back(a, F.sub(z, M0(v)));
    }
    Poly f0 = lagrange_interpolate(field, points);
    Poly P0 = compose(f0, L0.to_poly()) + M0.to_poly();

    const auto forward = value_table(D.P);
    const auto backward = value_table(P0);
    for (std::uint32_t y = 0; y < F.order(); ++y) {
        if (backward[forward[y].code].code != y) {
            throw InvariantViolation("constructed inverse fails P0(P(y)) = y",
                                     "P = " + to_string(P) + ", P0 = " + to_string(P0) + ", y = " +
                                         std::to_string(y));
        }
    }
    return {std::move(P0), std::move(f0), std::move(L0), std::move(M0)};
}

CycleStructure cycle_structure(const Poly& P) {
    const auto table = value_table(P);
    const std::uint32_t q = P.F().order();
    if (!is_bijection(table, q)) throw PreconditionError("not a permutation polynomial");
    CycleStructure cs;
    std::vector<bool> seen(q, false);
    for (std::uint32_t start = 0; start < q; ++start) {
        if (seen[start]) continue;
        std::uint64_t len = 0;
        for (std::uint32_t y = start; !seen[y]; y = table[y].code) {
            seen[y] = true;
            ++len;
        }
        ++cs[len];
    }
    return cs;
}

TranslationPP translation_pp(const LinearizedPoly& L, const Poly& f) {
    require_same(L.field(), f.field());
    if (!is_subspace_poly(L)) throw PreconditionError("L must be a monic p-linearized divisor of x^q - x");
    const auto& F = f.F();
    std::uint64_t t = 0;
    for (Elt s : image(L).elements()) {
        const Elt fs = f(s);
        if (L(fs).code != 0) {
            throw PreconditionError("hypothesis L(f(L(y))) = 0 fails at L(y) = " + std::to_string(s.code));
        }
        if (fs.code == 0) ++t;
    }
    TranslationPP r{compose(f, L.to_poly()) + Poly::x(f.field()), {}, t};
    const std::uint64_t fixed = t * L.degree();
    if (fixed) r.predicted[1] = fixed;
    if (fixed < F.order()) r.predicted[F.characteristic()] = (F.order() - fixed) / F.characteristic();
    return r;
}

PrescribedCycles construct_prescribed_cycles(const FieldPtr& field, std::uint64_t s) {
    const auto& F = *field;
    const std::uint32_t p = F.characteristic();
    if (s % p != 0) throw PreconditionError("the number of fixed points must be divisible by p");
    if (s > F.order()) throw PreconditionError("the number of fixed points cannot exceed q");

    LinearizedPoly L = LinearizedPoly::identity(field);
    Poly f(field);
    if (s == 0) {
        // f = 1 has no roots and L(1) = 0 for L = x^p - x.
        std::vector<Elt> c{F.neg(F.one()), F.one()};
        L = LinearizedPoly(field, std::move(c));
        f = Poly::constant(field, F.one());
    } else if (s < F.order()) {
        unsigned j = 0;
        std::uint64_t u = s;
        while (u % p == 0) {
            u /= p;
            ++j;
        }
        Subspace V(field);
        for (std::uint32_t code = 1; V.dim() < j; ++code) {
            if (!V.contains(Elt{code})) V = V.with(Elt{code});
        }
        L = vanishing_poly(V);
        const Elt v = V.basis().front();
        std::vector<std::pair<Elt, Elt>> points;
        for (Elt a : image(L).elements()) points.emplace_back(a, points.size() < u ? Elt{0} : v);
        f = lagrange_interpolate(field, points);
    }

    auto tp = translation_pp(L, f);
    auto measured = cycle_structure(tp.P);
    CycleStructure wanted;
    if (s) wanted[1] = s;
    if (s < F.order()) wanted[p] = (F.order() - s) / p;
    if (measured != tp.predicted || measured != wanted) {
        throw InvariantViolation("constructed permutation has the wrong cycle structure",
                                 "P = " + to_string(tp.P) + " over " + F.spec() + ", s = " + std::to_string(s));
    }
    return {std::move(tp.P), std::move(L), std::move(f), std::move(measured)};
}

InvolutionReport is_involution(const Poly& P, InvolutionMethod method) {
    if (P.degree() < 1) throw PreconditionError("polynomial must have degree >= 1");
    InvolutionReport r;
    if (method == InvolutionMethod::Brute) {
        const auto table = value_table(P);
        r.is_involution = true;
        for (std::uint32_t y = 0; y < table.size() && r.is_involution; ++y) {
            r.is_involution = table[table[y].code].code == y;
        }
        r.m_condition = r.reps_condition = r.is_involution;
        return r;
    }
    const auto D = maximal_decomposition(P);
    const Subspace& U = D.kernel_V;
    r.m_condition = subspace_image(D.M, U) == U;
    if (r.m_condition) {
        for (Elt u : U.elements()) {
            if (D.M(D.M(u)) != u) {
                r.m_condition = false;
                break;
            }
        }
    }
    r.reps_condition = true;
    for (Elt z : coset_reps(U).reps) {
        if (D.P(D.P(z)) != z) {
            r.reps_condition = false;
            break;
        }
    }
    r.is_involution = r.m_condition && r.reps_condition;
    return r;
}

TranslatorCheck is_linear_translator(const TranslatorSpec& spec) {
    require_same(spec.g.field(), spec.U.field());
    require_same(spec.g.field(), spec.M.field());
    const auto& F = spec.g.F();
    TranslatorCheck r;
    const auto gt = value_table(spec.g);

    // The identity for a basis of U implies it for all of U, by induction on u + v.
    r.identity_holds = true;
    for (std::uint32_t x = 0; x < F.order() && r.identity_holds; ++x) {
        for (Elt u : spec.U.basis()) {
            if (gt[F.add(Elt{x}, u).code] != F.add(gt[x], spec.M(u))) {
                r.identity_holds = false;
                r.violation = std::make_pair(Elt{x}, u);
                break;
            }
        }
    }

    r.m_form_holds = true;
    if (spec.kind != TranslatorKind::General) {
        if (spec.gamma.code == 0) throw PreconditionError("gamma must be nonzero");
        const std::uint64_t e = spec.kind == TranslatorKind::BLinear ? 1 : ipow(F.characteristic(), spec.frobenius_i);
        const Elt scale = F.mul(F.inv(F.pow(spec.gamma, e)), spec.b);
        for (Elt u : spec.U.basis()) {
            if (spec.M(u) != F.mul(scale, F.pow(u, e))) r.m_form_holds = false;
        }
    }

    std::vector<bool> hit(F.order(), false);
    std::uint64_t distinct = 0;
    r.maps_into_U = true;
    for (Elt v : gt) {
        if (!spec.U.contains(v)) r.maps_into_U = false;
        if (!hit[v.code]) {
            hit[v.code] = true;
            ++distinct;
        }
    }
    r.onto_U = r.maps_into_U && distinct == spec.U.size();
    return r;
}

TranslatorReport translator_pp(const TranslatorSpec& spec, const Poly& h) {
    require_same(spec.g.field(), h.field());
    const auto chk = is_linear_translator(spec);
    if (!chk.identity_holds) {
        throw PreconditionError("g is not an (M, U)-linear translator; fails at (x, u) = " +
                                pair_text(chk.violation->first, chk.violation->second));
    }
    if (!chk.m_form_holds) throw PreconditionError("M does not have the form required by the translator kind");
    if (!chk.onto_U) throw PreconditionError("g must map F_q onto U");
    const auto& F = h.F();
    const auto elems = spec.U.elements();
    std::vector<Elt> small;
    small.reserve(elems.size());
    bool inside = true;
    for (Elt u : elems) {
        const Elt hu = h(u);
        if (!spec.U.contains(hu)) throw PreconditionError("h must map U into U");
        const Elt v = F.add(u, spec.M(hu));
        inside = inside && spec.U.contains(v);
        small.push_back(v);
    }
    std::sort(small.begin(), small.end());
    TranslatorReport r;
    r.small_side = inside && std::adjacent_find(small.begin(), small.end()) == small.end();

    const auto gt = value_table(spec.g);
    std::vector<Elt> full(F.order()), twice(F.order());
    for (std::uint32_t x = 0; x < F.order(); ++x) {
        const Elt hg = h(gt[x]);
        full[x] = F.add(Elt{x}, hg);
        twice[x] = F.add(full[x], Elt{x});
    }
    r.is_pp = is_bijection(full, F.order());
    r.is_complete = r.is_pp && is_bijection(twice, F.order());
    return r;
}

AGWResult agw_check(std::span<const std::uint32_t> f, std::span<const std::uint32_t> lambda,
                    std::span<const std::uint32_t> lambda_bar, std::span<const std::uint32_t> f_bar,
                    std::size_t s_size) {
    const std::size_t a_size = f.size();
    if (lambda.size() != a_size || lambda_bar.size() != a_size || f_bar.size() != s_size) {
        throw PreconditionError("map tables have inconsistent sizes");
    }
    auto surjective = [&](std::span<const std::uint32_t> m, std::size_t target) {
        std::vector<bool> hit(target, false);
        for (auto v : m) {
            if (v >= target) return false;
            hit[v] = true;
        }
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    };
    for (auto v : f) {
        if (v >= a_size) throw PreconditionError("f must map A into A");
    }
    if (!surjective(lambda, s_size) || !surjective(lambda_bar, s_size)) {
        throw PreconditionError("lambda and lambda_bar must be surjective");
    }
    for (std::size_t a = 0; a < a_size; ++a) {
        if (f_bar[lambda[a]] >= s_size) throw PreconditionError("f_bar must map S into S_bar");
        if (lambda_bar[f[a]] != f_bar[lambda[a]]) {
            throw PreconditionError("diagram does not commute at a = " + std::to_string(a));
        }
    }

    AGWResult r;
    std::vector<bool> hit(a_size, false);
    r.bijective = true;
    for (auto v : f) {
        if (hit[v]) r.bijective = false;
        hit[v] = true;
    }
    const bool fbar_bijective = surjective(f_bar, s_size);
    bool fibers_injective = true;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;  // (fiber, image)
    for (std::size_t a = 0; a < a_size && fibers_injective; ++a) {
        fibers_injective = seen.emplace(lambda[a], f[a]).second;
    }
    r.reduced_side = fbar_bijective && fibers_injective;
    return r;
}

}  // namespace addix
