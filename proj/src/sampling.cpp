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

#include "addix/sampling.hpp"

#include <algorithm>
#include <set>

#include "addix/error.hpp"

namespace addix {

Elt random_elt(const Field& F, Rng& rng) {
    return Elt{static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, F.order() - 1)(rng))};
}

Elt random_nonzero(const Field& F, Rng& rng) {
    return Elt{static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(1, F.order() - 1)(rng))};
}

Poly random_poly(const FieldPtr& field, int max_degree, Rng& rng) {
    if (max_degree < 1) throw PreconditionError("max_degree must be at least 1");
    for (;;) {
        std::vector<Elt> c(static_cast<std::size_t>(max_degree) + 1);
        for (auto& x : c) x = random_elt(*field, rng);
        Poly P(field, std::move(c));
        if (P.degree() >= 1) return P;
    }
}

Subspace random_subspace(const FieldPtr& field, unsigned dim, Rng& rng) {
    if (dim > field->degree()) throw PreconditionError("dimension exceeds the field degree");
    Subspace U(field);
    while (U.dim() < dim) {
        const Elt v = random_nonzero(*field, rng);
        if (!U.contains(v)) U = U.with(v);
    }
    return U;
}

LinearizedPoly random_linearized(const FieldPtr& field, unsigned terms, Rng& rng) {
    std::vector<Elt> c(terms);
    for (auto& x : c) x = random_elt(*field, rng);
    return LinearizedPoly(field, std::move(c));
}

std::vector<Subspace> all_subspaces(const FieldPtr& field) {
    std::vector<Subspace> out{Subspace(field)};
    std::set<std::vector<Elt>> seen{{Elt{0}}};
    for (std::size_t level_begin = 0; level_begin < out.size();) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::uint32_t code = 1; code < field->order(); ++code) {
                if (out[i].contains(Elt{code})) continue;
                Subspace next = out[i].with(Elt{code});
                if (seen.insert(next.elements()).second) out.push_back(std::move(next));
            }
        }
        level_begin = level_end;
    }
    return out;
}

DecomposableSample random_decomposable(const FieldPtr& field, unsigned dim, int f_degree, Rng& rng) {
    const Subspace U = random_subspace(field, dim, rng);
    LinearizedPoly L = vanishing_poly(U);
    LinearizedPoly M = random_linearized(field, dim, rng);
    Poly f = f_degree >= 1 ? random_poly(field, f_degree, rng) : Poly::constant(field, random_elt(*field, rng));
    Poly P = compose(f, L.to_poly()) + M.to_poly();
    if (P.degree() < 1) P += Poly::x(field);
    return {std::move(P), std::move(f), std::move(L), std::move(M)};
}

DecomposableSample random_decomposable_pp(const FieldPtr& field, unsigned dim, Rng& rng) {
    const auto& F = *field;
    const Subspace U = random_subspace(field, dim, rng);
    LinearizedPoly L = vanishing_poly(U);
    LinearizedPoly M(field);
    Subspace W(field);
    do {
        M = random_linearized(field, dim, rng);
        W = subspace_image(M, U);
    } while (W.dim() != dim);

    const auto from = coset_reps(U).reps;
    auto to = coset_reps(W).reps;
    std::shuffle(to.begin(), to.end(), rng);
    const auto W_elems = W.elements();
    std::uniform_int_distribution<std::size_t> pick(0, W_elems.size() - 1);

    std::vector<std::pair<Elt, Elt>> points;
    for (std::size_t i = 0; i < from.size(); ++i) {
        const Elt target = F.add(to[i], W_elems[pick(rng)]);
        points.emplace_back(L(from[i]), F.sub(target, M(from[i])));
    }
    Poly f = lagrange_interpolate(field, points);
    Poly P = compose(f, L.to_poly()) + M.to_poly();
    return {std::move(P), std::move(f), std::move(L), std::move(M)};
}

TranslatorSample random_translator(const FieldPtr& field, unsigned dim, Rng& rng) {
    const auto& F = *field;
    const unsigned n = F.degree();
    const Subspace U = random_subspace(field, dim, rng);
    const auto U_elems = U.elements();
    std::uniform_int_distribution<std::size_t> pick(0, U_elems.size() - 1);
    const LinearizedPoly T = vanishing_poly(U);
    const auto T_image = image(T).elements();

    for (;;) {
        std::vector<std::pair<Elt, Elt>> lin;
        std::vector<Elt> targets;
        for (unsigned i = 0; i < n; ++i) {
            targets.push_back(U_elems[pick(rng)]);
            lin.emplace_back(Elt{static_cast<std::uint32_t>(ipow(F.characteristic(), i))}, targets.back());
        }
        if (Subspace::span(field, targets).dim() != dim) continue;
        LinearizedPoly G = linearized_interpolate(field, lin, n);

        std::vector<std::pair<Elt, Elt>> pts;
        for (Elt t : T_image) pts.emplace_back(t, U_elems[pick(rng)]);
        const Poly c = lagrange_interpolate(field, pts);
        Poly g = reduce_mod_field_poly(G.to_poly() + compose(c, T.to_poly()));
        if (g.degree() < 1) continue;

        TranslatorSpec spec{g, U, G, TranslatorKind::General, F.one(), Elt{0}, 0};
        if (!is_linear_translator(spec).onto_U) continue;

        std::vector<std::pair<Elt, Elt>> hp;
        for (Elt u : U_elems) hp.emplace_back(u, U_elems[pick(rng)]);
        Poly h = lagrange_interpolate(field, hp);
        return {std::move(spec), std::move(h)};
    }
}

std::vector<NilpotentPair> nilpotent_pairs(const FieldPtr& field) {
    const auto& F = *field;
    if (F.degree() % 2) throw PreconditionError("field degree must be even");
    const std::uint64_t pm = ipow(F.characteristic(), F.degree() / 2);
    std::vector<Elt> alphas, betas;
    for (Elt y : F.elements()) {
        if (!y.code) continue;
        if (F.add(F.pow(y, pm), y).code == 0) alphas.push_back(y);
        if (F.pow(y, pm + 1) == F.one()) betas.push_back(y);
    }
    std::vector<NilpotentPair> out;
    const unsigned m = F.degree() / 2;
    for (Elt a : alphas) {
        for (Elt b : betas) {
            std::vector<Elt> c(m + 1, Elt{0});
            c[0] = a;
            c[m] = F.mul(a, b);
            out.push_back({a, b, LinearizedPoly(field, std::move(c))});
        }
    }
    return out;
}

Poly nilpotent_pp(const LinearizedPoly& L, const Poly& f) {
    const Poly Lp = L.to_poly();
    const Poly inner = reduce_mod_field_poly(compose(f, Lp));
    return reduce_mod_field_poly(compose(Lp, inner)) + Poly::x(f.field());
}

}  // namespace addix
