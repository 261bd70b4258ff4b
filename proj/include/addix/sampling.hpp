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

#ifndef ADDIX_SAMPLING_HPP
#define ADDIX_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "addix/analysis.hpp"
#include "addix/linearized.hpp"
#include "addix/poly.hpp"

namespace addix {

using Rng = std::mt19937_64;

Elt random_elt(const Field& F, Rng& rng);
Elt random_nonzero(const Field& F, Rng& rng);

/// Uniform coefficients up to max_degree, resampled until the degree is at least 1.
Poly random_poly(const FieldPtr& field, int max_degree, Rng& rng);

/// Random F_p-subspace of the given dimension.
Subspace random_subspace(const FieldPtr& field, unsigned dim, Rng& rng);

/// sum_{i < terms} c_i x^(p^i) with uniform c_i.
LinearizedPoly random_linearized(const FieldPtr& field, unsigned terms, Rng& rng);

/// Every F_p-subspace of F_q, ordered by dimension. Intended for small q.
std::vector<Subspace> all_subspaces(const FieldPtr& field);

struct DecomposableSample {
    Poly P;
    Poly f;
    LinearizedPoly L;
    LinearizedPoly M;
};

/// f(L(x)) + M(x) with L the vanishing polynomial of a random subspace of dimension dim,
/// deg M < deg L and deg f <= f_degree.
DecomposableSample random_decomposable(const FieldPtr& field, unsigned dim, int f_degree, Rng& rng);

/// A permutation polynomial f(L(x)) + M(x): M is injective on U = ker L and f is interpolated
/// so that cosets of U map bijectively onto cosets of M(U).
DecomposableSample random_decomposable_pp(const FieldPtr& field, unsigned dim, Rng& rng);

struct TranslatorSample {
    TranslatorSpec spec;
    Poly h;
};

/// g = G(x) + c(T(x)) with G linear onto U, T the vanishing polynomial of U and c valued in U;
/// M = G and h maps U into U.
TranslatorSample random_translator(const FieldPtr& field, unsigned dim, Rng& rng);

/// L = a b x^(p^m) + a x with a^(p^m) + a = 0 and b^(p^m + 1) = 1 over F_{p^(2m)}.
struct NilpotentPair {
    Elt alpha;
    Elt beta;
    LinearizedPoly L;
};

/// All admissible (alpha, beta) for a field of even degree 2m.
std::vector<NilpotentPair> nilpotent_pairs(const FieldPtr& field);

/// L(f(L(x))) + x reduced modulo x^q - x.
Poly nilpotent_pp(const LinearizedPoly& L, const Poly& f);

}  // namespace addix

#endif
