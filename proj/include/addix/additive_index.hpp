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

#ifndef ADDIX_ADDITIVE_INDEX_HPP
#define ADDIX_ADDITIVE_INDEX_HPP

#include <cstdint>
#include <optional>

#include "addix/linearized.hpp"
#include "addix/poly.hpp"

namespace addix {

enum class KernelMethod {
    Gcd,    ///< gcd(F_1, ..., F_{d-1}, x^q - x) from the shift expansion
    Brute,  ///< test P_0(x + y) = P_0(x) + P_0(y) coefficient-wise for every y
};

/**
 * P = f(L(x)) + M(x) with L the maximal subspace polynomial for P.
 *
 * f carries the constant P(0); M is strictly p-linearized with deg M < deg L.
 * When the input had degree >= q it is replaced by its remainder modulo x^q - x
 * (same map on F_q) and `reduced` is set; the identity then holds for that remainder.
 */
struct AdditiveDecomposition {
    Poly P;
    Poly f;
    LinearizedPoly L;
    LinearizedPoly M;
    int index_k = 0;
    Subspace kernel_V;
    bool reduced = false;

    /// f(L(x)) + M(x).
    Poly recompose() const;
};

/// Remainder mod x^q - x when deg P >= q, P otherwise.
Poly index_input(const Poly& P);

/// The set V(P, q) of y with P_0(x + y) - P_0(x) - P_0(y) = 0 in F_q[x].
Subspace additive_kernel(const Poly& P, KernelMethod method = KernelMethod::Gcd);

/// k with deg(L) = p^(n - k).
int additive_index(const Poly& P);

AdditiveDecomposition maximal_decomposition(const Poly& P);

struct LDecomposition {
    Poly f;
    LinearizedPoly M;
};

struct DecomposeWithResult {
    std::optional<LDecomposition> decomposition;
    /// Remainder of the maximal subspace polynomial modulo L; zero iff decomposable.
    Poly remainder;
};

/// The L-decomposition of P, present iff L divides the maximal subspace polynomial.
DecomposeWithResult decompose_with(const Poly& P, const LinearizedPoly& L);

/// (q - 1)/s for P - P(0) = a x^r f(x^s); 1 when P - P(0) is a monomial.
std::uint64_t multiplicative_index(const Poly& P);

}  // namespace addix

#endif
