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

#include "addix/additive_index.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "addix/error.hpp"
#include "addix/parallel.hpp"

namespace addix {

namespace {

Poly without_constant(const Poly& P) {
    return P - Poly::constant(P.field(), P.coeff(0));
}

void require_nonconstant(const Poly& P) {
    if (P.degree() < 1) throw PreconditionError("polynomial must have degree >= 1");
}

// Digits of P_0 in basis L must be [M, c_1, c_2, ...] with M linearized and c_i constants.
LDecomposition decompose_by_digits(const Poly& P, const LinearizedPoly& L) {
    const auto digits = basis_L_expansion(without_constant(P), L);
    std::vector<Elt> f(digits.size(), Elt{0});
    f[0] = P.coeff(0);
    for (std::size_t i = 1; i < digits.size(); ++i) {
        if (!digits[i].is_constant()) {
            throw InvariantViolation("basis-L digit Q_" + std::to_string(i) + " is not constant",
                                     "P = " + to_string(P) + ", L = " + to_string(L.to_poly()) +
                                         ", Q_" + std::to_string(i) + " = " + to_string(digits[i]));
        }
        f[i] = digits[i].coeff(0);
    }
    auto M = is_linearized(digits[0]);
    if (!M) {
        throw InvariantViolation("basis-L digit Q_0 is not p-linearized",
                                 "P = " + to_string(P) + ", L = " + to_string(L.to_poly()) +
                                     ", Q_0 = " + to_string(digits[0]));
    }
    return {Poly(P.field(), std::move(f)), std::move(*M)};
}

Subspace kernel_by_gcd(const Poly& P) {
    const auto& F = P.F();
    Poly g(P.field());
    for (const auto& Fi : shift_expand(P)) {
        if (!Fi.is_zero()) g = gcd(g, Fi);
    }
    if (g.is_zero()) return Subspace::full(P.field());
    const Poly G = gcd_with_field_poly(g);
    auto lin = is_linearized(G);
    if (!lin) {
        throw InvariantViolation("gcd of the shift expansion with x^q - x is not p-linearized",
                                 "P = " + to_string(P) + ", gcd = " + to_string(G));
    }
    Subspace V = kernel(*lin);
    if (V.size() != static_cast<std::uint64_t>(G.degree())) {
        throw InvariantViolation("gcd with x^q - x does not split into distinct roots",
                                 "P = " + to_string(P) + ", gcd = " + to_string(G) + " over " + F.spec());
    }
    return V;
}

Subspace kernel_by_brute_force(const Poly& P) {
    const auto& F = P.F();
    const Poly P0 = without_constant(P);
    const Poly X = Poly::x(P.field());
    std::vector<Elt> members;
    std::mutex m;
    parallel_blocks(F.order(), 256, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<Elt> local;
        for (std::size_t c = begin; c < end; ++c) {
            const Elt y{static_cast<std::uint32_t>(c)};
            const Poly shifted = compose(P0, X + Poly::constant(P.field(), y));
            if ((shifted - P0 - Poly::constant(P.field(), P0(y))).is_zero()) local.push_back(y);
        }
        std::lock_guard<std::mutex> lock(m);
        members.insert(members.end(), local.begin(), local.end());
    });
    std::sort(members.begin(), members.end());
    Subspace V = Subspace::span(P.field(), members);
    if (V.size() != members.size()) {
        throw InvariantViolation("the additive kernel is not closed under addition", "P = " + to_string(P));
    }
    return V;
}

}  // namespace

Poly AdditiveDecomposition::recompose() const { return compose(f, L.to_poly()) + M.to_poly(); }

Poly index_input(const Poly& P) { return reduce_mod_field_poly(P); }

Subspace additive_kernel(const Poly& P, KernelMethod method) {
    require_nonconstant(P);
    const Poly R = index_input(P);
    if (R.degree() < 1) return Subspace::full(P.field());
    return method == KernelMethod::Gcd ? kernel_by_gcd(R) : kernel_by_brute_force(R);
}

int additive_index(const Poly& P) {
    return static_cast<int>(P.F().degree()) - static_cast<int>(additive_kernel(P).dim());
}

AdditiveDecomposition maximal_decomposition(const Poly& P) {
    require_nonconstant(P);
    const Poly R = index_input(P);
    Subspace V = additive_kernel(P, KernelMethod::Gcd);
    LinearizedPoly L = vanishing_poly(V);
    auto [f, M] = decompose_by_digits(R, L);
    const int k = static_cast<int>(P.F().degree() - V.dim());
    return AdditiveDecomposition{R, std::move(f), std::move(L), std::move(M), k, std::move(V), R.degree() != P.degree()};
}

DecomposeWithResult decompose_with(const Poly& P, const LinearizedPoly& L) {
    if (!same_field(P.field(), L.field())) throw PreconditionError("operands over different fields");
    if (!is_subspace_poly(L)) throw PreconditionError("L must be a monic p-linearized divisor of x^q - x");
    require_nonconstant(P);
    const Poly R = index_input(P);
    const LinearizedPoly maximal = vanishing_poly(additive_kernel(P));
    Poly rem = maximal.to_poly() % L.to_poly();
    if (!rem.is_zero()) return {std::nullopt, std::move(rem)};
    return {decompose_by_digits(R, L), std::move(rem)};
}

std::uint64_t multiplicative_index(const Poly& P) {
    require_nonconstant(P);
    std::vector<std::uint64_t> support;
    for (std::size_t e = 1; e < P.coeffs().size(); ++e) {
        if (P.coeff(e).code) support.push_back(e);
    }
    if (support.size() == 1) return 1;
    const std::uint64_t q1 = P.F().order() - 1;
    const std::uint64_t r = support.front();
    std::uint64_t s = q1;
    for (auto e : support) s = std::gcd(s, e - r);
    return q1 / s;
}

}  // namespace addix
