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

#ifndef ADDIX_ANALYSIS_HPP
#define ADDIX_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "addix/additive_index.hpp"
#include "addix/linearized.hpp"
#include "addix/poly.hpp"

namespace addix {

/// P(y) for every y, indexed by the code of y.
std::vector<Elt> value_table(const Poly& P);

/// First pair a < b (by code of b, then a) with P(a) = P(b), scanning codes upward.
std::optional<std::pair<Elt, Elt>> first_collision(const Poly& P);

/// Monic gcd(L, M) degree; gcd(L, 0) = L.
std::uint64_t gcd_degree(const LinearizedPoly& L, const LinearizedPoly& M);

// ---------------------------------------------------------------------------
// Value sets

enum class ValueSetMethod { Theorem, Brute };

struct ValueSetResult {
    std::uint64_t size = 0;
    /// Distinct cosets of M(U) hit by the coset representatives; theorem method only.
    std::optional<std::uint64_t> cosets;
};

ValueSetResult value_set_size(const Poly& P, ValueSetMethod method = ValueSetMethod::Theorem);

struct ValueSetThreshold {
    std::uint64_t value_set_size = 0;
    int index_k = 0;
    std::uint64_t gcd_LM_degree = 0;
    bool is_pp = false;
    /// q - deg(L) = p^n - p^(n-k).
    std::uint64_t threshold = 0;
    /// Not (gcd(L, M) = x and P not a PP) or |V_P| <= threshold.
    bool implication_holds = true;
    int degree = 0;
    std::uint64_t multiplicative_index = 0;
    /// q - (q - 1)/d.
    double wan_bound = 0;
    /// q - (q - 1)/l.
    double mww_bound = 0;
};

ValueSetThreshold value_set_pp_threshold(const Poly& P);

// ---------------------------------------------------------------------------
// Permutation tests

enum class PPMethod { Certificate, Brute };

struct PPCertificate {
    bool is_pp = false;
    std::uint64_t gcd_LM_degree = 0;
    /// The map F_q/U -> F_q/M(U) induced by P is a bijection.
    bool quotient_bijection = false;
    /// Distinct a, b with P(a) = P(b), when P is not a permutation.
    std::optional<std::pair<Elt, Elt>> witness;
};

PPCertificate is_permutation(const Poly& P, PPMethod method = PPMethod::Certificate);

struct QuotientCriterion {
    LinearizedPoly N;  ///< N(L(x)) = L(M(x))
    bool gcd_is_x = false;
    /// y -> L(f(y)) + N(y) permutes L(F_q).
    bool image_bijection = false;
    bool is_pp = false;
    bool brute_is_pp = false;
};

/// Permutation test for f(L(x)) + M(x) through the induced map on L(F_q).
/// Throws PreconditionError unless L is a subspace polynomial dividing L(M(x)).
QuotientCriterion pp_criterion_quotient(const Poly& f, const LinearizedPoly& L, const LinearizedPoly& M);

struct InversePP {
    Poly P0;
    Poly f0;
    LinearizedPoly L0;
    LinearizedPoly M0;
};

/// Compositional inverse built from the maximal decomposition of a permutation polynomial.
InversePP inverse_pp(const Poly& P);

// ---------------------------------------------------------------------------
// Cycles

/// cycle length -> number of cycles.
using CycleStructure = std::map<std::uint64_t, std::uint64_t>;

CycleStructure cycle_structure(const Poly& P);

struct TranslationPP {
    Poly P;
    CycleStructure predicted;
    /// Distinct roots of f in L(F_q).
    std::uint64_t t = 0;
};

/// P = f(L(x)) + x under the hypothesis L(f(L(y))) = 0 on F_q.
TranslationPP translation_pp(const LinearizedPoly& L, const Poly& f);

struct PrescribedCycles {
    Poly P;
    LinearizedPoly L;
    Poly f;
    CycleStructure structure;
};

/// A permutation with s fixed points and (q - s)/p cycles of length p; p must divide s.
PrescribedCycles construct_prescribed_cycles(const FieldPtr& field, std::uint64_t s);

// ---------------------------------------------------------------------------
// Involutions

enum class InvolutionMethod { Certificate, Brute };

struct InvolutionReport {
    bool is_involution = false;
    /// M(U) = U and M(M(u)) = u on U (certificate method).
    bool m_condition = false;
    /// P(P(z)) = z on the coset representatives (certificate method).
    bool reps_condition = false;
};

InvolutionReport is_involution(const Poly& P, InvolutionMethod method = InvolutionMethod::Certificate);

// ---------------------------------------------------------------------------
// Linear translators

enum class TranslatorKind { General, BLinear, Frobenius };

struct TranslatorSpec {
    Poly g;
    Subspace U;
    LinearizedPoly M;
    TranslatorKind kind = TranslatorKind::General;
    Elt gamma{1};
    Elt b{0};
    unsigned frobenius_i = 0;
};

struct TranslatorCheck {
    /// g(x + u) = g(x) + M(u) for all x in F_q, u in U.
    bool identity_holds = false;
    /// M agrees with the form implied by the kind on U.
    bool m_form_holds = false;
    bool maps_into_U = false;
    bool onto_U = false;
    /// First failing (x, u) of the identity.
    std::optional<std::pair<Elt, Elt>> violation;

    bool ok() const noexcept { return identity_holds && m_form_holds; }
};

TranslatorCheck is_linear_translator(const TranslatorSpec& spec);

struct TranslatorReport {
    /// u + M(h(u)) permutes U.
    bool small_side = false;
    /// x + h(g(x)) permutes F_q.
    bool is_pp = false;
    /// 2x + h(g(x)) permutes F_q.
    bool is_complete = false;

    bool equivalence_holds() const noexcept { return small_side == is_pp; }
    bool complete_claim_violated() const noexcept { return is_pp && !is_complete; }
};

/// Throws PreconditionError when g is not an (M, U)-linear translator onto U or h(U) is not in U.
TranslatorReport translator_pp(const TranslatorSpec& spec, const Poly& h);

// ---------------------------------------------------------------------------
// AGW criterion on finite tables

struct AGWResult {
    /// f permutes A.
    bool bijective = false;
    /// f_bar : S -> S_bar is a bijection and f is injective on every fiber of lambda.
    bool reduced_side = false;

    bool agree() const noexcept { return bijective == reduced_side; }
};

/// Maps are tables of indices: f, lambda, lambda_bar over A = [0, f.size()); f_bar over
/// S = [0, s_size) into S_bar = [0, s_size). Throws PreconditionError when the diagram
/// does not commute or a projection is not surjective.
AGWResult agw_check(std::span<const std::uint32_t> f, std::span<const std::uint32_t> lambda,
                    std::span<const std::uint32_t> lambda_bar, std::span<const std::uint32_t> f_bar,
                    std::size_t s_size);

}  // namespace addix

#endif
