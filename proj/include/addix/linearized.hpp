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

#ifndef ADDIX_LINEARIZED_HPP
#define ADDIX_LINEARIZED_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "addix/field.hpp"
#include "addix/poly.hpp"

namespace addix {

/// sum_i a_i x^(p^i), stored as [a_0, ..., a_m] without trailing zeros.
class LinearizedPoly {
   public:
    explicit LinearizedPoly(FieldPtr field);
    LinearizedPoly(FieldPtr field, std::vector<Elt> lin_coeffs);

    /// x
    static LinearizedPoly identity(FieldPtr field);
    /// x^q - x
    static LinearizedPoly field_poly(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// m such that the degree is p^m; -1 for the zero polynomial.
    int p_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// p^m, or 0 for the zero polynomial.
    std::uint64_t degree() const noexcept;
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

    Elt operator()(Elt y) const noexcept;
    Poly to_poly() const;

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) noexcept {
        return a.coeffs_ == b.coeffs_ && same_field(a.field_, b.field_);
    }

   private:
    FieldPtr field_;
    std::vector<Elt> coeffs_;
};

/// The linearized view of P, when every monomial has a p-power exponent.
std::optional<LinearizedPoly> is_linearized(const Poly& P);

/// outer(inner(x)), computed on p-power coefficients.
LinearizedPoly compose(const LinearizedPoly& outer, const LinearizedPoly& inner);

/// Monic, p-linearized, divides x^q - x.
bool is_subspace_poly(const LinearizedPoly& L);

namespace detail {

/// Row-reduced echelon basis of an F_p-subspace of F_p^n. Rows are kept fully
/// reduced so reduce() returns a canonical representative of each coset.
class FpEchelon {
   public:
    FpEchelon() = default;
    FpEchelon(std::uint32_t p, unsigned n) : p_(p), n_(n) {}

    /// Adds v to the span; false if v was already in it.
    bool insert(std::vector<std::uint32_t> v);
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;
    std::size_t rank() const noexcept { return rows_.size(); }
    /// Rows sorted by pivot column.
    const std::vector<std::vector<std::uint32_t>>& rows() const noexcept { return rows_; }

   private:
    std::uint32_t p_ = 2;
    unsigned n_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<unsigned> pivots_;
};

}  // namespace detail

/// An F_p-subspace of F_q given by an independent basis.
class Subspace {
   public:
    /// The zero space.
    explicit Subspace(FieldPtr field);

    /// Span of arbitrary generators; the basis keeps the independent ones in order.
    static Subspace span(FieldPtr field, std::span<const Elt> generators);
    /// Throws PreconditionError if the vectors are dependent.
    static Subspace from_basis(FieldPtr field, std::span<const Elt> basis);
    static Subspace full(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elt>& basis() const noexcept { return basis_; }
    unsigned dim() const noexcept { return static_cast<unsigned>(basis_.size()); }
    std::uint64_t size() const noexcept;

    bool contains(Elt a) const;
    /// Canonical representative of a + U (independent of the chosen basis).
    Elt reduce(Elt a) const;
    /// The p^dim elements, ascending by code.
    std::vector<Elt> elements() const;
    /// The subspace spanned by this one and v.
    Subspace with(Elt v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept;

   private:
    bool try_insert(Elt v);

    FieldPtr field_;
    std::vector<Elt> basis_;
    detail::FpEchelon echelon_;
};

/// All F_p-combinations of the vectors, ascending by code.
std::vector<Elt> span_elements(const Field& F, std::span<const Elt> basis);

/// F_q = union of (reps[i] + subspace); reps[0] = 0.
struct CosetDecomposition {
    Subspace subspace;
    Subspace complement;
    std::vector<Elt> reps;
};

/// Roots of L in F_q, by exhaustive evaluation.
Subspace kernel(const LinearizedPoly& L);

/// prod_{v in U} (x - v), built incrementally: V_{j+1} = V_j^p - V_j(b)^(p-1) V_j.
LinearizedPoly vanishing_poly(const Subspace& U);

/// Digits [Q_0, ..., Q_e] with P = sum Q_i L^i and deg Q_i < deg L.
std::vector<Poly> basis_L_expansion(const Poly& P, const LinearizedPoly& L);

/// N with N(L(x)) = M(x). L separable; L | M; M p-linearized.
LinearizedPoly linearized_quotient(const Poly& M, const LinearizedPoly& L);
LinearizedPoly linearized_quotient(const LinearizedPoly& M, const LinearizedPoly& L);

/// L~ with L~(L(x)) = x^q - x, for a subspace polynomial L.
LinearizedPoly complement(const LinearizedPoly& L);

/// Unique sum_{i < bound} c_i x^(p^i) with M0(u_j) = w_j. The u_j must be independent over F_p.
LinearizedPoly linearized_interpolate(const FieldPtr& field, std::span<const std::pair<Elt, Elt>> pairs,
                                      unsigned bound);

/// Greedy complement (smallest codes first) and its span as coset representatives.
CosetDecomposition coset_reps(const Subspace& U);

/// M(U).
Subspace subspace_image(const LinearizedPoly& M, const Subspace& U);

/// Image L(F_q) as a subspace.
Subspace image(const LinearizedPoly& L);

}  // namespace addix

#endif
