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

#ifndef ADDIX_POLY_HPP
#define ADDIX_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "addix/field.hpp"

namespace addix {

/**
 * Dense univariate polynomial over a Field, constant term first.
 *
 * The coefficient vector never has trailing zeros, so the zero polynomial is the
 * empty vector and degree() reports -1 for it. Arithmetic between polynomials over
 * different fields throws PreconditionError.
 */
class Poly {
   public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<Elt> coeffs);

    static Poly constant(FieldPtr field, Elt c);
    static Poly monomial(FieldPtr field, Elt c, std::size_t degree);
    static Poly x(FieldPtr field);
    /// x^q - x.
    static Poly field_poly(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const Field& F() const noexcept { return *field_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == F().one(); }
    Elt coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elt{0}; }
    Elt leading() const noexcept { return coeffs_.empty() ? Elt{0} : coeffs_.back(); }
    const std::vector<Elt>& coeffs() const noexcept { return coeffs_; }

    Elt operator()(Elt y) const noexcept;
    Poly monic() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(Elt c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, Elt c) { return a *= c; }
    friend Poly operator*(Elt c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.coeffs_ == b.coeffs_ && same_field(a.field_, b.field_);
    }

   private:
    void trim() noexcept;
    void require_same_field(const Poly& other) const;

    FieldPtr field_;
    std::vector<Elt> coeffs_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

DivRem divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic generator of the ideal (a, b); gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// a(b(x)).
Poly compose(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Poly pow(const Poly& a, std::uint64_t e);
/// base^e mod m, m nonzero.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// gcd(a, x^q - x) computed as gcd(a, (x^q mod a) - x) without materializing x^q - x.
Poly gcd_with_field_poly(const Poly& a);
/// True when a divides x^q - x.
bool divides_field_poly(const Poly& a);
/// Remainder modulo x^q - x: preserves the induced map on F_q.
Poly reduce_mod_field_poly(const Poly& a);

/// Binomial coefficient C(n, k) mod p via Lucas' theorem.
class BinomialModP {
   public:
    explicit BinomialModP(std::uint32_t p);
    std::uint32_t operator()(std::uint64_t n, std::uint64_t k) const noexcept;

   private:
    std::uint32_t small(std::uint32_t n, std::uint32_t k) const noexcept;
    std::uint32_t p_;
    std::vector<std::uint32_t> fact_, inv_fact_;
};

/**
 * For P of degree d >= 1 with P_0 = P - P(0), returns [F_1, ..., F_{d-1}] with
 *   P_0(x + y) - P_0(x) - P_0(y) = sum_i F_i(y) x^i.
 * F_i(y) = sum_{j > i} c_j C(j, i) y^(j - i). Constant input yields an empty vector.
 */
std::vector<Poly> shift_expand(const Poly& P);

/// Unique polynomial of degree < #points through the given points. Abscissae must be distinct.
Poly lagrange_interpolate(const FieldPtr& field, std::span<const std::pair<Elt, Elt>> points);

/**
 * Parses "3*x^5 - x + [7]*x^2 + 1" style text. Integers denote prime-field elements,
 * bracketed integers denote element codes, `g` the field's primitive element.
 * Supports + - * ^, parentheses and juxtaposition ("2x", "x(x+1)").
 */
Poly parse_poly(const FieldPtr& field, std::string_view text);

/// Text form accepted by parse_poly: "x^3-x", "[5]*x^2+2", "0".
std::string to_string(const Poly& p);
/// Coefficient text used by to_string: signed integer for the prime field, "[code]" otherwise.
std::string elt_to_string(const Field& F, Elt a);

std::vector<std::uint32_t> codes(std::span<const Elt> elts);

}  // namespace addix

#endif
