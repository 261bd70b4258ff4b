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

#ifndef ADDIX_FIELD_HPP
#define ADDIX_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace addix {

/// An element of F_q, identified by its canonical code sum(c_i * p^i) where c_i are
/// the coefficients of the residue class in the basis 1, x, ..., x^(n-1).
/// Code 0 is the additive identity, code 1 the multiplicative identity.
struct Elt {
    std::uint32_t code = 0;

    friend constexpr bool operator==(Elt, Elt) = default;
    friend constexpr auto operator<=>(Elt, Elt) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * The finite field F_{p^n} = F_p[x]/(modulus).
 *
 * Fields are created through make() or parse() and shared by pointer; a Field is
 * immutable after construction apart from the discrete logarithm table, which is
 * built on first use under std::call_once.
 *
 * When no modulus is supplied the monic irreducible of degree n with the smallest
 * integer code sum(c_i * p^i) is selected. For n = 1 that is x itself.
 */
class Field {
   public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

    static FieldPtr make(std::uint32_t p, unsigned n,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                         std::uint64_t max_order = kMaxOrder);

    /// Accepts "p^n", "p" or "p^n/c0,c1,...,cn" (modulus coefficients, constant first).
    static FieldPtr parse(std::string_view spec, std::uint64_t max_order = kMaxOrder);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return n_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// Canonical "p^n/c0,...,cn" form, accepted by parse().
    std::string spec() const;

    Elt zero() const noexcept { return Elt{0}; }
    Elt one() const noexcept { return Elt{1}; }
    Elt primitive() const noexcept { return primitive_; }

    /// Element with the given code; throws PreconditionError when out of range.
    Elt element(std::uint32_t code) const;
    /// Image of an integer in the prime subfield.
    Elt from_int(std::int64_t v) const noexcept;
    bool contains(Elt a) const noexcept { return a.code < q_; }
    bool in_prime_field(Elt a) const noexcept { return a.code < p_; }

    std::vector<std::uint32_t> digits(Elt a) const;
    Elt from_digits(std::span<const std::uint32_t> digits) const;

    Elt add(Elt a, Elt b) const noexcept;
    Elt sub(Elt a, Elt b) const noexcept;
    Elt neg(Elt a) const noexcept;
    Elt mul(Elt a, Elt b) const noexcept;
    /// c * a for c in F_p (c reduced mod p).
    Elt scale(Elt a, std::uint32_t c) const noexcept;
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const;
    Elt pow(Elt a, std::uint64_t e) const noexcept;
    Elt frobenius(Elt a) const noexcept { return pow(a, p_); }

    /// All q elements in ascending code order.
    std::vector<Elt> elements() const;

    /// Exponent m in [0, q-2] with primitive()^m = a. Throws PreconditionError for a = 0.
    std::uint32_t log(Elt a) const;
    Elt exp(std::uint64_t m) const;

    std::uint64_t multiplicative_order(Elt a) const;
    /// Distinct primes dividing q - 1.
    const std::vector<std::uint64_t>& unit_group_primes() const noexcept { return unit_primes_; }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
    }

   private:
    Field(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus);

    void build_log_table() const;

    std::uint32_t p_;
    unsigned n_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> powers_;  // p^i, i = 0..n
    std::uint32_t modulus_bits_ = 0;      // binary fields: modulus as a bit mask
    Elt primitive_;
    std::vector<std::uint64_t> unit_primes_;

    mutable std::once_flag log_once_;
    mutable std::vector<std::uint32_t> log_table_;
    mutable std::vector<std::uint32_t> exp_table_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

bool is_prime(std::uint64_t v) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t v);
std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept;

/// Irreducibility over F_p of a monic coefficient vector (constant first).
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace addix

#endif
