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

#ifndef ADDIX_CHARSUM_HPP
#define ADDIX_CHARSUM_HPP

#include <complex>
#include <cstdint>
#include <optional>

#include "addix/linearized.hpp"
#include "addix/poly.hpp"

namespace addix {

/// eta_j(g^m) = exp(2 pi i j m / (q - 1)) for the field's primitive g; eta_j(0) = 0.
class MultChar {
   public:
    /// j in [0, q - 2]; j = 0 is the trivial character.
    MultChar(FieldPtr field, std::uint64_t j);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint64_t index() const noexcept { return j_; }
    std::uint64_t order() const noexcept;
    bool trivial() const noexcept { return j_ == 0; }

   private:
    FieldPtr field_;
    std::uint64_t j_;
};

std::complex<double> char_eval(const MultChar& chi, Elt a);

/// sum over x in F_q of chi(P(x)), reduced in a fixed pairwise order.
std::complex<double> char_sum(const Poly& P, const MultChar& chi);

struct AffineCharSum {
    std::complex<double> sum;
    unsigned e = 0;
    /// p^min(e, n/2).
    double bound = 0;
};

/// Sum of chi over a + U. Throws InvariantViolation if the sum exceeds the bound by more than 1e-6.
AffineCharSum char_sum_affine(Elt a, const Subspace& U, const MultChar& chi);

/// p^min(e, n/2) as a double.
double affine_bound(std::uint32_t p, unsigned n, unsigned e);
/// p^(n - e + min(e, n/2)) as a double.
double additive_bound(std::uint32_t p, unsigned n, unsigned e);

struct PerfectPower {
    std::uint64_t r = 0;
    Elt a;
    Poly g;
};

/// P = a * g(x)^r with r > 1 dividing q - 1, found by an exact r-th root of P/a.
std::optional<PerfectPower> perfect_power(const Poly& P);

struct CharSumReport {
    std::complex<double> sum;
    double abs = 0;
    int index_k = 0;
    /// p^e = p^(n-k) / deg gcd(L, M).
    unsigned e = 0;
    /// deg f in the maximal decomposition.
    int s = 0;
    double additive_bound = 0;
    /// (s p^(n-k) - 1) p^(n/2); NaN when s = 0.
    double weil_bound = 0;
    bool weil_applicable = false;
    /// Exponent r when P is a constant times an r-th power.
    std::optional<std::uint64_t> power_r;
    double trivial_bound = 0;
    /// e > n/2.
    bool sharp_regime = false;
};

/// Measured sum and bounds for P under a nontrivial chi. Throws InvariantViolation if
/// |sum| exceeds the additive-index bound by more than 1e-6.
CharSumReport bound_report(const Poly& P, const MultChar& chi);

}  // namespace addix

#endif
