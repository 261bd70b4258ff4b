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

#include "addix/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "addix/additive_index.hpp"
#include "addix/error.hpp"
#include "addix/parallel.hpp"

namespace addix {

namespace {

constexpr double kSlack = 1e-6;
constexpr std::size_t kSumBlock = 4096;

std::complex<double> unit_root(std::uint64_t t, std::uint64_t m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t % m) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> pairwise(std::vector<std::complex<double>> parts) {
    if (parts.empty()) return {};
    while (parts.size() > 1) {
        std::vector<std::complex<double>> next((parts.size() + 1) / 2);
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] = parts[2 * i] + (2 * i + 1 < parts.size() ? parts[2 * i + 1] : std::complex<double>{});
        }
        parts = std::move(next);
    }
    return parts[0];
}

using Series = std::vector<Elt>;

Series series_mul(const Field& F, const Series& a, const Series& b, std::size_t prec) {
    Series c(prec, Elt{0});
    for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
        if (!a[i].code) continue;
        for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    return c;
}

Series series_pow(const Field& F, Series base, std::uint64_t e, std::size_t prec) {
    Series acc(prec, Elt{0});
    acc[0] = F.one();
    base.resize(prec, Elt{0});
    while (e) {
        if (e & 1) acc = series_mul(F, acc, base, prec);
        e >>= 1;
        if (e) base = series_mul(F, base, base, prec);
    }
    return acc;
}

// a[0] must be nonzero.
Series series_inv(const Field& F, const Series& a, std::size_t prec) {
    Series inv(prec, Elt{0});
    const Elt a0 = F.inv(a[0]);
    inv[0] = a0;
    for (std::size_t k = 1; k < prec; ++k) {
        Elt acc{0};
        for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], inv[k - i]));
        inv[k] = F.neg(F.mul(acc, a0));
    }
    return inv;
}

// G with G(0) = 1 and G^r = Q mod y^prec, by Newton iteration; r must be a unit mod p.
Series series_root(const Field& F, const Series& Q, std::uint64_t r, std::size_t prec) {
    Series G{F.one()};
    const Elt r_elt = F.from_int(static_cast<std::int64_t>(r % F.characteristic()));
    for (std::size_t cur = 1; cur < prec;) {
        cur = std::min(prec, 2 * cur);
        G.resize(cur, Elt{0});
        const Series Gr1 = series_pow(F, G, r - 1, cur);
        Series Gr = series_mul(F, Gr1, G, cur);
        for (std::size_t i = 0; i < cur; ++i) Gr[i] = F.sub(Gr[i], i < Q.size() ? Q[i] : Elt{0});
        Series denom = Gr1;
        for (auto& c : denom) c = F.mul(c, r_elt);
        const Series step = series_mul(F, Gr, series_inv(F, denom, cur), cur);
        for (std::size_t i = 0; i < cur; ++i) G[i] = F.sub(G[i], step[i]);
    }
    G.resize(prec, Elt{0});
    return G;
}

}  // namespace

MultChar::MultChar(FieldPtr field, std::uint64_t j) : field_(std::move(field)), j_(j) {
    if (j_ + 1 >= field_->order()) throw PreconditionError("character index must lie in [0, q-2]");
}

std::uint64_t MultChar::order() const noexcept {
    const std::uint64_t m = field_->order() - 1;
    return m / std::gcd(j_, m);
}

std::complex<double> char_eval(const MultChar& chi, Elt a) {
    if (a.code == 0) return {0.0, 0.0};
    const std::uint64_t m = chi.field()->order() - 1;
    return unit_root(chi.index() * chi.field()->log(a), m);
}

std::complex<double> char_sum(const Poly& P, const MultChar& chi) {
    if (!same_field(P.field(), chi.field())) throw PreconditionError("operands over different fields");
    const std::uint32_t q = P.F().order();
    const std::size_t blocks = (q + kSumBlock - 1) / kSumBlock;
    std::vector<std::complex<double>> parts(blocks);
    parallel_blocks(q, kSumBlock, [&](std::size_t block, std::size_t begin, std::size_t end) {
        std::complex<double> acc{};
        for (std::size_t c = begin; c < end; ++c) acc += char_eval(chi, P(Elt{static_cast<std::uint32_t>(c)}));
        parts[block] = acc;
    });
    return pairwise(std::move(parts));
}

double affine_bound(std::uint32_t p, unsigned n, unsigned e) {
    if (2 * e <= n) return static_cast<double>(ipow(p, e));
    return std::sqrt(static_cast<double>(ipow(p, n)));
}

double additive_bound(std::uint32_t p, unsigned n, unsigned e) {
    return static_cast<double>(ipow(p, n - e)) * affine_bound(p, n, e);
}

AffineCharSum char_sum_affine(Elt a, const Subspace& U, const MultChar& chi) {
    if (!same_field(U.field(), chi.field())) throw PreconditionError("operands over different fields");
    if (chi.trivial()) throw PreconditionError("character must be nontrivial");
    const auto& F = *U.field();
    std::vector<std::complex<double>> terms;
    for (Elt u : U.elements()) terms.push_back(char_eval(chi, F.add(a, u)));
    AffineCharSum r{pairwise(std::move(terms)), U.dim(), affine_bound(F.characteristic(), F.degree(), U.dim())};
    if (std::abs(r.sum) > r.bound + kSlack) {
        throw InvariantViolation("affine character sum exceeds p^min(e, n/2)",
                                 "a = " + std::to_string(a.code) + ", dim = " + std::to_string(r.e) +
                                     ", j = " + std::to_string(chi.index()) + ", |sum| = " +
                                     std::to_string(std::abs(r.sum)));
    }
    return r;
}

std::optional<PerfectPower> perfect_power(const Poly& P) {
    const auto& F = P.F();
    const int d = P.degree();
    if (d < 1) return std::nullopt;
    const Elt a = P.leading();
    const Poly Q = P * F.inv(a);
    // Reversed Q: y^d Q(1/y) = 1 + ...
    Series rev(Q.coeffs().rbegin(), Q.coeffs().rend());
    const std::uint64_t q1 = F.order() - 1;
    for (std::uint64_t r = 2; r <= q1; ++r) {
        if (q1 % r || d % r) continue;
        const std::size_t m = static_cast<std::size_t>(d) / r;
        Series G = series_root(F, rev, r, m + 1);
        Poly g(P.field(), std::vector<Elt>(G.rbegin(), G.rend()));
        if (pow(g, r) == Q) return PerfectPower{r, a, std::move(g)};
    }
    return std::nullopt;
}

CharSumReport bound_report(const Poly& P, const MultChar& chi) {
    if (chi.trivial()) throw PreconditionError("character must be nontrivial");
    const auto D = maximal_decomposition(P);
    const auto& F = P.F();
    const std::uint32_t p = F.characteristic();
    const unsigned n = F.degree();

    CharSumReport r;
    r.sum = char_sum(D.P, chi);
    r.abs = std::abs(r.sum);
    r.index_k = D.index_k;
    r.e = subspace_image(D.M, D.kernel_V).dim();
    r.s = std::max(0, D.f.degree());
    r.additive_bound = additive_bound(p, n, r.e);
    r.trivial_bound = F.order();
    r.sharp_regime = 2 * r.e > n;
    r.weil_bound = r.s >= 1 ? (static_cast<double>(r.s) * static_cast<double>(D.L.degree()) - 1.0) *
                                  std::sqrt(static_cast<double>(F.order()))
                            : std::numeric_limits<double>::quiet_NaN();
    if (auto pp = perfect_power(D.P)) r.power_r = pp->r;
    r.weil_applicable = r.s >= 1 && !r.power_r;
    if (r.abs > r.additive_bound + kSlack) {
        throw InvariantViolation("character sum exceeds the additive-index bound",
                                 "P = " + to_string(P) + " over " + F.spec() + ", j = " +
                                     std::to_string(chi.index()) + ", |sum| = " + std::to_string(r.abs) +
                                     ", bound = " + std::to_string(r.additive_bound));
    }
    return r;
}

}  // namespace addix
