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

// Brute-force reference implementations used as test oracles. They avoid the library's
// arithmetic paths: field elements are multiplied as coefficient vectors reduced by the
// modulus, and polynomial identities are expanded with a Pascal triangle.

#ifndef ADDIX_TESTS_ORACLE_HPP
#define ADDIX_TESTS_ORACLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "addix/field.hpp"
#include "addix/poly.hpp"

namespace oracle {

using addix::Elt;
using addix::Field;
using addix::Poly;

inline std::vector<std::uint32_t> digits(const Field& F, Elt a) {
    std::vector<std::uint32_t> d(F.degree());
    std::uint32_t c = a.code;
    for (auto& x : d) {
        x = c % F.characteristic();
        c /= F.characteristic();
    }
    return d;
}

inline Elt undigits(const Field& F, const std::vector<std::uint32_t>& d) {
    std::uint32_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * F.characteristic() + d[i];
    return Elt{c};
}

inline Elt add(const Field& F, Elt a, Elt b) {
    auto x = digits(F, a), y = digits(F, b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % F.characteristic();
    return undigits(F, x);
}

inline Elt neg(const Field& F, Elt a) {
    auto x = digits(F, a);
    for (auto& v : x) v = (F.characteristic() - v) % F.characteristic();
    return undigits(F, x);
}

inline Elt sub(const Field& F, Elt a, Elt b) { return add(F, a, neg(F, b)); }

// Schoolbook product reduced by the monic modulus.
inline Elt mul(const Field& F, Elt a, Elt b) {
    const std::uint64_t p = F.characteristic();
    const unsigned n = F.degree();
    auto x = digits(F, a), y = digits(F, b);
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    const auto& m = F.modulus();
    for (std::size_t k = 2 * n; k-- > n;) {
        const std::uint64_t c = prod[k];
        if (!c) continue;
        for (unsigned i = 0; i <= n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - c) * m[i]) % p;
    }
    std::vector<std::uint32_t> r(n);
    for (unsigned i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return undigits(F, r);
}

inline Elt pow(const Field& F, Elt a, std::uint64_t e) {
    Elt r{1};
    for (std::uint64_t i = 0; i < e; ++i) r = mul(F, r, a);
    return r;
}

inline Elt eval(const Poly& P, Elt y) {
    const auto& F = P.F();
    Elt acc{0}, power{1};
    for (Elt c : P.coeffs()) {
        acc = add(F, acc, mul(F, c, power));
        power = mul(F, power, y);
    }
    return acc;
}

inline std::vector<Elt> table(const Poly& P) {
    std::vector<Elt> t;
    for (std::uint32_t y = 0; y < P.F().order(); ++y) t.push_back(eval(P, Elt{y}));
    return t;
}

inline std::size_t value_set(const Poly& P) {
    auto t = table(P);
    return std::set<Elt>(t.begin(), t.end()).size();
}

inline bool is_pp(const Poly& P) { return value_set(P) == P.F().order(); }

// y with P_0(x + y) = P_0(x) + P_0(y) identically, via explicit binomial expansion.
inline std::set<Elt> additive_kernel(const Poly& P) {
    const auto& F = P.F();
    const std::uint32_t p = F.characteristic();
    const std::size_t d = P.coeffs().size();
    std::vector<std::vector<std::uint32_t>> C(d, std::vector<std::uint32_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        C[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) C[i][j] = (C[i - 1][j - 1] + (j < i ? C[i - 1][j] : 0)) % p;
    }
    std::set<Elt> V;
    for (std::uint32_t yc = 0; yc < F.order(); ++yc) {
        const Elt y{yc};
        // coefficient of x^i in P_0(x + y) - P_0(x) - P_0(y), for 1 <= i < deg
        bool ok = true;
        for (std::size_t i = 1; i + 1 < d && ok; ++i) {
            Elt acc{0};
            for (std::size_t j = i + 1; j < d; ++j) {
                Elt term = mul(F, P.coeffs()[j], pow(F, y, j - i));
                for (std::uint32_t r = 0; r < C[j][i]; ++r) acc = add(F, acc, term);
            }
            ok = acc.code == 0;
        }
        if (ok) V.insert(y);
    }
    return V;
}

// Every F_p-linear combination of the generators.
inline std::set<Elt> span(const Field& F, const std::vector<Elt>& gens) {
    std::set<Elt> S{Elt{0}};
    for (Elt g : gens) {
        std::set<Elt> next;
        for (Elt s : S) {
            Elt m{0};
            for (std::uint32_t c = 0; c < F.characteristic(); ++c) {
                next.insert(add(F, s, m));
                m = add(F, m, g);
            }
        }
        S = std::move(next);
    }
    return S;
}

inline std::map<std::uint64_t, std::uint64_t> cycles(const Poly& P) {
    const auto t = table(P);
    std::vector<bool> seen(t.size(), false);
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint32_t s = 0; s < t.size(); ++s) {
        if (seen[s]) continue;
        std::uint64_t len = 0;
        for (std::uint32_t y = s; !seen[y]; y = t[y].code) {
            seen[y] = true;
            ++len;
        }
        ++out[len];
    }
    return out;
}

}  // namespace oracle

#endif
