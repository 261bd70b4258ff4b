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

#include "addix/poly.hpp"

#include <algorithm>

#include "addix/error.hpp"

namespace addix {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Elt> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
        if (!field_->contains(c)) throw PreconditionError("coefficient outside the field");
    }
    trim();
}

Poly Poly::constant(FieldPtr field, Elt c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elt c, std::size_t degree) {
    std::vector<Elt> v(degree + 1, Elt{0});
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::x(FieldPtr field) {
    auto one = field->one();
    return monomial(std::move(field), one, 1);
}

Poly Poly::field_poly(FieldPtr field) {
    const auto& F = *field;
    std::vector<Elt> v(std::size_t{F.order()} + 1, Elt{0});
    v[F.order()] = F.one();
    v[1] = F.add(v[1], F.neg(F.one()));
    return Poly(std::move(field), std::move(v));
}

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
    if (!same_field(field_, other.field_)) throw PreconditionError("polynomials over different fields");
}

Elt Poly::operator()(Elt y) const noexcept {
    const auto& F = *field_;
    Elt r{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = F.add(F.mul(r, y), *it);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const Elt li = F().inv(leading());
    return *this * li;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(rhs);
    const auto& F = *field_;
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Elt{0});
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = F.add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(rhs);
    const auto& F = *field_;
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Elt{0});
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = F.sub(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    require_same_field(rhs);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    const auto& F = *field_;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        if (rhs.coeffs_[j].code) nz.push_back(j);
    }
    std::vector<Elt> out(coeffs_.size() + rhs.coeffs_.size() - 1, Elt{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].code) continue;
        for (auto j : nz) out[i + j] = F.add(out[i + j], F.mul(coeffs_[i], rhs.coeffs_[j]));
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(Elt c) {
    if (!field_->contains(c)) throw PreconditionError("scalar outside the field");
    const auto& F = *field_;
    for (auto& a : coeffs_) a = F.mul(a, c);
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.coeffs_) a = F().neg(a);
    return r;
}

DivRem divrem(const Poly& a, const Poly& b) {
    if (!same_field(a.field(), b.field())) throw PreconditionError("polynomials over different fields");
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    const auto& F = a.F();
    if (a.degree() < b.degree()) return {Poly(a.field()), a};

    std::vector<Elt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const bool monic = b.is_monic();
    const Elt lead_inv = monic ? F.one() : F.inv(b.leading());
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < db; ++j) {
        if (bc[j].code) nz.push_back(j);
    }
    std::vector<Elt> quot(r.size() - db, Elt{0});
    for (std::size_t k = r.size(); k-- > db;) {
        if (!r[k].code) continue;
        const Elt c = monic ? r[k] : F.mul(r[k], lead_inv);
        const std::size_t shift = k - db;
        quot[shift] = c;
        r[k] = Elt{0};
        for (auto j : nz) r[shift + j] = F.sub(r[shift + j], F.mul(c, bc[j]));
    }
    r.resize(db);
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly compose(const Poly& a, const Poly& b) {
    if (!same_field(a.field(), b.field())) throw PreconditionError("polynomials over different fields");
    Poly r(a.field());
    const auto& c = a.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        r *= b;
        r += Poly::constant(a.field(), *it);
    }
    return r;
}

Poly derivative(const Poly& a) {
    const auto& F = a.F();
    if (a.degree() < 1) return Poly(a.field());
    std::vector<Elt> d(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) d[i - 1] = F.scale(a.coeffs()[i], i % F.characteristic());
    return Poly(a.field(), std::move(d));
}

Poly pow(const Poly& a, std::uint64_t e) {
    Poly r = Poly::constant(a.field(), a.F().one());
    Poly base = a;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::constant(base.field(), base.F().one()) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return r;
}

Poly gcd_with_field_poly(const Poly& a) {
    if (a.is_zero()) return Poly::field_poly(a.field());
    if (a.is_constant()) return Poly::constant(a.field(), a.F().one());
    Poly r = (powmod(Poly::x(a.field()), a.F().order(), a) - Poly::x(a.field())) % a;
    return gcd(a, r);
}

bool divides_field_poly(const Poly& a) {
    if (a.is_zero()) return false;
    if (a.is_constant()) return true;
    return ((powmod(Poly::x(a.field()), a.F().order(), a) - Poly::x(a.field())) % a).is_zero();
}

Poly reduce_mod_field_poly(const Poly& a) {
    const std::uint64_t q = a.F().order();
    if (static_cast<std::uint64_t>(a.degree() + 1) <= q) return a;
    const auto& F = a.F();
    std::vector<Elt> r(q, Elt{0});
    const auto& c = a.coeffs();
    r[0] = c[0];
    for (std::size_t e = 1; e < c.size(); ++e) {
        const std::size_t t = (e - 1) % (q - 1) + 1;
        r[t] = F.add(r[t], c[e]);
    }
    return Poly(a.field(), std::move(r));
}

BinomialModP::BinomialModP(std::uint32_t p) : p_(p), fact_(p), inv_fact_(p) {
    fact_[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i) fact_[i] = static_cast<std::uint32_t>(std::uint64_t{fact_[i - 1]} * i % p);
    for (std::uint32_t i = 0; i < p; ++i) {
        std::uint64_t r = 1, b = fact_[i];
        for (std::uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
        }
        inv_fact_[i] = static_cast<std::uint32_t>(p == 2 ? 1 : r);
    }
}

std::uint32_t BinomialModP::small(std::uint32_t n, std::uint32_t k) const noexcept {
    if (k > n) return 0;
    return static_cast<std::uint32_t>(std::uint64_t{fact_[n]} * inv_fact_[k] % p_ * inv_fact_[n - k] % p_);
}

std::uint32_t BinomialModP::operator()(std::uint64_t n, std::uint64_t k) const noexcept {
    if (k > n) return 0;
    std::uint64_t r = 1;
    while (k || n) {
        const std::uint32_t c = small(static_cast<std::uint32_t>(n % p_), static_cast<std::uint32_t>(k % p_));
        if (!c) return 0;
        r = r * c % p_;
        n /= p_;
        k /= p_;
    }
    return static_cast<std::uint32_t>(r);
}

std::vector<Poly> shift_expand(const Poly& P) {
    const int d = P.degree();
    if (d < 1) return {};
    const auto& F = P.F();
    BinomialModP binom(F.characteristic());
    std::vector<Poly> out;
    out.reserve(d - 1);
    for (int i = 1; i < d; ++i) {
        std::vector<Elt> fi(d - i + 1, Elt{0});
        for (int j = i + 1; j <= d; ++j) {
            const Elt c = P.coeff(j);
            if (!c.code) continue;
            fi[j - i] = F.scale(c, binom(j, i));
        }
        out.emplace_back(P.field(), std::move(fi));
    }
    return out;
}

Poly lagrange_interpolate(const FieldPtr& field, std::span<const std::pair<Elt, Elt>> points) {
    const auto& F = *field;
    if (points.empty()) throw PreconditionError("interpolation needs at least one point");
    if (points.size() > F.order()) throw PreconditionError("more interpolation points than field elements");
    std::vector<char> seen(F.order(), 0);
    for (auto& [x, y] : points) {
        if (!F.contains(x) || !F.contains(y)) throw PreconditionError("interpolation point outside the field");
        if (seen[x.code]++) throw PreconditionError("duplicated interpolation abscissa " + std::to_string(x.code));
    }

    // master = prod (x - x_i), constant first
    std::vector<Elt> master{F.one()};
    for (auto& [xi, yi] : points) {
        std::vector<Elt> next(master.size() + 1, Elt{0});
        const Elt negx = F.neg(xi);
        for (std::size_t k = 0; k < master.size(); ++k) {
            next[k + 1] = F.add(next[k + 1], master[k]);
            next[k] = F.add(next[k], F.mul(master[k], negx));
        }
        master = std::move(next);
    }

    const std::size_t m = points.size();
    std::vector<Elt> result(m, Elt{0});
    std::vector<Elt> quot(m);
    for (auto& [xi, yi] : points) {
        if (!yi.code) continue;
        // quot = master / (x - xi), synthetic division from the top
        Elt carry{0};
        for (std::size_t k = m; k-- > 0;) {
            carry = F.add(master[k + 1], F.mul(carry, xi));
            quot[k] = carry;
        }
        Elt w{0};
        for (std::size_t k = m; k-- > 0;) w = F.add(F.mul(w, xi), quot[k]);
        const Elt scale = F.div(yi, w);
        for (std::size_t k = 0; k < m; ++k) result[k] = F.add(result[k], F.mul(quot[k], scale));
    }
    return Poly(field, std::move(result));
}

std::vector<std::uint32_t> codes(std::span<const Elt> elts) {
    std::vector<std::uint32_t> out;
    out.reserve(elts.size());
    for (auto e : elts) out.push_back(e.code);
    return out;
}

}  // namespace addix
