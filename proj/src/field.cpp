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

#include "addix/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "addix/error.hpp"

namespace addix {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a nonzero m, over F_p.
Coeffs mod_p(Coeffs a, const Coeffs& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t c = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c * m[i] % p)) % p);
        }
        trim(a);
    }
    return a;
}

Coeffs mulmod_p(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return mod_p(std::move(r), m, p);
}

Coeffs gcd_p(Coeffs a, Coeffs b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = mod_p(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
    Coeffs m(monic.begin(), monic.end());
    trim(m);
    if (m.size() < 2) return false;
    const std::size_t n = m.size() - 1;
    if (n == 1) return true;
    // gcd(m, x^(p^i) - x) = 1 for every i <= n/2
    Coeffs h{0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        Coeffs base = h, acc{1};
        for (std::uint32_t e = p; e; e >>= 1) {
            if (e & 1) acc = mulmod_p(acc, base, m, p);
            base = mulmod_p(base, base, m, p);
        }
        h = acc;
        Coeffs diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;  // m divides x^(p^i) - x
        if (gcd_p(m, diff, p).size() > 1) return false;
    }
    return true;
}

FieldPtr Field::make(std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus,
                     std::uint64_t max_order) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    if (p > (1u << 16)) throw PreconditionError("characteristic exceeds 2^16");
    if (n < 1) throw PreconditionError("extension degree must be at least 1");
    const std::uint64_t cap = std::min(max_order, kMaxOrder);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > cap) {
            throw PreconditionError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                                    " exceeds the cap " + std::to_string(cap));
        }
    }

    std::vector<std::uint32_t> m;
    if (modulus) {
        m = *modulus;
        if (m.size() != n + 1) throw PreconditionError("modulus must have degree " + std::to_string(n));
        for (auto c : m) {
            if (c >= p) throw PreconditionError("modulus coefficient out of range");
        }
        if (m.back() != 1) throw PreconditionError("modulus must be monic");
        if (!is_irreducible_mod_p(m, p)) throw PreconditionError("modulus is reducible over F_p");
    } else {
        // smallest integer code sum(c_i p^i) among monic irreducibles of degree n
        const std::uint64_t count = q;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> cand(n + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < n; ++i) {
                cand[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            cand[n] = 1;
            if (is_irreducible_mod_p(cand, p)) {
                m = std::move(cand);
                break;
            }
        }
    }
    return FieldPtr(new Field(p, n, std::move(m)));
}

FieldPtr Field::parse(std::string_view spec, std::uint64_t max_order) {
    std::string_view head = spec, tail;
    if (auto slash = spec.find('/'); slash != std::string_view::npos) {
        head = spec.substr(0, slash);
        tail = spec.substr(slash + 1);
    }
    std::uint64_t p = 0, n = 1;
    if (auto caret = head.find('^'); caret != std::string_view::npos) {
        p = parse_uint(head.substr(0, caret), "characteristic");
        n = parse_uint(head.substr(caret + 1), "extension degree");
    } else {
        p = parse_uint(head, "characteristic");
    }
    if (p > (1u << 16) || n > 64) throw PreconditionError("field spec out of range: " + std::string(spec));

    std::optional<std::vector<std::uint32_t>> modulus;
    if (spec.find('/') != std::string_view::npos) {
        std::vector<std::uint32_t> coeffs;
        std::size_t start = 0;
        while (true) {
            auto comma = tail.find(',', start);
            auto piece = tail.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            auto v = parse_uint(piece, "modulus coefficient");
            if (v >= p) throw PreconditionError("modulus coefficient out of range");
            coeffs.push_back(static_cast<std::uint32_t>(v));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        modulus = std::move(coeffs);
    }
    return make(static_cast<std::uint32_t>(p), static_cast<unsigned>(n), std::move(modulus), max_order);
}

Field::Field(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    powers_.resize(n_ + 1);
    powers_[0] = 1;
    for (unsigned i = 1; i <= n_; ++i) powers_[i] = powers_[i - 1] * p_;
    q_ = powers_[n_];
    if (p_ == 2) {
        for (unsigned i = 0; i <= n_; ++i) {
            if (modulus_[i]) modulus_bits_ |= 1u << i;
        }
    }
    unit_primes_ = prime_factors(q_ - 1);
    primitive_ = one();
    for (std::uint32_t code = 1; code < q_; ++code) {
        if (multiplicative_order(Elt{code}) == q_ - 1) {
            primitive_ = Elt{code};
            break;
        }
    }
}

std::string Field::spec() const {
    std::ostringstream os;
    os << p_ << '^' << n_ << '/';
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    return os.str();
}

Elt Field::element(std::uint32_t code) const {
    if (code >= q_) {
        throw PreconditionError("element code " + std::to_string(code) + " out of range for q = " + std::to_string(q_));
    }
    return Elt{code};
}

Elt Field::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Elt{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::digits(Elt a) const {
    std::vector<std::uint32_t> d(n_);
    std::uint32_t c = a.code;
    for (unsigned i = 0; i < n_; ++i) {
        d[i] = c % p_;
        c /= p_;
    }
    return d;
}

Elt Field::from_digits(std::span<const std::uint32_t> digits) const {
    std::uint32_t code = 0;
    for (unsigned i = 0; i < n_ && i < digits.size(); ++i) code += (digits[i] % p_) * powers_[i];
    return Elt{code};
}

Elt Field::add(Elt a, Elt b) const noexcept {
    if (p_ == 2) return Elt{a.code ^ b.code};
    std::uint32_t x = a.code, y = b.code, r = 0;
    for (unsigned i = 0; i < n_ && (x | y); ++i) {
        std::uint32_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        r += s * powers_[i];
        x /= p_;
        y /= p_;
    }
    return Elt{r};
}

Elt Field::neg(Elt a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t x = a.code, r = 0;
    for (unsigned i = 0; i < n_ && x; ++i) {
        std::uint32_t d = x % p_;
        if (d) r += (p_ - d) * powers_[i];
        x /= p_;
    }
    return Elt{r};
}

Elt Field::sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }

Elt Field::scale(Elt a, std::uint32_t c) const noexcept {
    c %= p_;
    if (c == 0) return zero();
    if (c == 1) return a;
    std::uint32_t x = a.code, r = 0;
    for (unsigned i = 0; i < n_ && x; ++i) {
        r += static_cast<std::uint32_t>(std::uint64_t{x % p_} * c % p_) * powers_[i];
        x /= p_;
    }
    return Elt{r};
}

Elt Field::mul(Elt a, Elt b) const noexcept {
    if (a.code == 0 || b.code == 0) return zero();
    if (p_ == 2) {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < n_; ++i) {
            if ((b.code >> i) & 1u) r ^= std::uint64_t{a.code} << i;
        }
        for (int k = 2 * static_cast<int>(n_) - 2; k >= static_cast<int>(n_); --k) {
            if ((r >> k) & 1u) r ^= std::uint64_t{modulus_bits_} << (k - n_);
        }
        return Elt{static_cast<std::uint32_t>(r)};
    }
    if (n_ == 1) return Elt{static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};

    std::uint64_t da[32], db[32], t[64] = {};
    std::uint32_t x = a.code, y = b.code;
    for (unsigned i = 0; i < n_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    for (unsigned i = 0; i < n_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < n_; ++j) t[i + j] += da[i] * db[j];
    }
    for (int k = 2 * static_cast<int>(n_) - 2; k >= static_cast<int>(n_); --k) {
        const std::uint64_t c = t[k] % p_;
        if (!c) continue;
        // x^n = -sum_{i<n} m_i x^i
        for (unsigned i = 0; i < n_; ++i) {
            if (modulus_[i]) t[k - n_ + i] += c * (p_ - modulus_[i]);
        }
    }
    std::uint32_t r = 0;
    for (unsigned i = 0; i < n_; ++i) r += static_cast<std::uint32_t>(t[i] % p_) * powers_[i];
    return Elt{r};
}

Elt Field::pow(Elt a, std::uint64_t e) const noexcept {
    Elt r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elt Field::inv(Elt a) const {
    if (a.code == 0) throw PreconditionError("inversion of zero");
    return pow(a, q_ - 2);
}

Elt Field::div(Elt a, Elt b) const { return mul(a, inv(b)); }

std::vector<Elt> Field::elements() const {
    std::vector<Elt> out(q_);
    for (std::uint32_t c = 0; c < q_; ++c) out[c] = Elt{c};
    return out;
}

std::uint64_t Field::multiplicative_order(Elt a) const {
    if (a.code == 0) throw PreconditionError("zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto r : unit_primes_) {
        while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
    }
    return ord;
}

void Field::build_log_table() const {
    std::call_once(log_once_, [this] {
        exp_table_.resize(q_ - 1);
        log_table_.assign(q_, 0);
        Elt g = one();
        for (std::uint32_t m = 0; m + 1 < q_; ++m) {
            exp_table_[m] = g.code;
            log_table_[g.code] = m;
            g = mul(g, primitive_);
        }
    });
}

std::uint32_t Field::log(Elt a) const {
    if (a.code == 0) throw PreconditionError("discrete logarithm of zero");
    build_log_table();
    return log_table_[a.code];
}

Elt Field::exp(std::uint64_t m) const {
    build_log_table();
    return Elt{exp_table_[m % (q_ - 1)]};
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

}  // namespace addix
