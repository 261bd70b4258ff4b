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

#include "addix/linearized.hpp"

#include <algorithm>
#include <mutex>

#include "addix/error.hpp"
#include "addix/parallel.hpp"

namespace addix {

LinearizedPoly::LinearizedPoly(FieldPtr field) : field_(std::move(field)) {}

LinearizedPoly::LinearizedPoly(FieldPtr field, std::vector<Elt> lin_coeffs)
    : field_(std::move(field)), coeffs_(std::move(lin_coeffs)) {
    for (auto c : coeffs_) {
        if (!field_->contains(c)) throw PreconditionError("coefficient outside the field");
    }
    while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

LinearizedPoly LinearizedPoly::identity(FieldPtr field) {
    auto one = field->one();
    return LinearizedPoly(std::move(field), {one});
}

LinearizedPoly LinearizedPoly::field_poly(FieldPtr field) {
    const auto& F = *field;
    std::vector<Elt> c(F.degree() + 1, Elt{0});
    c[0] = F.neg(F.one());
    c[F.degree()] = F.one();
    return LinearizedPoly(std::move(field), std::move(c));
}

std::uint64_t LinearizedPoly::degree() const noexcept {
    if (coeffs_.empty()) return 0;
    return ipow(field_->characteristic(), static_cast<unsigned>(coeffs_.size() - 1));
}

Elt LinearizedPoly::operator()(Elt y) const noexcept {
    const auto& F = *field_;
    Elt r{0};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].code) r = F.add(r, F.mul(coeffs_[i], y));
        if (i + 1 < coeffs_.size()) y = F.frobenius(y);
    }
    return r;
}

Poly LinearizedPoly::to_poly() const {
    if (coeffs_.empty()) return Poly(field_);
    std::vector<Elt> dense(degree() + 1, Elt{0});
    std::uint64_t e = 1;
    for (auto c : coeffs_) {
        dense[e] = c;
        e *= field_->characteristic();
    }
    return Poly(field_, std::move(dense));
}

std::optional<LinearizedPoly> is_linearized(const Poly& P) {
    const std::uint32_t p = P.F().characteristic();
    if (P.coeff(0).code) return std::nullopt;
    std::vector<Elt> lin;
    std::uint64_t next = 1;
    for (std::size_t e = 1; e < P.coeffs().size(); ++e) {
        if (e == next) {
            lin.push_back(P.coeff(e));
            next *= p;
        } else if (P.coeff(e).code) {
            return std::nullopt;
        }
    }
    return LinearizedPoly(P.field(), std::move(lin));
}

LinearizedPoly compose(const LinearizedPoly& outer, const LinearizedPoly& inner) {
    if (!same_field(outer.field(), inner.field())) throw PreconditionError("polynomials over different fields");
    const auto& F = *outer.field();
    if (outer.is_zero() || inner.is_zero()) return LinearizedPoly(outer.field());
    std::vector<Elt> c(outer.coeffs().size() + inner.coeffs().size() - 1, Elt{0});
    std::vector<Elt> b = inner.coeffs();
    for (std::size_t i = 0; i < outer.coeffs().size(); ++i) {
        const Elt a = outer.coeffs()[i];
        if (a.code) {
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a, b[j]));
        }
        for (auto& bj : b) bj = F.frobenius(bj);
    }
    return LinearizedPoly(outer.field(), std::move(c));
}

bool is_subspace_poly(const LinearizedPoly& L) {
    return !L.is_zero() && L.is_monic() && divides_field_poly(L.to_poly());
}

namespace detail {

std::vector<std::uint32_t> FpEchelon::reduce(std::vector<std::uint32_t> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::uint32_t c = v[pivots_[r]];
        if (!c) continue;
        const std::uint32_t f = p_ - c;
        for (unsigned i = 0; i < n_; ++i) {
            if (rows_[r][i]) v[i] = static_cast<std::uint32_t>((v[i] + std::uint64_t{f} * rows_[r][i]) % p_);
        }
    }
    return v;
}

bool FpEchelon::insert(std::vector<std::uint32_t> v) {
    v = reduce(std::move(v));
    unsigned piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    // normalize the pivot to 1
    std::uint64_t inv = 1, b = v[piv];
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
        if (e & 1) inv = inv * b % p_;
        b = b * b % p_;
    }
    for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p_);
    // clear the new pivot column from existing rows
    for (auto& row : rows_) {
        const std::uint32_t c = row[piv];
        if (!c) continue;
        const std::uint32_t f = p_ - c;
        for (unsigned i = 0; i < n_; ++i) {
            if (v[i]) row[i] = static_cast<std::uint32_t>((row[i] + std::uint64_t{f} * v[i]) % p_);
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

}  // namespace detail

Subspace::Subspace(FieldPtr field)
    : field_(std::move(field)), echelon_(field_->characteristic(), field_->degree()) {}

bool Subspace::try_insert(Elt v) {
    if (!field_->contains(v)) throw PreconditionError("vector outside the field");
    if (!echelon_.insert(field_->digits(v))) return false;
    basis_.push_back(v);
    return true;
}

Subspace Subspace::span(FieldPtr field, std::span<const Elt> generators) {
    Subspace s(std::move(field));
    for (auto g : generators) {
        if (s.dim() == s.field_->degree()) {
            if (!s.field_->contains(g)) throw PreconditionError("vector outside the field");
            continue;
        }
        s.try_insert(g);
    }
    return s;
}

Subspace Subspace::from_basis(FieldPtr field, std::span<const Elt> basis) {
    Subspace s(std::move(field));
    for (auto b : basis) {
        if (!s.try_insert(b)) throw PreconditionError("basis vectors are linearly dependent over F_p");
    }
    return s;
}

Subspace Subspace::full(FieldPtr field) {
    std::vector<Elt> unit;
    std::uint32_t c = 1;
    for (unsigned i = 0; i < field->degree(); ++i, c *= field->characteristic()) unit.push_back(Elt{c});
    return from_basis(std::move(field), unit);
}

std::uint64_t Subspace::size() const noexcept { return ipow(field_->characteristic(), dim()); }

bool Subspace::contains(Elt a) const { return reduce(a).code == 0; }

Elt Subspace::reduce(Elt a) const {
    if (!field_->contains(a)) throw PreconditionError("vector outside the field");
    return field_->from_digits(echelon_.reduce(field_->digits(a)));
}

std::vector<Elt> span_elements(const Field& F, std::span<const Elt> basis) {
    std::vector<Elt> out{F.zero()};
    for (auto b : basis) {
        const std::size_t base = out.size();
        Elt step = b;
        for (std::uint32_t c = 1; c < F.characteristic(); ++c) {
            for (std::size_t i = 0; i < base; ++i) out.push_back(F.add(out[i], step));
            step = F.add(step, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elt> Subspace::elements() const { return span_elements(*field_, basis_); }

Subspace Subspace::with(Elt v) const {
    Subspace s = *this;
    s.try_insert(v);
    return s;
}

bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return same_field(a.field_, b.field_) && a.echelon_.rows() == b.echelon_.rows();
}

Subspace kernel(const LinearizedPoly& L) {
    if (L.is_zero()) throw PreconditionError("kernel of the zero polynomial is all of F_q");
    const auto& F = *L.field();
    std::vector<std::vector<Elt>> found;
    std::mutex m;
    parallel_blocks(F.order(), 4096, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<Elt> local;
        for (std::size_t c = begin; c < end; ++c) {
            const Elt y{static_cast<std::uint32_t>(c)};
            if (L(y).code == 0) local.push_back(y);
        }
        std::lock_guard<std::mutex> lock(m);
        found.push_back(std::move(local));
    });
    std::vector<Elt> roots;
    for (auto& v : found) roots.insert(roots.end(), v.begin(), v.end());
    std::sort(roots.begin(), roots.end());
    return Subspace::span(L.field(), roots);
}

LinearizedPoly vanishing_poly(const Subspace& U) {
    const auto& F = *U.field();
    const std::uint32_t p = F.characteristic();
    std::vector<Elt> a{F.one()};
    for (auto b : U.basis()) {
        LinearizedPoly V(U.field(), a);
        const Elt w = F.pow(V(b), p - 1);
        std::vector<Elt> next(a.size() + 1, Elt{0});
        for (std::size_t i = 0; i <= a.size(); ++i) {
            Elt c{0};
            if (i >= 1) c = F.frobenius(a[i - 1]);
            if (i < a.size()) c = F.sub(c, F.mul(w, a[i]));
            next[i] = c;
        }
        a = std::move(next);
    }
    return LinearizedPoly(U.field(), std::move(a));
}

std::vector<Poly> basis_L_expansion(const Poly& P, const LinearizedPoly& L) {
    if (L.is_zero()) throw PreconditionError("expansion in basis of the zero polynomial");
    const Poly Lp = L.to_poly();
    std::vector<Poly> digits;
    Poly rest = P;
    do {
        auto [q, r] = divrem(rest, Lp);
        digits.push_back(std::move(r));
        rest = std::move(q);
    } while (!rest.is_zero());
    return digits;
}

LinearizedPoly linearized_quotient(const Poly& M, const LinearizedPoly& L) {
    if (L.is_zero() || L.coeffs()[0].code == 0) throw PreconditionError("L must be separable (nonzero x coefficient)");
    if (!is_linearized(M)) throw PreconditionError("M is not p-linearized");
    const auto digits = basis_L_expansion(M, L);
    if (!digits[0].is_zero()) throw PreconditionError("L does not divide M");
    std::vector<Elt> n(digits.size(), Elt{0});
    for (std::size_t i = 1; i < digits.size(); ++i) {
        if (!digits[i].is_constant()) {
            throw PreconditionError("basis-L digit " + std::to_string(i) + " is not constant");
        }
        n[i] = digits[i].coeff(0);
    }
    auto N = is_linearized(Poly(M.field(), std::move(n)));
    if (!N) throw PreconditionError("quotient is not p-linearized");
    return *N;
}

LinearizedPoly linearized_quotient(const LinearizedPoly& M, const LinearizedPoly& L) {
    return linearized_quotient(M.to_poly(), L);
}

LinearizedPoly complement(const LinearizedPoly& L) {
    if (!is_subspace_poly(L)) throw PreconditionError("complement needs a monic p-linearized divisor of x^q - x");
    return linearized_quotient(Poly::field_poly(L.field()), L);
}

LinearizedPoly linearized_interpolate(const FieldPtr& field, std::span<const std::pair<Elt, Elt>> pairs,
                                      unsigned bound) {
    const auto& F = *field;
    if (pairs.size() != bound) throw PreconditionError("number of pairs must equal the degree bound");
    std::vector<Elt> us;
    for (auto& [u, w] : pairs) {
        if (!F.contains(u) || !F.contains(w)) throw PreconditionError("pair outside the field");
        us.push_back(u);
    }
    Subspace::from_basis(field, us);

    // rows: [u_j, u_j^p, ..., u_j^(p^(bound-1)) | w_j]
    const std::size_t m = bound;
    std::vector<std::vector<Elt>> A(m, std::vector<Elt>(m + 1));
    for (std::size_t j = 0; j < m; ++j) {
        Elt y = pairs[j].first;
        for (std::size_t i = 0; i < m; ++i) {
            A[j][i] = y;
            y = F.frobenius(y);
        }
        A[j][m] = pairs[j].second;
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && A[piv][col].code == 0) ++piv;
        if (piv == m) throw PreconditionError("singular linearized interpolation system");
        std::swap(A[piv], A[col]);
        const Elt inv = F.inv(A[col][col]);
        for (auto& x : A[col]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || A[r][col].code == 0) continue;
            const Elt f = A[r][col];
            for (std::size_t i = col; i <= m; ++i) A[r][i] = F.sub(A[r][i], F.mul(f, A[col][i]));
        }
    }
    std::vector<Elt> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = A[i][m];
    return LinearizedPoly(field, std::move(c));
}

CosetDecomposition coset_reps(const Subspace& U) {
    const auto& F = *U.field();
    Subspace combined = U;
    std::vector<Elt> comp;
    for (std::uint32_t code = 1; code < F.order() && combined.dim() < F.degree(); ++code) {
        if (combined.contains(Elt{code})) continue;
        combined = combined.with(Elt{code});
        comp.push_back(Elt{code});
    }
    Subspace complement_space = Subspace::from_basis(U.field(), comp);
    auto reps = complement_space.elements();
    return {U, std::move(complement_space), std::move(reps)};
}

Subspace subspace_image(const LinearizedPoly& M, const Subspace& U) {
    if (!same_field(M.field(), U.field())) throw PreconditionError("operands over different fields");
    std::vector<Elt> images;
    for (auto b : U.basis()) images.push_back(M(b));
    return Subspace::span(U.field(), images);
}

Subspace image(const LinearizedPoly& L) { return subspace_image(L, Subspace::full(L.field())); }

}  // namespace addix
