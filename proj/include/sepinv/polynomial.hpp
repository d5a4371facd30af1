/*
   Copyright 2026 The sepinv Authors

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

#ifndef SEPINV_POLYNOMIAL_HPP
#define SEPINV_POLYNOMIAL_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace sepinv {

class PolynomialRing;
using Ring = std::shared_ptr<const PolynomialRing>;

/// K[x_1, ..., x_n] with a fixed monomial order.
class PolynomialRing {
   public:
    static Ring make(Field field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex()) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) fail(ErrorCode::InvalidArgument, "empty variable name");
            for (std::size_t j = 0; j < i; ++j)
                if (names[i] == names[j]) fail(ErrorCode::InvalidArgument, "duplicate variable name " + names[i]);
        }
        return Ring(new PolynomialRing(std::move(field), std::move(names), std::move(order)));
    }

    /// x1..xn.
    static Ring standard(Field field, std::size_t n, const std::string& prefix = "x",
                         MonomialOrder order = MonomialOrder::grevlex()) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
        return make(std::move(field), std::move(names), std::move(order));
    }

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const MonomialOrder& order() const noexcept { return order_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    Ring with_order(MonomialOrder order) const { return make(field_, names_, std::move(order)); }

    /// Symbol standing for the adjoined generator of F_{p^e} in text.
    const std::string& generator_symbol() const noexcept { return gen_symbol_; }

    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
        return &a == &b || (a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_);
    }

   private:
    PolynomialRing(Field field, std::vector<std::string> names, MonomialOrder order)
        : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {}

    Field field_;
    std::vector<std::string> names_;
    MonomialOrder order_;
    std::string gen_symbol_ = "a";
};

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

/// Sparse polynomial: terms strictly decreasing in the ring order, no zero
/// coefficients. Exponents are stored flat, nvars per term.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(Ring ring, FieldElement c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) {
            p.exps_.assign(p.n(), 0);
            p.coeffs_.push_back(c);
        }
        return p;
    }

    static Polynomial constant(Ring ring, long long c) {
        auto f = ring->field().from_int(c);
        return constant(std::move(ring), f);
    }

    static Polynomial variable(Ring ring, std::size_t i) {
        if (i >= ring->nvars()) fail(ErrorCode::InvalidArgument, "variable index out of range");
        Monomial m(ring->nvars(), 0);
        m[i] = 1;
        return term(std::move(ring), m, FieldElement{1});
    }

    static Polynomial variable(Ring ring, const std::string& name) {
        auto idx = ring->index_of(name);
        if (!idx) fail(ErrorCode::UnknownVariable, name);
        return variable(std::move(ring), *idx);
    }

    static Polynomial term(Ring ring, std::span<const Exponent> m, FieldElement c) {
        if (m.size() != ring->nvars()) fail(ErrorCode::DimensionMismatch, "monomial length");
        Polynomial p(std::move(ring));
        if (!c.is_zero()) {
            p.exps_.assign(m.begin(), m.end());
            p.coeffs_.push_back(c);
        }
        return p;
    }

    /// Arbitrary term list; sorts and merges duplicates.
    static Polynomial from_terms(Ring ring, std::vector<std::pair<Monomial, FieldElement>> terms) {
        Polynomial p(std::move(ring));
        const std::size_t n = p.n();
        std::vector<Exponent> flat;
        std::vector<FieldElement> cs;
        for (auto& [m, c] : terms) {
            if (m.size() != n) fail(ErrorCode::DimensionMismatch, "monomial length");
            if (c.is_zero()) continue;
            flat.insert(flat.end(), m.begin(), m.end());
            cs.push_back(c);
        }
        p.assign_unsorted(std::move(flat), std::move(cs));
        return p;
    }

    const Ring& ring() const noexcept { return ring_; }
    const Field& field() const { return ring_->field(); }
    std::size_t nvars() const noexcept { return ring_ ? ring_->nvars() : 0; }

    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return is_zero() || (size() == 1 && mono::degree(exponents(0)) == 0); }

    std::span<const Exponent> exponents(std::size_t i) const noexcept { return {exps_.data() + i * n(), n()}; }
    FieldElement coeff(std::size_t i) const noexcept { return coeffs_[i]; }

    std::span<const Exponent> leading_monomial() const {
        if (is_zero()) fail(ErrorCode::InvalidArgument, "leading monomial of zero");
        return exponents(0);
    }
    FieldElement leading_coeff() const noexcept { return is_zero() ? FieldElement{0} : coeffs_[0]; }

    /// Maximum total degree of a term; 0 for the zero polynomial.
    unsigned total_degree() const noexcept {
        unsigned d = 0;
        for (std::size_t i = 0; i < size(); ++i) d = std::max(d, mono::degree(exponents(i)));
        return d;
    }

    /// Common total degree of all terms; zero is homogeneous of degree 0.
    std::optional<unsigned> homogeneous_degree() const noexcept {
        if (is_zero()) return 0u;
        unsigned d = mono::degree(exponents(0));
        for (std::size_t i = 1; i < size(); ++i)
            if (mono::degree(exponents(i)) != d) return std::nullopt;
        return d;
    }

    /// Coefficient of the monomial m (zero when absent).
    FieldElement coefficient_of(std::span<const Exponent> m) const {
        const auto& ord = ring_->order();
        std::size_t lo = 0, hi = size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            int c = ord.compare(exponents(mid).data(), m.data(), n());
            if (c == 0) return coeffs_[mid];
            if (c > 0) lo = mid + 1;
            else hi = mid;
        }
        return {0};
    }

    bool uses_variable(std::size_t v) const noexcept {
        for (std::size_t i = 0; i < size(); ++i)
            if (exps_[i * n() + v] != 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        const auto& F = field();
        for (auto& c : r.coeffs_) c = F.neg(c);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return axpy(a, FieldElement{1}, nullptr, b);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return axpy(a, a.field().neg(FieldElement{1}), nullptr, b);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return mul(a, b);
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(FieldElement c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r = *this;
        const auto& F = field();
        for (auto& x : r.coeffs_) x = F.mul(x, c);
        return r;
    }

    /// c * m * this.
    Polynomial shifted(std::span<const Exponent> m, FieldElement c) const {
        Polynomial r(ring_);
        if (c.is_zero() || is_zero()) return r;
        const auto& F = field();
        r.exps_.resize(exps_.size());
        r.coeffs_.resize(size());
        for (std::size_t i = 0; i < size(); ++i) {
            mono::multiply_into(exps_.data() + i * n(), m.data(), r.exps_.data() + i * n(), n());
            r.coeffs_[i] = F.mul(coeffs_[i], c);
        }
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field().inv(coeffs_[0]));
    }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(ring_, FieldElement{1});
        Polynomial base = *this;
        while (k != 0) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k != 0) base = base * base;
        }
        return r;
    }

    /// a + c * m * b in one merge pass (m == nullptr means m = 1).
    static Polynomial axpy(const Polynomial& a, FieldElement c, const Exponent* m, const Polynomial& b) {
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        if (c.is_zero() || b.is_zero()) {
            r = a;
            return r;
        }
        const std::size_t n = r.n();
        const auto& F = r.field();
        const auto& ord = r.ring_->order();
        r.exps_.reserve(a.exps_.size() + b.exps_.size());
        r.coeffs_.reserve(a.size() + b.size());
        std::vector<Exponent> tmp(n);
        std::size_t i = 0, j = 0;
        auto load_b = [&](std::size_t jj) {
            if (m != nullptr) mono::multiply_into(b.exps_.data() + jj * n, m, tmp.data(), n);
            else std::copy_n(b.exps_.data() + jj * n, n, tmp.data());
        };
        if (j < b.size()) load_b(j);
        while (i < a.size() && j < b.size()) {
            const Exponent* ea = a.exps_.data() + i * n;
            int cmp = ord.compare(ea, tmp.data(), n);
            if (cmp > 0) {
                r.exps_.insert(r.exps_.end(), ea, ea + n);
                r.coeffs_.push_back(a.coeffs_[i++]);
            } else if (cmp < 0) {
                r.exps_.insert(r.exps_.end(), tmp.begin(), tmp.end());
                r.coeffs_.push_back(F.mul(c, b.coeffs_[j++]));
                if (j < b.size()) load_b(j);
            } else {
                FieldElement s = F.add(a.coeffs_[i++], F.mul(c, b.coeffs_[j++]));
                if (!s.is_zero()) {
                    r.exps_.insert(r.exps_.end(), ea, ea + n);
                    r.coeffs_.push_back(s);
                }
                if (j < b.size()) load_b(j);
            }
        }
        for (; i < a.size(); ++i) {
            r.exps_.insert(r.exps_.end(), a.exps_.begin() + i * n, a.exps_.begin() + (i + 1) * n);
            r.coeffs_.push_back(a.coeffs_[i]);
        }
        while (j < b.size()) {
            r.exps_.insert(r.exps_.end(), tmp.begin(), tmp.end());
            r.coeffs_.push_back(F.mul(c, b.coeffs_[j++]));
            if (j < b.size()) load_b(j);
        }
        return r;
    }

    /// Polynomial with the leading term removed.
    Polynomial tail() const {
        Polynomial r(ring_);
        if (size() > 1) {
            r.exps_.assign(exps_.begin() + n(), exps_.end());
            r.coeffs_.assign(coeffs_.begin() + 1, coeffs_.end());
        }
        return r;
    }

    /// The ring-order-leading term as its own polynomial.
    Polynomial leading_term() const {
        if (is_zero()) return *this;
        return term(ring_, exponents(0), coeffs_[0]);
    }

    /// Rewrites this polynomial in `target`, sending variable i to variable map[i]
    /// (map[i] < 0 requires that variable i does not occur).
    Polynomial embed(const Ring& target, const std::vector<int>& map) const {
        if (map.size() != n()) fail(ErrorCode::DimensionMismatch, "variable map length");
        if (target->field() != field()) fail(ErrorCode::RingMismatch, "embedding across fields");
        const std::size_t m = target->nvars();
        std::vector<Exponent> flat(size() * m, 0);
        for (std::size_t t = 0; t < size(); ++t) {
            for (std::size_t v = 0; v < n(); ++v) {
                Exponent e = exps_[t * n() + v];
                if (e == 0) continue;
                if (map[v] < 0) fail(ErrorCode::InvalidArgument, "variable " + ring_->names()[v] + " has no image");
                flat[t * m + map[v]] += e;
            }
        }
        Polynomial r(target);
        r.assign_unsorted(std::move(flat), coeffs_);
        return r;
    }

    /// Same polynomial in a ring with identical variables but another order.
    Polynomial reorder(const Ring& target) const {
        if (target->names() != ring_->names()) fail(ErrorCode::RingMismatch, "reorder needs the same variables");
        std::vector<int> id(n());
        std::iota(id.begin(), id.end(), 0);
        return embed(target, id);
    }

    /// Substitutes x_i -> images[i]; all images share one target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != n()) fail(ErrorCode::DimensionMismatch, "substitution needs one image per variable");
        if (images.empty()) return *this;
        const Ring& target = images[0].ring();
        for (const auto& im : images) {
            if (!same_ring(im.ring(), target)) fail(ErrorCode::RingMismatch, "substitution images");
        }
        std::vector<std::vector<Polynomial>> powers(n());
        Polynomial result(target);
        for (std::size_t t = 0; t < size(); ++t) {
            Polynomial prod = constant(target, coeffs_[t]);
            for (std::size_t v = 0; v < n(); ++v) {
                Exponent e = exps_[t * n() + v];
                if (e == 0) continue;
                auto& pw = powers[v];
                if (pw.empty()) pw.push_back(constant(target, FieldElement{1}));
                while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
                prod = prod * pw[e];
            }
            result += prod;
        }
        return result;
    }

    /// Value at a point whose coordinates live in `target`, a field of the same
    /// characteristic. Coefficients must lie in the prime field unless the
    /// fields coincide.
    FieldElement evaluate(std::span<const FieldElement> point, const Field& target) const {
        if (point.size() != n()) fail(ErrorCode::DimensionMismatch, "point length");
        const Field& F = field();
        const bool same = F == target;
        if (!same && target.characteristic() != F.characteristic())
            fail(ErrorCode::RingMismatch, "evaluation field has another characteristic");
        FieldElement acc{0};
        for (std::size_t t = 0; t < size(); ++t) {
            FieldElement c = coeffs_[t];
            if (!same && !F.in_prime_field(c))
                fail(ErrorCode::RingMismatch, "coefficient outside the prime field");
            FieldElement v = c;
            for (std::size_t i = 0; i < n() && !v.is_zero(); ++i) {
                Exponent e = exps_[t * n() + i];
                if (e != 0) v = target.mul(v, target.pow(point[i], e));
            }
            acc = target.add(acc, v);
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
    }

    /// Canonical-form check (sortedness, no zero coefficients) for tests.
    bool is_canonical() const {
        if (coeffs_.size() * n() != exps_.size()) return false;
        for (std::size_t i = 0; i < size(); ++i) {
            if (coeffs_[i].is_zero() || coeffs_[i].code >= field().order()) return false;
            if (i > 0 && ring_->order().compare(exponents(i - 1), exponents(i)) <= 0) return false;
        }
        return true;
    }

    std::string to_string() const;

   private:
    std::size_t n() const noexcept { return ring_ ? ring_->nvars() : 0; }

    void check_ring(const Polynomial& b) const {
        if (!same_ring(ring_, b.ring_)) fail(ErrorCode::RingMismatch, "operands live in different rings");
    }

    void assign_unsorted(std::vector<Exponent> flat, std::vector<FieldElement> cs) {
        const std::size_t k = cs.size();
        const std::size_t nv = n();
        const auto& ord = ring_->order();
        const auto& F = field();
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            return ord.compare(flat.data() + x * nv, flat.data() + y * nv, nv) > 0;
        });
        exps_.clear();
        coeffs_.clear();
        exps_.reserve(flat.size());
        coeffs_.reserve(k);
        for (std::size_t a = 0; a < k;) {
            std::size_t b = a;
            FieldElement s{0};
            while (b < k && std::equal(flat.begin() + idx[a] * nv, flat.begin() + (idx[a] + 1) * nv,
                                       flat.begin() + idx[b] * nv)) {
                s = F.add(s, cs[idx[b]]);
                ++b;
            }
            if (!s.is_zero()) {
                exps_.insert(exps_.end(), flat.begin() + idx[a] * nv, flat.begin() + (idx[a] + 1) * nv);
                coeffs_.push_back(s);
            }
            a = b;
        }
    }

    static Polynomial mul(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        const std::size_t n = r.n();
        const auto& F = r.field();
        if (a.size() == 1) return b.shifted(a.exponents(0), a.coeffs_[0]);
        if (b.size() == 1) return a.shifted(b.exponents(0), b.coeffs_[0]);
        std::vector<Exponent> flat(a.size() * b.size() * n);
        std::vector<FieldElement> cs(a.size() * b.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j, ++k) {
                mono::multiply_into(a.exps_.data() + i * n, b.exps_.data() + j * n, flat.data() + k * n, n);
                cs[k] = F.mul(a.coeffs_[i], b.coeffs_[j]);
            }
        }
        r.assign_unsorted(std::move(flat), std::move(cs));
        return r;
    }

    Ring ring_;
    std::vector<Exponent> exps_;
    std::vector<FieldElement> coeffs_;
};

inline std::string render_monomial(const PolynomialRing& ring, std::span<const Exponent> m) {
    std::string s;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.names()[v];
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s.empty() ? "1" : s;
}

/// Terms in ring order, explicit `*`, `^` for powers; parseable by `parse`.
inline std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    const auto& F = field();
    for (std::size_t t = 0; t < size(); ++t) {
        if (t > 0) s += " + ";
        auto m = exponents(t);
        bool unit_monomial = mono::degree(m) == 0;
        FieldElement c = coeffs_[t];
        if (unit_monomial) {
            s += F.render(c, ring_->generator_symbol());
        } else {
            if (c.code != 1) s += F.render(c, ring_->generator_symbol()) + "*";
            s += render_monomial(*ring_, m);
        }
    }
    return s;
}

}  // namespace sepinv

#endif
