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

#ifndef SEPINV_AFFINE_HPP
#define SEPINV_AFFINE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "polynomial.hpp"

namespace sepinv {

/// Rank of a row-major rows x cols matrix over F (Gaussian elimination).
inline std::size_t matrix_rank(const Field& F, std::vector<FieldElement> a, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c].is_zero()) ++piv;
        if (piv == rows) continue;
        for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
        FieldElement inv = F.inv(a[rank * cols + c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r * cols + c].is_zero()) continue;
            FieldElement f = F.mul(a[r * cols + c], inv);
            for (std::size_t k = c; k < cols; ++k)
                a[r * cols + k] = F.sub(a[r * cols + k], F.mul(f, a[rank * cols + k]));
        }
        ++rank;
    }
    return rank;
}

/// x -> A x + b on F^n. Points are column vectors; on functions the map acts
/// by f -> f o sigma.
class AffineMap {
   public:
    AffineMap(Field field, std::size_t n, std::vector<FieldElement> matrix, std::vector<FieldElement> translation)
        : field_(std::move(field)), n_(n), matrix_(std::move(matrix)), translation_(std::move(translation)) {
        if (matrix_.size() != n_ * n_) fail(ErrorCode::DimensionMismatch, "matrix must be n x n");
        if (translation_.empty()) translation_.assign(n_, FieldElement{0});
        if (translation_.size() != n_) fail(ErrorCode::DimensionMismatch, "translation length");
        if (matrix_rank(field_, matrix_, n_, n_) != n_) fail(ErrorCode::InvalidArgument, "matrix is not invertible");
    }

    static AffineMap identity(const Field& field, std::size_t n) {
        std::vector<FieldElement> m(n * n, FieldElement{0});
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] = FieldElement{1};
        return AffineMap(field, n, std::move(m), {});
    }

    /// Integer entries, row-major, reduced into the field.
    static AffineMap from_integers(const Field& field, const std::vector<std::vector<long long>>& rows,
                                   const std::vector<long long>& translation = {}) {
        const std::size_t n = rows.size();
        std::vector<FieldElement> m;
        for (const auto& r : rows) {
            if (r.size() != n) fail(ErrorCode::DimensionMismatch, "matrix must be square");
            for (auto v : r) m.push_back(field.from_int(v));
        }
        std::vector<FieldElement> b;
        for (auto v : translation) b.push_back(field.from_int(v));
        return AffineMap(field, n, std::move(m), std::move(b));
    }

    const Field& field() const noexcept { return field_; }
    std::size_t dimension() const noexcept { return n_; }
    FieldElement entry(std::size_t i, std::size_t j) const noexcept { return matrix_[i * n_ + j]; }
    FieldElement shift(std::size_t i) const noexcept { return translation_[i]; }
    const std::vector<FieldElement>& matrix() const noexcept { return matrix_; }
    const std::vector<FieldElement>& translation() const noexcept { return translation_; }

    bool is_linear() const noexcept {
        for (auto t : translation_)
            if (!t.is_zero()) return false;
        return true;
    }

    bool is_identity() const noexcept { return *this == identity(field_, n_); }

    /// Image of a point with coordinates in `target` (prime-field entries lift).
    std::vector<FieldElement> apply(std::span<const FieldElement> x, const Field& target) const {
        if (x.size() != n_) fail(ErrorCode::DimensionMismatch, "point length");
        std::vector<FieldElement> y(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            FieldElement acc = lift(translation_[i], target);
            for (std::size_t j = 0; j < n_; ++j) acc = target.add(acc, target.mul(lift(matrix_[i * n_ + j], target), x[j]));
            y[i] = acc;
        }
        return y;
    }

    std::vector<FieldElement> apply(std::span<const FieldElement> x) const { return apply(x, field_); }

    /// (this o other)(x) = this(other(x)).
    friend AffineMap operator*(const AffineMap& s, const AffineMap& t) {
        if (s.n_ != t.n_) fail(ErrorCode::DimensionMismatch, "composing maps of different dimensions");
        const auto& F = s.field_;
        const std::size_t n = s.n_;
        std::vector<FieldElement> m(n * n, FieldElement{0});
        std::vector<FieldElement> b = s.translation_;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                FieldElement acc{0};
                for (std::size_t k = 0; k < n; ++k) acc = F.add(acc, F.mul(s.matrix_[i * n + k], t.matrix_[k * n + j]));
                m[i * n + j] = acc;
            }
            for (std::size_t k = 0; k < n; ++k) b[i] = F.add(b[i], F.mul(s.matrix_[i * n + k], t.translation_[k]));
        }
        return AffineMap(F, n, std::move(m), std::move(b), Unchecked{});
    }

    AffineMap inverse() const {
        const auto& F = field_;
        const std::size_t n = n_;
        std::vector<FieldElement> a = matrix_;
        std::vector<FieldElement> inv(n * n, FieldElement{0});
        for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = FieldElement{1};
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (a[piv * n + c].is_zero()) ++piv;
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a[piv * n + k], a[c * n + k]);
                std::swap(inv[piv * n + k], inv[c * n + k]);
            }
            FieldElement d = F.inv(a[c * n + c]);
            for (std::size_t k = 0; k < n; ++k) {
                a[c * n + k] = F.mul(a[c * n + k], d);
                inv[c * n + k] = F.mul(inv[c * n + k], d);
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || a[r * n + c].is_zero()) continue;
                FieldElement f = a[r * n + c];
                for (std::size_t k = 0; k < n; ++k) {
                    a[r * n + k] = F.sub(a[r * n + k], F.mul(f, a[c * n + k]));
                    inv[r * n + k] = F.sub(inv[r * n + k], F.mul(f, inv[c * n + k]));
                }
            }
        }
        // x = A^{-1}(y - b)
        std::vector<FieldElement> b(n, FieldElement{0});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) b[i] = F.sub(b[i], F.mul(inv[i * n + k], translation_[k]));
        return AffineMap(F, n, std::move(inv), std::move(b), Unchecked{});
    }

    /// rank(A - 1); the codimension of the fixed space of a linear map.
    std::size_t rank_minus_identity() const {
        std::vector<FieldElement> a = matrix_;
        for (std::size_t i = 0; i < n_; ++i) a[i * n_ + i] = field_.sub(a[i * n_ + i], FieldElement{1});
        return matrix_rank(field_, std::move(a), n_, n_);
    }

    /// The n coordinate functions (sigma(x))_i = sum_j A_ij x_j + b_i, written in
    /// `ring` with x_j taken to be variable offset + j.
    std::vector<Polynomial> coordinate_images(const Ring& ring, std::size_t offset = 0) const {
        if (ring->field() != field_) fail(ErrorCode::RingMismatch, "map and ring over different fields");
        if (offset + n_ > ring->nvars()) fail(ErrorCode::DimensionMismatch, "ring too small for the map");
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<std::pair<Monomial, FieldElement>> terms;
            for (std::size_t j = 0; j < n_; ++j) {
                if (matrix_[i * n_ + j].is_zero()) continue;
                Monomial m(ring->nvars(), 0);
                m[offset + j] = 1;
                terms.emplace_back(std::move(m), matrix_[i * n_ + j]);
            }
            if (!translation_[i].is_zero()) terms.emplace_back(Monomial(ring->nvars(), 0), translation_[i]);
            out.push_back(Polynomial::from_terms(ring, std::move(terms)));
        }
        return out;
    }

    friend bool operator==(const AffineMap& a, const AffineMap& b) noexcept {
        return a.n_ == b.n_ && a.matrix_ == b.matrix_ && a.translation_ == b.translation_;
    }

    /// Matrix then translation codes; a total order used for deterministic containers.
    friend bool operator<(const AffineMap& a, const AffineMap& b) noexcept {
        if (a.matrix_ != b.matrix_) return a.matrix_ < b.matrix_;
        return a.translation_ < b.translation_;
    }

   private:
    struct Unchecked {};
    AffineMap(Field field, std::size_t n, std::vector<FieldElement> m, std::vector<FieldElement> b, Unchecked)
        : field_(std::move(field)), n_(n), matrix_(std::move(m)), translation_(std::move(b)) {}

    FieldElement lift(FieldElement c, const Field& target) const {
        if (target == field_) return c;
        if (target.characteristic() != field_.characteristic() || !field_.in_prime_field(c))
            fail(ErrorCode::RingMismatch, "cannot lift map entry into " + target.describe());
        return c;
    }

    Field field_;
    std::size_t n_;
    std::vector<FieldElement> matrix_;
    std::vector<FieldElement> translation_;
};

/// f o sigma: substitutes x_i -> sum_j A_ij x_j + b_i. The ring of f must have
/// exactly sigma's dimension in variables.
inline Polynomial compose_affine(const Polynomial& f, const AffineMap& sigma) {
    if (f.ring()->nvars() != sigma.dimension())
        fail(ErrorCode::DimensionMismatch, "polynomial ring has " + std::to_string(f.ring()->nvars()) +
                                               " variables, map has dimension " + std::to_string(sigma.dimension()));
    return f.substitute(sigma.coordinate_images(f.ring()));
}

}  // namespace sepinv

#endif
