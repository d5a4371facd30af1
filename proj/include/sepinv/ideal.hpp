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

#ifndef SEPINV_IDEAL_HPP
#define SEPINV_IDEAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace sepinv {

namespace detail {

inline std::string fresh_name(const PolynomialRing& ring, std::string base) {
    while (ring.index_of(base)) base += "_";
    return base;
}

// Largest subset S of variables such that no monomial in `lms` is supported in S.
inline std::size_t max_independent_set(const std::vector<std::uint64_t>& supports, std::size_t n) {
    std::size_t best = 0;
    auto blocked = [&](std::uint64_t s) {
        for (auto m : supports)
            if ((m & ~s) == 0) return true;
        return false;
    };
    // depth-first over variables in order; include-branch first
    auto dfs = [&](auto&& self, std::size_t v, std::uint64_t s, std::size_t size) -> void {
        if (size + (n - v) <= best) return;
        if (v == n) {
            best = size;
            return;
        }
        std::uint64_t with = s | (std::uint64_t{1} << v);
        if (!blocked(with)) self(self, v + 1, with, size + 1);
        self(self, v + 1, s, size);
    };
    dfs(dfs, 0, 0, 0);
    return best;
}

}  // namespace detail

/// Krull dimension of K[x]/(monomials), the monomials given by exponent vectors.
inline std::size_t monomial_ideal_dimension(const std::vector<Monomial>& lms, std::size_t n) {
    if (n > 64) fail(ErrorCode::ResourceCapExceeded, "dimension search supports at most 64 variables");
    std::vector<std::uint64_t> supports;
    for (const auto& m : lms) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) s |= std::uint64_t{1} << i;
        if (s == 0) fail(ErrorCode::UnitIdeal, "dimension of the unit ideal");
        supports.push_back(s);
    }
    return detail::max_independent_set(supports, n);
}

/// dim K[x]/I, the largest set of variables independent modulo the
/// leading-monomial ideal.
inline std::size_t dimension(const Ideal& I) {
    if (I.is_unit()) fail(ErrorCode::UnitIdeal, "dimension of the unit ideal");
    return monomial_ideal_dimension(I.leading_monomials(), I.ring()->nvars());
}

/// f^p, computed termwise since Frobenius is additive in characteristic p.
inline Polynomial frobenius(const Polynomial& f) {
    const Field& F = f.field();
    const unsigned p = F.characteristic();
    std::vector<std::pair<Monomial, FieldElement>> terms;
    terms.reserve(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
        Monomial m(f.exponents(t).begin(), f.exponents(t).end());
        for (auto& e : m) {
            if (static_cast<unsigned long>(e) * p > 0xFFFF) fail(ErrorCode::ResourceCapExceeded, "exponent overflow");
            e = static_cast<Exponent>(e * p);
        }
        terms.emplace_back(std::move(m), F.pow(f.coeff(t), p));
    }
    return Polynomial::from_terms(f.ring(), std::move(terms));
}

/// Generators of I intersected with K[remaining variables], returned in the
/// subring of the remaining variables (grevlex). The block order puts
/// `block` first.
inline Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& block) {
    const Ring& R = I.ring();
    const std::size_t n = R->nvars();
    std::vector<bool> in_block(n, false);
    for (auto v : block) {
        if (v >= n) fail(ErrorCode::InvalidArgument, "elimination variable out of range");
        in_block[v] = true;
    }
    std::vector<std::string> names, rest_names;
    std::vector<int> to_big(n), to_small(n, -1);
    std::size_t k = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (in_block[v]) {
            to_big[v] = static_cast<int>(k++);
            names.push_back(R->names()[v]);
        }
    const std::size_t split = k;
    for (std::size_t v = 0; v < n; ++v)
        if (!in_block[v]) {
            to_big[v] = static_cast<int>(k++);
            names.push_back(R->names()[v]);
            to_small[v] = static_cast<int>(rest_names.size());
            rest_names.push_back(R->names()[v]);
        }
    Ring big = PolynomialRing::make(R->field(), names, MonomialOrder::block(split));
    Ring small = PolynomialRing::make(R->field(), rest_names, MonomialOrder::grevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.embed(big, to_big));
    auto gb = groebner_basis(gens);
    std::vector<int> back(n, -1);
    for (std::size_t v = 0; v < n; ++v)
        if (!in_block[v]) back[to_big[v]] = to_small[v];
    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        bool free = true;
        for (std::size_t b = 0; b < split && free; ++b) free = !g.uses_variable(b);
        if (free) out.push_back(g.embed(small, back));
    }
    return Ideal::from_reduced_basis(small, std::move(out));
}

/// I intersected with J via elimination of a tag t from t*I + (1-t)*J.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
    const Ring& R = I.ring();
    if (!same_ring(R, J.ring())) fail(ErrorCode::RingMismatch, "intersection of ideals in different rings");
    if (I.is_zero() || J.is_zero()) return Ideal(R, {});
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    const std::size_t n = R->nvars();
    std::vector<std::string> names{detail::fresh_name(*R, "_t")};
    names.insert(names.end(), R->names().begin(), R->names().end());
    Ring T = PolynomialRing::make(R->field(), names, MonomialOrder::block(1));
    std::vector<int> up(n);
    std::iota(up.begin(), up.end(), 1);
    Polynomial t = Polynomial::variable(T, 0);
    Polynomial one_minus_t = Polynomial::constant(T, FieldElement{1}) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.groebner_basis()) gens.push_back(t * f.embed(T, up));
    for (const auto& g : J.groebner_basis()) gens.push_back(one_minus_t * g.embed(T, up));
    auto gb = groebner_basis(gens);
    std::vector<int> down(n + 1, -1);
    for (std::size_t v = 0; v < n; ++v) down[v + 1] = static_cast<int>(v);
    std::vector<Polynomial> out;
    for (const auto& g : gb)
        if (!g.uses_variable(0)) out.push_back(g.embed(R, down));
    if (R->order() == MonomialOrder::grevlex()) return Ideal::from_reduced_basis(R, std::move(out));
    return Ideal(R, std::move(out));
}

/// f in sqrt(I)? A p-th power witness f^(p^k) in I is tried first; otherwise
/// 1 in I + (1 - t f) decides it.
inline bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (!same_ring(f.ring(), I.ring())) fail(ErrorCode::RingMismatch, "radical membership across rings");
    if (f.is_zero() || I.is_unit()) return true;
    const Ring& R = I.ring();
    Polynomial power = f;
    for (int k = 0; k < 4; ++k) {
        if (power.total_degree() > 64 || power.size() > 4000) break;
        if (I.contains(power)) return true;
        power = frobenius(power);
    }
    const std::size_t n = R->nvars();
    std::vector<std::string> names{detail::fresh_name(*R, "_t")};
    names.insert(names.end(), R->names().begin(), R->names().end());
    Ring T = PolynomialRing::make(R->field(), names, MonomialOrder::grevlex());
    std::vector<int> up(n);
    std::iota(up.begin(), up.end(), 1);
    std::vector<Polynomial> gens;
    for (const auto& g : I.groebner_basis()) gens.push_back(g.embed(T, up));
    gens.push_back(Polynomial::constant(T, FieldElement{1}) - Polynomial::variable(T, 0) * f.embed(T, up));
    auto gb = groebner_basis(gens);
    return gb.size() == 1 && gb[0].is_constant();
}

/// sqrt(I) contains every generator of J.
inline bool radical_contains(const Ideal& I, const Ideal& J) {
    for (const auto& g : J.generators())
        if (!radical_membership(g, I)) return false;
    return true;
}

}  // namespace sepinv

#endif
