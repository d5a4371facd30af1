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

#ifndef SEPINV_TESTS_SUPPORT_EXAMPLES_HPP
#define SEPINV_TESTS_SUPPORT_EXAMPLES_HPP

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "sepinv/error.hpp"
#include "sepinv/parser.hpp"
#include "sepinv/separating.hpp"

namespace sepinv {

// readable gtest failure messages
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << render(f); }
inline void PrintTo(FieldElement a, std::ostream* os) { *os << a.code; }

}  // namespace sepinv

namespace sepinv::testing {

inline constexpr const char* kF3 = "x1^2*x3*x4 + x1^2*x4^2 + x1*x3^2*x4 + x1*x3*x4^2 + x3^2*x4^2 + x4^4";
inline constexpr const char* kF4 =
    "x1^3*x2 + x1*x2*x3^2 + x1*x3^2*x4 + x1*x3*x4^2 + x2^4 + x2^2*x3^2 + x3^3*x4 + x3^2*x4^2";
inline constexpr const char* kH = "x1^2*x2 + x1*x2^2 + x3^2*x4 + x3*x4^2";

// C2 x C2 x C2 inside GL4(F2) with its invariant-ring generators.
struct QuarticExample {
    Field F = Field::prime(2);
    Ring R = PolynomialRing::standard(F, 4);
    std::vector<AffineMap> gens{
        AffineMap::from_integers(F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}}),
        AffineMap::from_integers(F, {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
        AffineMap::from_integers(F, {{1, 0, 0, 0}, {1, 1, 1, 0}, {0, 0, 1, 0}, {1, 0, 1, 1}})};
    Polynomial f1 = parse("x1", R), f2 = parse("x3", R), f3 = parse(kF3, R), f4 = parse(kF4, R), h = parse(kH, R);
    Polynomial g3 = f1 * h + f3, g4 = f1 * h + f4;

    FiniteGroup group() const { return enumerate_group(F, 4, gens); }
    VarietyPresentation variety() const { return VarietyPresentation::affine_space(R); }
    std::vector<NamedPolynomial> invariants() const {
        return {{"f1", f1}, {"f2", f2}, {"f3", f3}, {"f4", f4}, {"h", h}};
    }
    SepVarietyModel model() const { return SepVarietyModel(group(), variety(), invariants()); }
    SeparatingCandidate candidate() const { return {"A", {{"f1", f1}, {"f2", f2}, {"g3", g3}, {"g4", g4}}, ""}; }
    SeparatingCandidate f1_only() const { return {"f1_only", {{"f1", f1}}, ""}; }
};

// x -> -x on the coordinates 3, 4 of F5^4, acting on two planes through 0.
struct TwoPlanesExample {
    Field F = Field::prime(5);
    Ring R = PolynomialRing::standard(F, 4);
    FiniteGroup group() const {
        return enumerate_group(F, 4, {AffineMap::from_integers(F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}})});
    }
    VarietyPresentation variety() const {
        return VarietyPresentation(R, {Ideal(R, {parse("x1 - x3", R), parse("x2 - x4", R)}),
                                       Ideal(R, {parse("x1 + x3", R), parse("x2 + x4", R)})});
    }
    std::vector<NamedPolynomial> invariants() const { return {{"x1", parse("x1", R)}, {"x2", parse("x2", R)}}; }
    SepVarietyModel model() const { return SepVarietyModel(group(), variety(), invariants()); }
    SeparatingCandidate candidate() const { return {"xbar", invariants(), ""}; }
};

// F_p acting on the line by translation.
struct AdditiveExample {
    explicit AdditiveExample(std::uint32_t p) : F(Field::prime(p)), R(PolynomialRing::standard(F, 1)) {}
    Field F;
    Ring R;
    Polynomial invariant() const { return parse("x1^" + std::to_string(F.characteristic()) + " - x1", R); }
    FiniteGroup group() const { return enumerate_group(F, 1, {AffineMap::from_integers(F, {{1}}, {1})}); }
    SepVarietyModel model() const {
        return SepVarietyModel(group(), VarietyPresentation::affine_space(R), {{"f", invariant()}});
    }
};

// {+-1} on F5^2.
struct SignExample {
    Field F = Field::prime(5);
    Ring R = PolynomialRing::standard(F, 2);
    FiniteGroup group() const { return enumerate_group(F, 2, {AffineMap::from_integers(F, {{-1, 0}, {0, -1}})}); }
    SepVarietyModel model() const {
        return SepVarietyModel(group(), VarietyPresentation::affine_space(R),
                               {{"a", parse("x1^2", R)}, {"b", parse("x1*x2", R)}, {"c", parse("x2^2", R)}});
    }
};

inline std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const Ring& R) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse(t, R));
    return out;
}

/// Sparse random polynomial with up to `terms` terms of degree <= `max_degree`.
inline Polynomial random_polynomial(const Ring& R, std::mt19937_64& rng, std::size_t terms, unsigned max_degree) {
    const Field& F = R->field();
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, R->nvars() - 1);
    std::uniform_int_distribution<long long> coeff(1, static_cast<long long>(F.characteristic()) - 1);
    Polynomial f(R);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(R->nvars(), 0);
        for (unsigned d = deg(rng); d > 0; --d) ++m[var(rng)];
        f += Polynomial::term(R, m, F.from_int(coeff(rng)));
    }
    return f;
}

/// Homogeneous variant: every term has degree exactly `degree`.
inline Polynomial random_form(const Ring& R, std::mt19937_64& rng, std::size_t terms, unsigned degree) {
    const Field& F = R->field();
    std::uniform_int_distribution<std::size_t> var(0, R->nvars() - 1);
    std::uniform_int_distribution<long long> coeff(1, static_cast<long long>(F.characteristic()) - 1);
    Polynomial f(R);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(R->nvars(), 0);
        for (unsigned d = degree; d > 0; --d) ++m[var(rng)];
        f += Polynomial::term(R, m, F.from_int(coeff(rng)));
    }
    return f;
}

/// Random signed permutation matrix in GL_n(F).
inline AffineMap random_signed_permutation(const Field& F, std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution flip(0.5);
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][perm[i]] = flip(rng) ? -1 : 1;
    return AffineMap::from_integers(F, rows);
}

/// Subgroup generated by one to three random signed permutation matrices.
inline FiniteGroup random_signed_permutation_group(const Field& F, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<AffineMap> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(random_signed_permutation(F, n, rng));
    return enumerate_group(F, n, std::move(gens));
}

/// Code of the Error thrown by `f`, or nullopt.
inline std::optional<ErrorCode> error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace sepinv::testing

#endif
