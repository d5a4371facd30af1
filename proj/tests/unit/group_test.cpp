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

#include <gtest/gtest.h>

#include <algorithm>

#include "sepinv/group.hpp"
#include "support/examples.hpp"

using namespace sepinv;
using sepinv::testing::error_of;
using sepinv::testing::QuarticExample;
using sepinv::testing::SignExample;
using sepinv::testing::TwoPlanesExample;

TEST(Codim, OrderingAndInfinity) {
    EXPECT_LT(Codim(1), Codim(2));
    EXPECT_LT(Codim(1000), Codim::infinite());
    EXPECT_TRUE(Codim(2).at_most(2));
    EXPECT_FALSE(Codim::infinite().at_most(1000));
    EXPECT_EQ(Codim::infinite().to_string(), "inf");
    EXPECT_EQ(error_of([] { (void)Codim::infinite().value(); }), ErrorCode::InvalidArgument);
}

TEST(Group, Enumeration) {
    QuarticExample q;
    FiniteGroup G = q.group();
    EXPECT_EQ(G.order(), 8u);
    EXPECT_TRUE(G.element(G.identity_index()).is_identity());
    EXPECT_EQ(enumerate_group(q.F, 4, {}).order(), 1u);
    EXPECT_EQ(enumerate_group(q.F, 4, {AffineMap::identity(q.F, 4)}).order(), 1u);
    Field F3 = Field::prime(3);
    EXPECT_EQ(enumerate_group(F3, 1, {AffineMap::from_integers(F3, {{1}}, {1})}).order(), 3u);
}

TEST(Group, ElementaryAbelian) {
    FiniteGroup G = QuarticExample{}.group();
    for (const auto& a : G.elements()) {
        EXPECT_TRUE((a * a).is_identity());
        for (const auto& b : G.elements()) EXPECT_EQ(a * b, b * a);
    }
}

TEST(Group, ClosedUnderProductsAndInverses) {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 20; ++round) {
        Field F = round % 2 == 0 ? Field::prime(5) : Field::prime(3);
        FiniteGroup G = sepinv::testing::random_signed_permutation_group(F, 3, rng);
        for (const auto& a : G.elements()) {
            EXPECT_TRUE(G.index_of(a.inverse()).has_value());
            for (const auto& b : G.elements()) EXPECT_TRUE(G.index_of(a * b).has_value());
        }
    }
}

TEST(Group, Cap) {
    Field F = Field::prime(7);
    AffineMap shift = AffineMap::from_integers(F, {{1, 0}, {0, 1}}, {1, 0});
    AffineMap other = AffineMap::from_integers(F, {{1, 0}, {0, 1}}, {0, 1});
    EXPECT_EQ(enumerate_group(F, 2, {shift, other}).order(), 49u);
    EXPECT_EQ(error_of([&] { enumerate_group(F, 2, {shift, other}, 48); }), ErrorCode::GroupCapExceeded);
    EXPECT_EQ(error_of([&] { enumerate_group(F, 3, {shift}); }), ErrorCode::DimensionMismatch);
}

TEST(Group, FixedLocusCodims) {
    QuarticExample q;
    auto X = q.variety();
    EXPECT_EQ(fixed_locus_codim(q.gens[0], X), Codim(1));
    EXPECT_EQ(fixed_locus_codim(AffineMap::identity(q.F, 4), X), Codim(0));
    SignExample s;
    auto K2 = VarietyPresentation::affine_space(s.R);
    EXPECT_EQ(fixed_locus_codim(AffineMap::from_integers(s.F, {{-1, 0}, {0, -1}}), K2), Codim(2));
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Field F = Field::prime(p);
        auto line = VarietyPresentation::affine_space(PolynomialRing::standard(F, 1));
        EXPECT_TRUE(fixed_locus_codim(AffineMap::from_integers(F, {{1}}, {1}), line).is_infinite());
    }
}

TEST(Group, FixedLocusCodimOnTwoPlanes) {
    TwoPlanesExample t;
    auto X = t.variety();
    FiniteGroup G = t.group();
    ASSERT_EQ(G.order(), 2u);
    EXPECT_EQ(fixed_locus_codim(G.element(0), X), Codim(0));
    EXPECT_EQ(fixed_locus_codim(G.element(1), X), Codim(2));
}

TEST(Group, FixedLocusCodimMatchesRank) {
    std::mt19937_64 rng(59);
    for (const Field& F : {Field::prime(2), Field::prime(3), Field::prime(5)}) {
        for (std::size_t n : {2u, 3u, 4u}) {
            auto X = VarietyPresentation::affine_space(PolynomialRing::standard(F, n));
            std::uniform_int_distribution<long long> e(0, F.characteristic() - 1);
            for (int round = 0; round < 15; ++round) {
                std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
                for (auto& r : rows)
                    for (auto& v : r) v = e(rng) == 0 ? e(rng) : 0;
                for (std::size_t i = 0; i < n; ++i) rows[i][i] = e(rng) == 0 ? 1 : rows[i][i] + 1;
                AffineMap s = AffineMap::identity(F, n);
                try {
                    s = AffineMap::from_integers(F, rows);
                } catch (const Error&) {
                    continue;
                }
                EXPECT_EQ(fixed_locus_codim(s, X), Codim(s.rank_minus_identity()));
            }
        }
    }
}

TEST(Group, KReflections) {
    QuarticExample q;
    FiniteGroup G = q.group();
    auto X = q.variety();
    EXPECT_TRUE(generated_by(G, k_reflections(G, X, 1)));
    EXPECT_EQ(min_reflection_number(G, X), 1u);
    std::vector<std::size_t> all(G.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    EXPECT_TRUE(generated_by(G, all));
    EXPECT_EQ(k_reflections(G, X, 4), all);

    SignExample s;
    FiniteGroup C2 = s.group();
    auto K2 = VarietyPresentation::affine_space(s.R);
    EXPECT_EQ(k_reflections(C2, K2, 1), std::vector<std::size_t>{0});
    EXPECT_FALSE(generated_by(C2, {0}));
    EXPECT_EQ(min_reflection_number(C2, K2), 2u);

    EXPECT_EQ(min_reflection_number(enumerate_group(q.F, 4, {}), X), 0u);
    EXPECT_EQ(min_reflection_number(TwoPlanesExample{}.group(), TwoPlanesExample{}.variety()), 2u);
}

TEST(Group, NotGeneratedByFixedPointElements) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        sepinv::testing::AdditiveExample a(p);
        auto line = VarietyPresentation::affine_space(a.R);
        EXPECT_EQ(error_of([&] { min_reflection_number(a.group(), line); }),
                  ErrorCode::NotGeneratedByFixedPointElements);
        EXPECT_FALSE(generated_by_fixed_point_elements(a.group(), line, fixed_locus_codims(a.group(), line)));
    }
}

TEST(Group, KReflectionsMonotone) {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 10; ++round) {
        Field F = Field::prime(3);
        FiniteGroup G = sepinv::testing::random_signed_permutation_group(F, 4, rng);
        auto X = VarietyPresentation::affine_space(PolynomialRing::standard(F, 4));
        auto codims = fixed_locus_codims(G, X);
        EXPECT_EQ(codims[0], Codim(0));
        for (std::size_t k = 0; k < 4; ++k) {
            auto a = k_reflections(codims, k), b = k_reflections(codims, k + 1);
            EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        }
    }
}

TEST(Variety, Presentation) {
    TwoPlanesExample t;
    auto X = t.variety();
    EXPECT_EQ(X.dimension(), 2u);
    EXPECT_EQ(X.ambient_dimension(), 4u);
    EXPECT_TRUE(X.is_equidimensional());
    EXPECT_FALSE(X.is_affine_space());
    EXPECT_EQ(X.image_component(t.group().element(1), 0), 1u);
    EXPECT_NO_THROW(X.check_permuted_by(t.group().generators()));
    AffineMap swap = AffineMap::from_integers(t.F, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    EXPECT_THROW(X.check_permuted_by({swap}), Error);
    std::vector<FieldElement> origin(4, t.F.zero());
    EXPECT_TRUE(X.contains_point(origin, t.F));
    std::vector<FieldElement> off{t.F.one(), t.F.zero(), t.F.zero(), t.F.zero()};
    EXPECT_FALSE(X.contains_point(off, t.F));
    EXPECT_EQ(error_of([&] { VarietyPresentation(t.R, {Ideal(t.R, {parse("1", t.R)})}); }), ErrorCode::UnitIdeal);
}

TEST(Invariance, Examples) {
    QuarticExample q;
    FiniteGroup G = q.group();
    EXPECT_TRUE(is_invariant(q.f4, G));
    EXPECT_TRUE(is_invariant(q.h, G));
    EXPECT_FALSE(is_invariant(parse("x2", q.R), G));
    FiniteGroup trivial = enumerate_group(q.F, 4, {});
    EXPECT_TRUE(is_invariant(parse("x2", q.R), trivial));
    TwoPlanesExample t;
    EXPECT_FALSE(is_invariant(parse("x3", t.R), t.group(), t.variety()));
    EXPECT_TRUE(is_invariant(parse("x3^2", t.R), t.group(), t.variety()));
    // anti-invariant, but zero on X
    Polynomial odd = parse("x1*x4 - x2*x3", t.R);
    EXPECT_FALSE(is_invariant(odd, t.group()));
    EXPECT_TRUE(is_invariant(odd, t.group(), t.variety()));
}
