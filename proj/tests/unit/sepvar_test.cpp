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

#include <set>

#include "sepinv/sepvar.hpp"
#include "support/examples.hpp"

using namespace sepinv;
using sepinv::testing::AdditiveExample;
using sepinv::testing::error_of;
using sepinv::testing::parse_all;
using sepinv::testing::QuarticExample;
using sepinv::testing::SignExample;
using sepinv::testing::TwoPlanesExample;

namespace {

// For X = K^n the quantity 2n - dim(sqrt I) is the codimension of V_sep.
void expect_remarks(const SepVarietyModel& m) {
    const std::size_t d = dimension(m.radical());
    EXPECT_EQ(d, m.variety().dimension());
    if (m.variety().is_equidimensional()) EXPECT_EQ(2 * m.variety().dimension() - d, m.variety().dimension());
    for (const auto& g : m.ideal().generators()) EXPECT_TRUE(m.radical().contains(g));
    for (const auto& c : m.components()) EXPECT_EQ(c.dimension, m.variety().component_dimension(c.component));
    EXPECT_LE(m.components().size(), m.group().order() * m.variety().components().size());
}

}  // namespace

TEST(SepVar, DoubledRing) {
    Ring R = PolynomialRing::standard(Field::prime(3), 3);
    Ring D = doubled_ring(R);
    EXPECT_EQ(D->names(), (std::vector<std::string>{"x1", "x2", "x3", "y1", "y2", "y3"}));
}

TEST(SepVar, DifferenceIdeal) {
    Field F = Field::prime(3);
    Ring R = PolynomialRing::standard(F, 1);
    SepVarietyModel triv(enumerate_group(F, 1, {}), VarietyPresentation::affine_space(R), {{"x", parse("x1", R)}});
    ASSERT_EQ(triv.ideal().generators().size(), 1u);
    EXPECT_EQ(triv.ideal().generators()[0], parse("x1 - y1", triv.ring()));

    QuarticExample q;
    SepVarietyModel m = q.model();
    EXPECT_EQ(m.ideal().generators().size(), 5u);
    EXPECT_EQ(m.ideal().generators()[0], parse("x1 - y1", m.ring()));
}

TEST(SepVar, RejectsNonInvariant) {
    QuarticExample q;
    auto invs = q.invariants();
    invs.push_back({"x2", parse("x2", q.R)});
    try {
        SepVarietyModel m(q.group(), q.variety(), invs);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInvariant);
        EXPECT_NE(std::string(e.what()).find("x2"), std::string::npos);
    }
}

TEST(SepVar, RejectsMismatchedInputs) {
    QuarticExample q;
    Ring R3 = PolynomialRing::standard(q.F, 3);
    EXPECT_EQ(error_of([&] { SepVarietyModel(q.group(), VarietyPresentation::affine_space(R3), {}); }),
              ErrorCode::DimensionMismatch);
}

TEST(SepVar, GraphComponentIdeals) {
    QuarticExample q;
    SepVarietyModel m = q.model();
    Ideal id = graph_component_ideal(AffineMap::identity(q.F, 4), Ideal(q.R), m.ring());
    EXPECT_EQ(id, Ideal(m.ring(), parse_all({"y1 - x1", "y2 - x2", "y3 - x3", "y4 - x4"}, m.ring())));
    EXPECT_EQ(dimension(id), 4u);
    Ideal g1 = graph_component_ideal(q.gens[0], Ideal(q.R), m.ring());
    EXPECT_EQ(g1, Ideal(m.ring(), parse_all({"y1 - x1", "y2 - x2", "y3 - x3", "y4 - x3 - x4"}, m.ring())));

    TwoPlanesExample t;
    SepVarietyModel tp = t.model();
    AffineMap flip = AffineMap::from_integers(t.F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
    EXPECT_EQ(dimension(graph_component_ideal(flip, t.variety().component(0), tp.ring())), 2u);
}

TEST(SepVar, Components) {
    QuarticExample q;
    SepVarietyModel m = q.model();
    EXPECT_EQ(m.components().size(), 8u);
    EXPECT_EQ(m.dimension(), 4u);
    TwoPlanesExample t;
    EXPECT_EQ(t.model().components().size(), 4u);
}

TEST(SepVar, Radical) {
    Field F = Field::prime(5);
    Ring R = PolynomialRing::standard(F, 2);
    SepVarietyModel triv(enumerate_group(F, 2, {}), VarietyPresentation::affine_space(R),
                         {{"a", parse("x1", R)}, {"b", parse("x2", R)}});
    EXPECT_EQ(triv.radical(), triv.components()[0].ideal);
    EXPECT_EQ(separating_variety_radical(triv), triv.ideal());

    for (std::uint32_t p : {2u, 3u, 5u}) {
        AdditiveExample a(p);
        SepVarietyModel m = a.model();
        Polynomial d = parse("y1 - x1", m.ring());
        EXPECT_TRUE(m.radical().contains(d.pow(p) - d));
        EXPECT_EQ(m.radical().groebner_basis().size(), 1u);
        expect_remarks(m);
    }

    QuarticExample q;
    SepVarietyModel m = q.model();
    EXPECT_EQ(dimension(m.radical()), 4u);
    EXPECT_TRUE(m.radical().contains(m.ideal()));
    EXPECT_FALSE(m.ideal().contains(m.radical()));
    expect_remarks(m);
    expect_remarks(TwoPlanesExample{}.model());
    expect_remarks(SignExample{}.model());
}

TEST(SepVar, PairwiseCodims) {
    SignExample s;
    SepVarietyModel m = s.model();
    ASSERT_EQ(m.components().size(), 2u);
    EXPECT_EQ(pairwise_intersection_codim(m, 0, 1), Codim(2));
    EXPECT_EQ(pairwise_intersection_codim(m, 0, 0), Codim(0));

    TwoPlanesExample t;
    SepVarietyModel tp = t.model();
    std::size_t id0 = 0, id1 = 0;
    for (std::size_t c = 0; c < tp.components().size(); ++c) {
        const auto& gc = tp.components()[c];
        if (gc.element == 0 && gc.component == 0) id0 = c;
        if (gc.element == 0 && gc.component == 1) id1 = c;
    }
    EXPECT_EQ(pairwise_intersection_codim(tp, id0, id1), Codim(2));
    for (std::size_t a = 0; a < tp.components().size(); ++a)
        for (std::size_t b = 0; b < tp.components().size(); ++b) {
            EXPECT_EQ(vsep_intersection_codim(tp, a, b), xside_intersection_codim(tp, a, b));
            EXPECT_EQ(tp.pairwise_codim(a, b), tp.pairwise_codim(b, a));
        }

    AdditiveExample a(3);
    SepVarietyModel add = a.model();
    EXPECT_TRUE(add.pairwise_codim(0, 1).is_infinite());
}

TEST(SepVar, Connectivity) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        SepVarietyModel m = AdditiveExample(p).model();
        EXPECT_FALSE(connected_in_codim(m, 0));
        EXPECT_FALSE(connected_in_codim(m, 1));
    }
    QuarticExample q;
    EXPECT_TRUE(connected_in_codim(q.model(), 1));
    TwoPlanesExample t;
    SepVarietyModel tp = t.model();
    EXPECT_FALSE(connected_in_codim(tp, 1));
    EXPECT_TRUE(connected_in_codim(tp, 2));
    EXPECT_FALSE(connected_in_codim(t.variety(), 1));
    EXPECT_TRUE(connected_in_codim(t.variety(), 2));
}

TEST(SepVar, GraphConnected) {
    EXPECT_TRUE(graph_connected(1, [](std::size_t, std::size_t) { return false; }));
    EXPECT_TRUE(graph_connected(3, [](std::size_t a, std::size_t b) { return a + 1 == b || b + 1 == a; }));
    EXPECT_FALSE(graph_connected(3, [](std::size_t a, std::size_t b) { return a + b == 1; }));
}

TEST(SepVar, ReflectionEquivalenceOnExamples) {
    QuarticExample q;
    SepVarietyModel m = q.model();
    auto r = theorem_equivalence_check(m, 1);
    EXPECT_TRUE(r.vsep_connected);
    EXPECT_TRUE(r.x_connected && r.generated_by_k_reflections);
    EXPECT_FALSE(theorem_equivalence_check(m, 0).vsep_connected);

    SepVarietyModel c2 = SignExample{}.model();
    auto k1 = theorem_equivalence_check(c2, 1);
    EXPECT_FALSE(k1.vsep_connected);
    EXPECT_FALSE(k1.generated_by_k_reflections);
    auto k2 = theorem_equivalence_check(c2, 2);
    EXPECT_TRUE(k2.vsep_connected);
    EXPECT_TRUE(k2.generated_by_k_reflections);

    auto tp = theorem_equivalence_check(TwoPlanesExample{}.model(), 2);
    EXPECT_TRUE(tp.vsep_connected && tp.x_connected && tp.generated_by_k_reflections);
}

TEST(SepVar, ReflectionEquivalenceOnRandomGroups) {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 6; ++round) {
        const std::size_t n = round % 2 == 0 ? 3 : 4;
        Field F = Field::prime(n == 3 ? 5 : 3);
        FiniteGroup G = sepinv::testing::random_signed_permutation_group(F, n, rng);
        SepVarietyModel m(G, VarietyPresentation::affine_space(PolynomialRing::standard(F, n)), {});
        for (std::size_t k = 0; k <= n; ++k) EXPECT_NO_THROW(theorem_equivalence_check(m, k));
        EXPECT_TRUE(theorem_equivalence_check(m, n).vsep_connected);
    }
}

TEST(SepVar, PointModelAgreesWithRadical) {
    for (const SepVarietyModel& m : {SignExample{}.model(), TwoPlanesExample{}.model(), AdditiveExample(3).model()}) {
        const Field& F = m.base_ring()->field();
        auto pts = vsep_points(m, F);
        std::set<std::vector<FieldElement>> on;
        for (const auto& [x, y] : pts) {
            std::vector<FieldElement> xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            for (const auto& g : m.radical().groebner_basis()) EXPECT_EQ(g.evaluate(xy, F), F.zero());
            on.insert(xy);
        }
        EXPECT_FALSE(on.empty());
    }
    QuarticExample q;
    EXPECT_EQ(error_of([&] { vsep_points(q.model(), Field::standard(2, 3), 100); }), ErrorCode::EnumerationCapExceeded);
}
