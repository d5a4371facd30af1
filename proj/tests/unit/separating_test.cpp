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

#include "sepinv/separating.hpp"
#include "support/examples.hpp"

using namespace sepinv;
using sepinv::testing::AdditiveExample;
using sepinv::testing::error_of;
using sepinv::testing::QuarticExample;
using sepinv::testing::SignExample;
using sepinv::testing::TwoPlanesExample;

namespace {

struct Quartic : ::testing::Test {
    static void SetUpTestSuite() { model = new SepVarietyModel(QuarticExample{}.model()); }
    static void TearDownTestSuite() {
        delete model;
        model = nullptr;
    }
    static SepVarietyModel* model;
    QuarticExample q;
};
SepVarietyModel* Quartic::model = nullptr;

SeparatingCandidate all_invariants(const SepVarietyModel& m) { return {"all", m.invariants(), ""}; }

}  // namespace

TEST_F(Quartic, SymbolicCheck) {
    EXPECT_TRUE(verify_separating_symbolic(q.candidate(), *model));
    EXPECT_FALSE(verify_separating_symbolic(q.f1_only(), *model));
    EXPECT_EQ(dimension(candidate_ideal(q.f1_only(), *model)), 7u);
    EXPECT_TRUE(verify_separating_symbolic(all_invariants(*model), *model));
    SeparatingCandidate three{"three", {{"f1", q.f1}, {"f2", q.f2}, {"g3", q.g3}}, ""};
    EXPECT_FALSE(verify_separating_symbolic(three, *model));
}

TEST_F(Quartic, PointChecks) {
    for (const Field& F : {Field::prime(2), Field::standard(2, 2), Field::standard(2, 3)}) {
        PointCheck pc = check_separating_points(q.candidate(), *model, F);
        EXPECT_TRUE(pc.separating) << F.describe();
        EXPECT_EQ(pc.points, F.order() * F.order() * F.order() * F.order());
        EXPECT_FALSE(pc.witness.has_value());
    }
    PointCheck bad = check_separating_points(q.f1_only(), *model, Field::prime(2));
    EXPECT_FALSE(bad.separating);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_EQ(bad.witness->first[0], bad.witness->second[0]);
    // orbit count by Burnside: average number of fixed points
    std::size_t fixed = 0;
    for (const auto& g : model->group().elements()) fixed += std::size_t{1} << (4 - g.rank_minus_identity());
    EXPECT_EQ(bad.orbits * model->group().order(), fixed);
}

TEST_F(Quartic, RejectsNonInvariantMembers) {
    SeparatingCandidate bad{"bad", {{"x2", parse("x2", q.R)}}, ""};
    EXPECT_EQ(error_of([&] { verify_separating_symbolic(bad, *model); }), ErrorCode::NotInvariant);
    EXPECT_EQ(error_of([&] { check_separating_points(q.candidate(), *model, Field::prime(3)); }),
              ErrorCode::RingMismatch);
    EXPECT_EQ(error_of([&] { check_separating_points(q.candidate(), *model, Field::standard(2, 3), 1000); }),
              ErrorCode::EnumerationCapExceeded);
}

TEST_F(Quartic, Audit) {
    AuditReport a = corollary_audit(*model, {{q.candidate(), q.f1_only()}, {}, {}, true});
    EXPECT_TRUE(a.refusals.empty());
    EXPECT_TRUE(a.conclusion_drawn());
    EXPECT_EQ(a.cm_status, CmStatus::Automatic);
    EXPECT_EQ(a.gamma_sep_upper_bound, 4u);
    EXPECT_EQ(a.min_reflection_number, 1u);
    EXPECT_EQ(a.theorem_k, 0u);
    EXPECT_TRUE(a.theorem_applies);
    ASSERT_EQ(a.ideals.size(), 3u);
    EXPECT_EQ(a.ideals[0].defect->cmdef, 2u);
    EXPECT_EQ(a.ideals[1].defect->cmdef, 1u);
    EXPECT_EQ(a.ideals[2].defect->cmdef, 0u);
    for (const auto& d : a.ideals) {
        EXPECT_TRUE(d.same_radical);
        EXPECT_LE(*a.min_reflection_number, d.defect->cmdef + 1);
    }
}

TEST(Separating, TrivialGroup) {
    Field F = Field::prime(3);
    Ring R = PolynomialRing::standard(F, 1);
    SepVarietyModel m(enumerate_group(F, 1, {}), VarietyPresentation::affine_space(R), {{"x", parse("x1", R)}});
    SeparatingCandidate S{"x", {{"x", parse("x1", R)}}, ""};
    EXPECT_TRUE(verify_separating_symbolic(S, m));
    EXPECT_TRUE(verify_separating_points(S, m, F));
    SeparatingCandidate sq{"x2", {{"x2", parse("x1^2", R)}}, ""};
    EXPECT_FALSE(verify_separating_symbolic(sq, m));
    EXPECT_FALSE(verify_separating_points(sq, m, F));
}

TEST(Separating, TwoPlanes) {
    TwoPlanesExample t;
    SepVarietyModel m = t.model();
    EXPECT_TRUE(verify_separating_symbolic(t.candidate(), m));
    EXPECT_TRUE(verify_separating_points(t.candidate(), m, t.F));
    AuditReport a = corollary_audit(m, {{t.candidate()}, {}, {}, true});
    EXPECT_FALSE(a.conclusion_drawn());
    EXPECT_EQ(a.cm_status, CmStatus::Computed);
    EXPECT_EQ(a.x_cmdef, 1u);
    EXPECT_EQ(a.x_cohen_macaulay, false);
    EXPECT_EQ(a.min_reflection_number, 2u);
    EXPECT_EQ(a.gamma_sep_upper_bound, 2u);
    ASSERT_EQ(a.refusals.size(), 1u);
    EXPECT_NE(a.refusals[0].find("Cohen-Macaulay"), std::string::npos);
    auto asserted = corollary_audit(m, {{t.candidate()}, {}, true, true});
    EXPECT_EQ(asserted.cm_status, CmStatus::Asserted);
    EXPECT_FALSE(asserted.conclusion_drawn());
    ASSERT_EQ(asserted.refusals.size(), 1u);
    EXPECT_NE(asserted.refusals[0].find("contradicted"), std::string::npos);
}

TEST(Separating, Additive) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        AdditiveExample ex(p);
        SepVarietyModel m = ex.model();
        SeparatingCandidate S{"x^p-x", {{"f", ex.invariant()}}, ""};
        EXPECT_TRUE(verify_separating_symbolic(S, m));
        EXPECT_TRUE(verify_separating_points(S, m, ex.F));
        if (p <= 3) EXPECT_TRUE(verify_separating_points(S, m, Field::standard(p, 2)));
        AuditReport a = corollary_audit(m, {{S}, {}, {}, true});
        EXPECT_FALSE(a.fixed_point_generated);
        EXPECT_FALSE(a.vsep_connected);
        EXPECT_FALSE(a.conclusion_drawn());
        EXPECT_FALSE(a.min_reflection_number.has_value());
        ASSERT_EQ(a.refusals.size(), 1u);
        EXPECT_NE(a.refusals[0].find("cannot be dropped"), std::string::npos);
        for (const auto& d : a.ideals) EXPECT_FALSE(d.defect.has_value());
    }
}

TEST(Separating, SignGroup) {
    SignExample s;
    SepVarietyModel m = s.model();
    SeparatingCandidate all{"all", m.invariants(), ""};
    SeparatingCandidate two{"two", {m.invariants()[0], m.invariants()[2]}, ""};
    EXPECT_TRUE(verify_separating_symbolic(all, m));
    EXPECT_FALSE(verify_separating_symbolic(two, m));
    EXPECT_FALSE(verify_separating_points(two, m, s.F));
    AuditReport a = corollary_audit(m, {{all, two}, {}, {}, true});
    EXPECT_EQ(a.min_reflection_number, 2u);
    EXPECT_EQ(a.gamma_sep_upper_bound, 3u);
    EXPECT_FALSE(a.conclusion_drawn());
    ASSERT_TRUE(a.theorem_k.has_value());
    EXPECT_LE(*a.min_reflection_number, *a.theorem_k + 1);
}

TEST(Separating, SymbolicImpliesPoints) {
    std::vector<std::pair<SepVarietyModel, SeparatingCandidate>> cases;
    TwoPlanesExample t;
    cases.emplace_back(t.model(), t.candidate());
    SignExample s;
    cases.emplace_back(s.model(), SeparatingCandidate{"all", s.model().invariants(), ""});
    for (const auto& [m, S] : cases) {
        ASSERT_TRUE(verify_separating_symbolic(S, m));
        const Field& F = m.base_ring()->field();
        EXPECT_TRUE(verify_separating_points(S, m, F));
    }
}

TEST(Separating, CmStatusNames) {
    EXPECT_EQ(to_string(CmStatus::Automatic), "automatic");
    EXPECT_EQ(to_string(CmStatus::Computed), "computed");
}
