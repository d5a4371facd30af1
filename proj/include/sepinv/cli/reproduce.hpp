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

#ifndef SEPINV_CLI_REPRODUCE_HPP
#define SEPINV_CLI_REPRODUCE_HPP

#include <string>

#include "report.hpp"

namespace sepinv::cli {

/// Computed quantities (keyed like the expected-value fixtures) and their
/// supporting details.
struct Reproduction {
    json actual = json::object();
    json details = json::object();
};

namespace detail {

inline const Polynomial& invariant(const Instance& inst, const std::string& name) {
    for (const auto& f : inst.parsed.invariants)
        if (f.name == name) return f.poly;
    fail(ErrorCode::ManifestError, "manifest has no invariant named " + name);
}

inline const Polynomial& member(const SeparatingCandidate& S, const std::string& name) {
    for (const auto& f : S.members)
        if (f.name == name) return f.poly;
    fail(ErrorCode::ManifestError, "candidate " + S.name + " has no member named " + name);
}

/// dim sqrt(I) = dim X, and for equidimensional X the codimension of V_sep in
/// X x X is n = dim X, i.e. 2n - dim sqrt(I) = n.
inline void remark_checks(const SepVarietyModel& m, Reproduction& r) {
    const std::size_t d = dimension(m.radical());
    const std::size_t n = m.variety().dimension();
    r.actual["dim_radical_equals_dim_x"] = d == n;
    if (m.variety().is_equidimensional()) r.actual["codim_radical_equals_n"] = 2 * n - d == n;
    r.details["radical"] = {{"generators", polys_json(m.radical().groebner_basis())}, {"dimension", d}};
}

inline json codims_json(const SepVarietyModel& m) {
    const std::size_t c = m.components().size();
    json mat = json::array();
    for (std::size_t a = 0; a < c; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < c; ++b) row.push_back(to_json(m.pairwise_codim(a, b)));
        mat.push_back(std::move(row));
    }
    return mat;
}

}  // namespace detail

inline Reproduction reproduce_id10253(const Instance& inst) {
    Reproduction r;
    const auto& m = *inst.model;
    const auto& G = m.group();
    const auto& X = m.variety();
    r.actual["group_order"] = G.order();
    json gc = json::array();
    for (const auto& s : G.generators()) gc.push_back(to_json(fixed_locus_codim(s, X)));
    r.actual["generator_codims"] = gc;
    r.actual["min_reflection_number"] = min_reflection_number(G, X, m.element_codims());
    bool all_inv = true;
    for (const auto& f : inst.parsed.invariants) all_inv = all_inv && is_invariant(f.poly, G, X);
    r.actual["invariants_invariant"] = all_inv;

    const auto& f1 = detail::invariant(inst, "f1");
    const auto& f2 = detail::invariant(inst, "f2");
    const auto& f3 = detail::invariant(inst, "f3");
    const auto& f4 = detail::invariant(inst, "f4");
    const auto& h = detail::invariant(inst, "h");
    const auto& A = inst.candidate("A");
    const auto& g3 = detail::member(A, "g3");
    const auto& g4 = detail::member(A, "g4");
    auto relation = [&](const Polynomial& a, const Polynomial& b) {
        return (f1.pow(3) * h + f1.pow(2) * a + f1 * f2.pow(2) * h + f2.pow(2) * b + h * h).is_zero();
    };
    r.actual["relation"] = relation(f3, f4);
    r.actual["h_squared_identity"] = h * h == f1.pow(2) * g3 + f2.pow(2) * g4;
    r.details["relation_with_f3_f4_exchanged"] = relation(f4, f3);
    r.details["h_squared_with_g3_g4_exchanged"] = h * h == f1.pow(2) * g4 + f2.pow(2) * g3;

    const Ideal J = candidate_ideal(A, m);
    auto dI = cohen_macaulay_report(m.ideal());
    auto dR = cohen_macaulay_report(m.radical());
    auto dJ = cohen_macaulay_report(J);
    r.actual["cmdef_I"] = dI.cmdef;
    r.actual["cmdef_sqrt_I"] = dR.cmdef;
    r.actual["cmdef_J"] = dJ.cmdef;
    r.details["defects"] = {{"I", to_json(dI)}, {"sqrt(I)", to_json(dR)}, {"J", to_json(dJ)}};

    r.actual["graph_components"] = m.components().size();
    r.actual["vsep_dimension"] = dimension(m.radical());
    r.actual["I_radical"] = m.ideal().contains(m.radical());
    r.actual["separating_A"] = verify_separating_symbolic(A, m);
    r.actual["separating_f1_only"] = verify_separating_symbolic(inst.candidate("f1_only"), m);
    const Field F2 = Field::prime(2), F4 = Field::standard(2, 2), F8 = Field::standard(2, 3);
    r.actual["points_A_F2"] = verify_separating_points(A, m, F2);
    r.actual["points_A_F4"] = verify_separating_points(A, m, F4);
    r.actual["points_A_F8"] = verify_separating_points(A, m, F8);
    r.actual["points_f1_only_F2"] = verify_separating_points(inst.candidate("f1_only"), m, F2);
    r.actual["vsep_connected_codim_1"] = theorem_equivalence_check(m, 1).vsep_connected;
    auto audit = corollary_audit(m, {inst.parsed.candidates, inst.parsed.ideals, inst.parsed.manifest.cohen_macaulay, true});
    r.actual["audit_conclusion"] = audit.conclusion_drawn();
    r.details["audit"] = to_json(audit);
    detail::remark_checks(m, r);
    return r;
}

inline Reproduction reproduce_additive(const Instance& inst) {
    Reproduction r;
    const auto& m = *inst.model;
    const auto& G = m.group();
    const auto& X = m.variety();
    const std::uint32_t p = inst.parsed.field.characteristic();
    r.actual["group_order"] = G.order();
    r.actual["invariant"] = is_invariant(detail::invariant(inst, "f"), G, X);
    std::size_t with_fixed = 0;
    for (auto c : m.element_codims())
        if (!c.is_infinite()) ++with_fixed;
    r.actual["fixed_point_elements"] = with_fixed;
    r.actual["graph_components"] = m.components().size();
    bool disjoint = true;
    for (std::size_t a = 0; a < m.components().size(); ++a)
        for (std::size_t b = a + 1; b < m.components().size(); ++b)
            disjoint = disjoint && m.pairwise_codim(a, b).is_infinite();
    r.actual["components_pairwise_disjoint"] = disjoint;
    r.actual["vsep_connected"] = connected_in_codim(m, m.dimension());
    const Ring& D = m.ring();
    Polynomial d = Polynomial::variable(D, 1) - Polynomial::variable(D, 0);
    r.actual["radical_contains_product"] = m.radical().contains(d.pow(p) - d);
    r.actual["separating_S"] = verify_separating_symbolic(inst.candidate("S"), m);
    auto audit = corollary_audit(m, {inst.parsed.candidates, inst.parsed.ideals, inst.parsed.manifest.cohen_macaulay, true});
    r.actual["audit_conclusion"] = audit.conclusion_drawn();
    r.details["audit"] = to_json(audit);
    r.details["pairwise_codims"] = detail::codims_json(m);
    detail::remark_checks(m, r);
    return r;
}

inline Reproduction reproduce_two_planes(const Instance& inst) {
    Reproduction r;
    const auto& m = *inst.model;
    const auto& G = m.group();
    const auto& X = m.variety();
    r.actual["group_order"] = G.order();
    r.actual["min_reflection_number"] = min_reflection_number(G, X, m.element_codims());
    auto dX = cohen_macaulay_report(X.vanishing_ideal());
    r.actual["cmdef_X"] = dX.cmdef;
    r.details["defect_X"] = to_json(dX);
    r.actual["x_connected_codim_1"] = connected_in_codim(X, 1);
    r.actual["graph_components"] = m.components().size();
    r.actual["vsep_connected_codim_1"] = theorem_equivalence_check(m, 1).vsep_connected;
    r.actual["vsep_connected_codim_2"] = theorem_equivalence_check(m, 2).vsep_connected;
    r.actual["separating_xbar"] = verify_separating_symbolic(inst.candidate("xbar"), m);
    r.details["points_xbar_F5"] = to_json(check_separating_points(inst.candidate("xbar"), m, inst.parsed.field),
                                          inst.parsed.field);
    auto audit = corollary_audit(m, {inst.parsed.candidates, inst.parsed.ideals, inst.parsed.manifest.cohen_macaulay, true});
    r.actual["audit_conclusion"] = audit.conclusion_drawn();
    bool cites_cm = false;
    for (const auto& s : audit.refusals) cites_cm = cites_cm || s.find("Cohen-Macaulay") != std::string::npos;
    r.actual["audit_refuses_cohen_macaulay"] = cites_cm;
    r.details["audit"] = to_json(audit);
    r.details["pairwise_codims"] = detail::codims_json(m);
    detail::remark_checks(m, r);
    return r;
}

/// One comparison row per fixture value. `p` replaces the placeholder "$p".
inline json compare_with_fixture(const json& fixture, const json& actual, std::optional<std::uint32_t> p,
                                 bool& all_match) {
    all_match = true;
    json rows = json::array();
    for (const auto& v : fixture.at("values")) {
        json expected = v.at("value");
        if (p && expected.is_string() && expected.get<std::string>() == "$p") expected = *p;
        const std::string q = v.at("quantity").get<std::string>();
        json got = actual.contains(q) ? actual.at(q) : json(nullptr);
        bool match = got == expected;
        all_match = all_match && match;
        rows.push_back({{"quantity", q},
                        {"expected", expected},
                        {"actual", got},
                        {"source", v.value("source", "")},
                        {"reference", v.value("reference", "")},
                        {"match", match}});
    }
    return rows;
}

}  // namespace sepinv::cli

#endif
