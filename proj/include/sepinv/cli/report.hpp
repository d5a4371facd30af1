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

#ifndef SEPINV_CLI_REPORT_HPP
#define SEPINV_CLI_REPORT_HPP

#include <string>
#include <vector>

#include "manifest.hpp"

namespace sepinv::cli {

inline constexpr int kReportSchemaVersion = 1;

/// A finite codimension as a number, +infinity as the string "inf".
inline json to_json(Codim c) { return c.is_infinite() ? json("inf") : json(c.value()); }

inline json to_json(const std::vector<FieldElement>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x.code);
    return a;
}

inline json to_json(const AffineMap& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.dimension(); ++j) row.push_back(s.entry(i, j).code);
        rows.push_back(std::move(row));
    }
    json j{{"matrix", std::move(rows)}};
    if (!s.is_linear()) j["translation"] = to_json(s.translation());
    return j;
}

inline json polys_json(const std::vector<Polynomial>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

inline json to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [k, v] : t.entries()) entries.push_back({{"i", k.first}, {"j", k.second}, {"value", v}});
    return {{"entries", std::move(entries)}, {"totals", t.totals()}, {"table", t.render()}};
}

inline json to_json(const DefectReport& d) {
    return {{"dimension", d.dimension},
            {"projective_dimension", d.projective_dimension},
            {"depth", d.depth},
            {"cmdef", d.cmdef},
            {"betti", to_json(d.betti)}};
}

inline json to_json(const EquivalenceReport& r) {
    return {{"k", r.k},
            {"vsep_connected", r.vsep_connected},
            {"x_connected", r.x_connected},
            {"generated_by_k_reflections", r.generated_by_k_reflections},
            {"agree", r.agree()}};
}

inline json to_json(const PointCheck& c, const Field& F) {
    json j{{"field", F.describe()}, {"separating", c.separating}, {"points", c.points}, {"orbits", c.orbits}};
    if (c.witness) j["witness"] = json::array({to_json(c.witness->first), to_json(c.witness->second)});
    return j;
}

inline json optional_json(const auto& o) { return o ? json(*o) : json(nullptr); }

inline json to_json(const AuditReport& a) {
    json cands = json::array();
    for (const auto& c : a.candidates)
        cands.push_back({{"name", c.name}, {"size", c.size}, {"separating", c.separating}});
    json ideals = json::array();
    for (const auto& d : a.ideals) {
        json j{{"name", d.name}, {"same_radical", d.same_radical}};
        if (d.defect) j["defect"] = to_json(*d.defect);
        if (!d.note.empty()) j["note"] = d.note;
        ideals.push_back(std::move(j));
    }
    return {{"hypotheses",
             {{"x_connected", a.x_connected},
              {"x_cohen_macaulay", optional_json(a.x_cohen_macaulay)},
              {"x_cohen_macaulay_status", to_string(a.cm_status)},
              {"x_cmdef", optional_json(a.x_cmdef)},
              {"fixed_point_generated", a.fixed_point_generated},
              {"dim_x", a.dim_x}}},
            {"vsep_connected", a.vsep_connected},
            {"candidates", std::move(cands)},
            {"gamma_sep_upper_bound", optional_json(a.gamma_sep_upper_bound)},
            {"ideals", std::move(ideals)},
            {"set_theoretic_cmdef_upper_bound", optional_json(a.theorem_k)},
            {"min_reflection_number", optional_json(a.min_reflection_number)},
            {"cmdef_bound_applies", a.theorem_applies},
            {"corollary_applies", a.corollary_applies},
            {"conclusion", a.conclusion_drawn() ? json("G is generated by reflections") : json(nullptr)},
            {"refusals", a.refusals}};
}

inline json to_json(const ResourceCaps& c) {
    return {{"max_pairs", c.max_pairs},
            {"max_degree", c.max_degree},
            {"max_group_order", c.max_group_order},
            {"max_enumeration", c.max_enumeration}};
}

}  // namespace sepinv::cli

#endif
