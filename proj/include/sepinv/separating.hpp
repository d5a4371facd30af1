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

#ifndef SEPINV_SEPARATING_HPP
#define SEPINV_SEPARATING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resolution.hpp"
#include "sepvar.hpp"

namespace sepinv {

struct SeparatingCandidate {
    std::string name;
    std::vector<NamedPolynomial> members;
    std::string provenance;

    std::vector<Polynomial> polynomials() const {
        std::vector<Polynomial> out;
        for (const auto& m : members) out.push_back(m.poly);
        return out;
    }
};

namespace detail {

inline void require_invariant(const SeparatingCandidate& S, const SepVarietyModel& m) {
    for (const auto& f : S.members)
        if (!is_invariant(f.poly, m.group(), m.variety()))
            fail(ErrorCode::NotInvariant, "candidate " + S.name + ": " + f.name + " is not invariant");
}

}  // namespace detail

/// J_S = (g(x) - g(y) | g in S) + I(X)(x) + I(X)(y).
inline Ideal candidate_ideal(const SeparatingCandidate& S, const SepVarietyModel& m) {
    return m.difference_ideal(S.polynomials());
}

/// sqrt(J) = sqrt(I): J inside the computed radical, and every generator of I
/// in sqrt(J).
inline bool same_radical_as_vsep(const Ideal& J, const SepVarietyModel& m) {
    for (const auto& g : J.generators())
        if (!m.radical().contains(g)) return false;
    for (const auto& g : m.ideal().generators())
        if (!radical_membership(g, J)) return false;
    return true;
}

/// S is separating iff V(J_S) = V_sep.
inline bool verify_separating_symbolic(const SeparatingCandidate& S, const SepVarietyModel& m) {
    detail::require_invariant(S, m);
    return same_radical_as_vsep(candidate_ideal(S, m), m);
}

struct PointCheck {
    bool separating = true;
    std::size_t points = 0;
    std::size_t orbits = 0;
    // two X-points with equal S-values in different orbits
    std::optional<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>> witness;
};

/// Over `field`: equal S-values on X-points imply one G-orbit. Necessary
/// evidence only; separating is a statement over the algebraic closure.
inline PointCheck check_separating_points(const SeparatingCandidate& S, const SepVarietyModel& m, const Field& field,
                                          std::size_t cap = resource_caps().max_enumeration) {
    detail::require_invariant(S, m);
    if (field.characteristic() != m.base_ring()->field().characteristic())
        fail(ErrorCode::RingMismatch, "point field has a different characteristic");
    const std::size_t n = m.n();
    auto elems = field.enumerate(cap);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / elems.size())
            fail(ErrorCode::EnumerationCapExceeded, field.describe() + "^" + std::to_string(n) + " exceeds the cap");
        total *= elems.size();
    }
    PointCheck r;
    std::map<std::vector<FieldElement>, std::vector<FieldElement>> rep_of_value;
    std::map<std::vector<FieldElement>, bool> orbit_seen;
    std::vector<FieldElement> x(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = elems[c % elems.size()];
            c /= elems.size();
        }
        if (!m.variety().contains_point(x, field)) continue;
        ++r.points;
        std::vector<FieldElement> rep = x;
        for (const auto& s : m.group().elements()) rep = std::min(rep, s.apply(x, field));
        if (orbit_seen.emplace(rep, true).second) ++r.orbits;
        std::vector<FieldElement> val;
        for (const auto& f : S.members) val.push_back(f.poly.evaluate(x, field));
        auto [it, fresh] = rep_of_value.emplace(std::move(val), rep);
        if (!fresh && it->second != rep) {
            r.separating = false;
            if (!r.witness) r.witness = std::make_pair(it->second, rep);
        }
    }
    return r;
}

inline bool verify_separating_points(const SeparatingCandidate& S, const SepVarietyModel& m, const Field& field) {
    return check_separating_points(S, m, field).separating;
}

enum class CmStatus { Automatic, Asserted, Computed, Unknown };

inline std::string to_string(CmStatus s) {
    switch (s) {
        case CmStatus::Automatic: return "automatic";
        case CmStatus::Asserted: return "asserted";
        case CmStatus::Computed: return "computed";
        case CmStatus::Unknown: return "unknown";
    }
    return "?";
}

struct NamedIdeal {
    std::string name;
    Ideal ideal;
};

struct IdealDefect {
    std::string name;
    bool same_radical = false;
    std::optional<DefectReport> defect;
    std::string note;
};

struct CandidateResult {
    std::string name;
    std::size_t size = 0;
    bool separating = false;
};

struct AuditReport {
    std::size_t dim_x = 0;
    bool x_connected = false;
    std::optional<bool> x_cohen_macaulay;
    CmStatus cm_status = CmStatus::Unknown;
    std::optional<std::size_t> x_cmdef;
    bool fixed_point_generated = false;
    bool vsep_connected = false;
    std::vector<CandidateResult> candidates;
    std::optional<std::size_t> gamma_sep_upper_bound;
    std::vector<IdealDefect> ideals;
    // min cmdef over supplied ideals with the radical of I; an upper bound for
    // the set-theoretical cmdef of V_sep
    std::optional<std::size_t> theorem_k;
    std::optional<std::size_t> min_reflection_number;
    bool theorem_applies = false;
    bool corollary_applies = false;
    std::vector<std::string> refusals;

    bool conclusion_drawn() const noexcept { return corollary_applies; }
};

struct AuditInputs {
    std::vector<SeparatingCandidate> candidates;
    std::vector<NamedIdeal> ideals;
    // user assertion that X is Cohen-Macaulay; ignored for X = K^n
    std::optional<bool> cohen_macaulay;
    // add I, sqrt(I) and J_S of every verified candidate to the ideals
    bool standard_ideals = true;
};

/// Checks the hypotheses of "gamma_sep = dim X => G reflection-generated" and of
/// its cmdef generalisation, draws the conclusions they permit and confirms each
/// against min_reflection_number. Disagreement throws InternalInconsistency.
inline AuditReport corollary_audit(const SepVarietyModel& m, const AuditInputs& in) {
    const auto& X = m.variety();
    AuditReport r;
    r.dim_x = X.dimension();
    r.x_connected = connected_in_codim(X, r.dim_x);

    if (X.is_affine_space()) {
        r.cm_status = CmStatus::Automatic;
        r.x_cohen_macaulay = true;
    } else if (in.cohen_macaulay) {
        r.cm_status = CmStatus::Asserted;
        r.x_cohen_macaulay = *in.cohen_macaulay;
    } else if (X.vanishing_ideal().is_homogeneous()) {
        r.cm_status = CmStatus::Computed;
        r.x_cmdef = cohen_macaulay_defect(X.vanishing_ideal());
        r.x_cohen_macaulay = *r.x_cmdef == 0;
    }

    const auto& codims = m.element_codims();
    r.fixed_point_generated = generated_by_fixed_point_elements(m.group(), X, codims);
    r.vsep_connected = connected_in_codim(m, r.dim_x);
    if (r.vsep_connected != (r.x_connected && r.fixed_point_generated))
        fail(ErrorCode::InternalInconsistency, "V_sep connectivity disagrees with X connectivity and fixed-point generation");
    if (r.fixed_point_generated) r.min_reflection_number = min_reflection_number(m.group(), X, codims);

    std::vector<NamedIdeal> ideals;
    if (in.standard_ideals) {
        ideals.push_back({"I", m.ideal()});
        ideals.push_back({"sqrt(I)", m.radical()});
    }
    for (const auto& S : in.candidates) {
        CandidateResult c{S.name, S.members.size(), verify_separating_symbolic(S, m)};
        if (c.separating) {
            if (!r.gamma_sep_upper_bound || c.size < *r.gamma_sep_upper_bound) r.gamma_sep_upper_bound = c.size;
            if (in.standard_ideals) ideals.push_back({"J(" + S.name + ")", candidate_ideal(S, m)});
        }
        r.candidates.push_back(std::move(c));
    }
    for (const auto& J : in.ideals) ideals.push_back(J);

    for (const auto& J : ideals) {
        IdealDefect d;
        d.name = J.name;
        d.same_radical = same_radical_as_vsep(J.ideal, m);
        if (!d.same_radical) {
            d.note = "radical differs from sqrt(I)";
        } else if (!J.ideal.is_homogeneous()) {
            d.note = "not homogeneous; cmdef not computed";
        } else {
            d.defect = cohen_macaulay_report(J.ideal);
            if (!r.theorem_k || d.defect->cmdef < *r.theorem_k) r.theorem_k = d.defect->cmdef;
            // cmdef(R/J) <= c and V_sep connected => connected in codim c + 1
            if (r.vsep_connected && !connected_in_codim(m, d.defect->cmdef + 1))
                fail(ErrorCode::InternalInconsistency, "V_sep connected but not in codim cmdef(R/" + J.name + ") + 1");
        }
        r.ideals.push_back(std::move(d));
    }

    if (!r.x_connected) r.refusals.push_back("X is not connected");
    if (!r.fixed_point_generated)
        r.refusals.push_back("G is not generated by elements having a fixed point; this assumption cannot be dropped");
    if (r.x_cohen_macaulay != true) {
        if (r.x_cmdef)
            r.refusals.push_back("X is not Cohen-Macaulay: cmdef(I(X)) = " + std::to_string(*r.x_cmdef));
        else
            r.refusals.push_back("X is not known to be Cohen-Macaulay");
    }
    if (!r.gamma_sep_upper_bound || *r.gamma_sep_upper_bound > r.dim_x)
        r.refusals.push_back("no verified separating set of size dim X = " + std::to_string(r.dim_x));

    r.theorem_applies = r.x_connected && r.fixed_point_generated && r.theorem_k.has_value();
    if (r.theorem_applies && *r.min_reflection_number > *r.theorem_k + 1)
        fail(ErrorCode::InternalInconsistency, "G is not generated by (k+1)-reflections for k = " +
                                                   std::to_string(*r.theorem_k));
    r.corollary_applies = r.refusals.empty();
    if (r.corollary_applies && *r.min_reflection_number > 1) {
        // only a user assertion can be wrong here
        if (r.cm_status != CmStatus::Asserted)
            fail(ErrorCode::InternalInconsistency, "corollary hypotheses hold but G is not generated by reflections");
        r.refusals.push_back("the assertion that X is Cohen-Macaulay is contradicted: G is not generated by reflections");
        r.corollary_applies = false;
    }
    return r;
}

}  // namespace sepinv

#endif
