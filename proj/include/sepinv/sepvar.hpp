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

#ifndef SEPINV_SEPVAR_HPP
#define SEPINV_SEPVAR_HPP

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace sepinv {

struct NamedPolynomial {
    std::string name;
    Polynomial poly;
};

/// H_{sigma,i}: the graph of sigma restricted to X_i. `merged` lists further
/// group elements whose graph on X_i is the same.
struct GraphComponent {
    std::size_t element = 0;
    std::size_t component = 0;
    std::vector<std::size_t> merged;
    Ideal ideal;
    std::size_t dimension = 0;
};

/// Connectivity of the graph on `count` nodes with an edge wherever `edge(a, b)`.
inline bool graph_connected(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& edge) {
    if (count <= 1) return true;
    std::vector<bool> seen(count, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < count; ++b) {
            if (seen[b] || !edge(a, b)) continue;
            seen[b] = true;
            ++reached;
            stack.push_back(b);
        }
    }
    return reached == count;
}

/// K[x_1..x_n, y_1..y_n] with the base ring's field and names followed by y_j.
inline Ring doubled_ring(const Ring& base) {
    std::vector<std::string> names = base->names();
    for (std::size_t j = 0; j < base->nvars(); ++j) names.push_back("y" + std::to_string(j + 1));
    return PolynomialRing::make(base->field(), std::move(names), base->order());
}

/// The separating-variety model of G acting on X with the given generating
/// invariants.
class SepVarietyModel {
   public:
    SepVarietyModel(FiniteGroup group, VarietyPresentation variety, std::vector<NamedPolynomial> invariants)
        : group_(std::move(group)), variety_(std::move(variety)), invariants_(std::move(invariants)) {
        base_ = variety_.ring();
        if (group_.dimension() != base_->nvars())
            fail(ErrorCode::DimensionMismatch, "group and variety have different ambient dimensions");
        if (group_.field() != base_->field()) fail(ErrorCode::RingMismatch, "group and variety over different fields");
        variety_.check_permuted_by(group_.generators());
        doubled_ = doubled_ring(base_);
        build_ideal();
        build_components();
    }

    const Ring& base_ring() const noexcept { return base_; }
    const Ring& ring() const noexcept { return doubled_; }
    const FiniteGroup& group() const noexcept { return group_; }
    const VarietyPresentation& variety() const noexcept { return variety_; }
    const std::vector<NamedPolynomial>& invariants() const noexcept { return invariants_; }
    std::size_t n() const noexcept { return base_->nvars(); }

    /// I = (f(x) - f(y) | f listed) + I(X)(x) + I(X)(y).
    const Ideal& ideal() const noexcept { return *ideal_; }
    const std::vector<GraphComponent>& components() const noexcept { return comps_; }
    /// dim V_sep = dim X.
    std::size_t dimension() const { return variety_.dimension(); }

    Polynomial in_x(const Polynomial& f) const { return f.embed(doubled_, map(0)); }
    Polynomial in_y(const Polynomial& f) const { return f.embed(doubled_, map(n())); }
    Polynomial difference(const Polynomial& f) const { return in_x(f) - in_y(f); }

    /// Generators of I(X) in the x and y copies; empty for X = K^n.
    std::vector<Polynomial> variety_square_generators() const {
        std::vector<Polynomial> out;
        if (variety_.is_affine_space()) return out;
        for (const auto& g : variety_.vanishing_ideal().groebner_basis()) {
            out.push_back(in_x(g));
            out.push_back(in_y(g));
        }
        return out;
    }

    /// Ideal of V_sep in K[x, y] spanned by the differences of `fs`.
    Ideal difference_ideal(const std::vector<Polynomial>& fs) const {
        std::vector<Polynomial> gens;
        for (const auto& f : fs) {
            Polynomial d = difference(f);
            if (!d.is_zero()) gens.push_back(std::move(d));
        }
        for (auto& g : variety_square_generators()) gens.push_back(std::move(g));
        return Ideal(doubled_, std::move(gens));
    }

    /// Fixed-locus codimensions of all group elements (cached).
    const std::vector<Codim>& element_codims() const {
        if (!codims_) codims_ = fixed_locus_codims(group_, variety_);
        return *codims_;
    }

    /// codim_{V_sep}(H_a n H_b), cached.
    Codim pairwise_codim(std::size_t a, std::size_t b) const {
        ensure_matrix();
        return matrix_->at(a * comps_.size() + b);
    }

    /// sqrt(I) = intersection of the graph ideals (cached).
    const Ideal& radical() const {
        if (!radical_) radical_ = compute_radical();
        return *radical_;
    }

   private:
    std::vector<int> map(std::size_t offset) const {
        std::vector<int> m(n());
        std::iota(m.begin(), m.end(), static_cast<int>(offset));
        return m;
    }

    void build_ideal() {
        std::vector<Polynomial> fs;
        for (const auto& inv : invariants_) {
            if (!same_ring(inv.poly.ring(), base_))
                fail(ErrorCode::RingMismatch, "invariant " + inv.name + " is not in the base ring");
            for (std::size_t s = 0; s < group_.generators().size(); ++s) {
                Polynomial d = compose_affine(inv.poly, group_.generators()[s]) - inv.poly;
                if (!d.is_zero() && !variety_.vanishes(d))
                    fail(ErrorCode::NotInvariant,
                         inv.name + " = " + inv.poly.to_string() + " is not invariant under generator " + std::to_string(s));
            }
            fs.push_back(inv.poly);
        }
        ideal_ = difference_ideal(fs);
    }

    void build_components();
    void ensure_matrix() const;
    Ideal compute_radical() const;

    FiniteGroup group_;
    VarietyPresentation variety_;
    std::vector<NamedPolynomial> invariants_;
    Ring base_, doubled_;
    std::optional<Ideal> ideal_;
    std::vector<GraphComponent> comps_;
    mutable std::optional<std::vector<Codim>> codims_;
    mutable std::optional<std::vector<Codim>> matrix_;
    mutable std::optional<Ideal> radical_;
};

/// I(X_i)(x) + (y_j - sigma(x)_j).
inline Ideal graph_component_ideal(const AffineMap& sigma, const Ideal& component, const Ring& doubled) {
    const std::size_t n = sigma.dimension();
    std::vector<int> xmap(n);
    std::iota(xmap.begin(), xmap.end(), 0);
    std::vector<Polynomial> gens;
    for (const auto& g : component.generators()) gens.push_back(g.embed(doubled, xmap));
    auto img = sigma.coordinate_images(doubled, 0);
    for (std::size_t j = 0; j < n; ++j) gens.push_back(Polynomial::variable(doubled, n + j) - img[j]);
    return Ideal(doubled, std::move(gens));
}

inline Ideal graph_component_ideal(const SepVarietyModel& m, std::size_t element, std::size_t component) {
    return graph_component_ideal(m.group().element(element), m.variety().component(component), m.ring());
}

inline void SepVarietyModel::build_components() {
    for (std::size_t i = 0; i < variety_.components().size(); ++i) {
        std::map<std::vector<std::string>, std::size_t> seen;
        for (std::size_t s = 0; s < group_.order(); ++s) {
            Ideal H = graph_component_ideal(group_.element(s), variety_.component(i), doubled_);
            std::vector<std::string> key;
            for (const auto& g : H.groebner_basis()) key.push_back(g.to_string());
            auto [it, fresh] = seen.emplace(std::move(key), comps_.size());
            if (!fresh) {
                comps_[it->second].merged.push_back(s);
                continue;
            }
            std::size_t d = sepinv::dimension(H);
            comps_.push_back({s, i, {}, std::move(H), d});
        }
    }
}

/// codim_{V_sep}(H_a n H_b) = dim V_sep - dim(H_a + H_b), +inf when disjoint.
inline Codim vsep_intersection_codim(const SepVarietyModel& m, std::size_t a, std::size_t b) {
    const auto& A = m.components().at(a);
    const auto& B = m.components().at(b);
    Ideal S = A.ideal + B.ideal;
    if (S.is_unit()) return Codim::infinite();
    return Codim(m.dimension() - dimension(S));
}

/// The same codimension computed on X: codim_X((X_i n X_j)^{tau^{-1} sigma}).
inline Codim xside_intersection_codim(const SepVarietyModel& m, std::size_t a, std::size_t b) {
    const auto& A = m.components().at(a);
    const auto& B = m.components().at(b);
    const auto& X = m.variety();
    AffineMap rho = m.group().element(B.element).inverse() * m.group().element(A.element);
    Ideal meet = X.component(A.component) + X.component(B.component);
    Ideal fix = fixed_locus_ideal(rho, meet);
    if (fix.is_unit()) return Codim::infinite();
    return Codim(X.dimension() - dimension(fix));
}

inline void SepVarietyModel::ensure_matrix() const {
    if (matrix_) return;
    const std::size_t c = comps_.size();
    std::vector<Codim> mat(c * c, Codim(0));
    for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = a + 1; b < c; ++b) {
            Codim v = vsep_intersection_codim(*this, a, b);
            Codim w = xside_intersection_codim(*this, a, b);
            if (v != w)
                fail(ErrorCode::InternalInconsistency, "intersection codimension of components " + std::to_string(a) +
                                                            " and " + std::to_string(b) + " differs between V_sep (" +
                                                            v.to_string() + ") and X (" + w.to_string() + ")");
            mat[a * c + b] = v;
            mat[b * c + a] = v;
        }
    }
    matrix_ = std::move(mat);
}

inline Ideal SepVarietyModel::compute_radical() const {
    std::vector<Ideal> layer;
    for (const auto& c : comps_) layer.push_back(c.ideal);
    while (layer.size() > 1) {
        std::vector<Ideal> next;
        for (std::size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(intersect(layer[i], layer[i + 1]));
        if (layer.size() % 2 == 1) next.push_back(layer.back());
        layer = std::move(next);
    }
    Ideal r = layer.front();
    for (const auto& g : ideal_->generators())
        if (!r.contains(g)) fail(ErrorCode::InternalInconsistency, "a generator of I is not in the graph intersection");
    return r;
}

inline Codim pairwise_intersection_codim(const SepVarietyModel& m, std::size_t a, std::size_t b) {
    return m.pairwise_codim(a, b);
}

/// I(V_sep) as the intersection of the graph ideals.
inline const Ideal& separating_variety_radical(const SepVarietyModel& m) { return m.radical(); }

/// Graph components linked by chains with pairwise intersection codim <= k.
inline bool connected_in_codim(const SepVarietyModel& m, std::size_t k) {
    return graph_connected(m.components().size(),
                           [&](std::size_t a, std::size_t b) { return m.pairwise_codim(a, b).at_most(k); });
}

/// codim_X(X_i n X_j) = dim X - dim(X_i n X_j).
inline Codim component_intersection_codim(const VarietyPresentation& X, std::size_t i, std::size_t j) {
    if (i == j) return Codim(X.dimension() - X.component_dimension(i));
    Ideal S = X.component(i) + X.component(j);
    if (S.is_unit()) return Codim::infinite();
    return Codim(X.dimension() - dimension(S));
}

inline bool connected_in_codim(const VarietyPresentation& X, std::size_t k) {
    return graph_connected(X.components().size(), [&](std::size_t a, std::size_t b) {
        return component_intersection_codim(X, a, b).at_most(k);
    });
}

struct EquivalenceReport {
    std::size_t k = 0;
    bool vsep_connected = false;
    bool x_connected = false;
    bool generated_by_k_reflections = false;
    bool agree() const { return vsep_connected == (x_connected && generated_by_k_reflections); }
};

/// Both sides of: V_sep connected in codim k <=> X connected in codim k and G
/// generated by k-reflections. Throws EquivalenceViolation on disagreement.
inline EquivalenceReport theorem_equivalence_check(const SepVarietyModel& m, std::size_t k) {
    EquivalenceReport r;
    r.k = k;
    r.vsep_connected = connected_in_codim(m, k);
    r.x_connected = connected_in_codim(m.variety(), k);
    r.generated_by_k_reflections = generated_by(m.group(), k_reflections(m.element_codims(), k));
    if (!r.agree())
        fail(ErrorCode::EquivalenceViolation,
             "k = " + std::to_string(k) + ": V_sep connected " + (r.vsep_connected ? "true" : "false") +
                 ", X connected " + (r.x_connected ? "true" : "false") + ", generated by k-reflections " +
                 (r.generated_by_k_reflections ? "true" : "false"));
    return r;
}

/// Pairs (x, y) of X-points over `field` in one G-orbit: the points of V_sep
/// over that field. Exposed for cross-checks only.
inline std::vector<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>> vsep_points(
    const SepVarietyModel& m, const Field& field, std::size_t cap = resource_caps().max_enumeration) {
    const std::size_t n = m.n();
    auto elems = field.enumerate(cap);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / elems.size()) fail(ErrorCode::EnumerationCapExceeded, "too many points to enumerate");
        total *= elems.size();
    }
    std::vector<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>> out;
    std::vector<FieldElement> x(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = elems[c % elems.size()];
            c /= elems.size();
        }
        if (!m.variety().contains_point(x, field)) continue;
        std::vector<std::vector<FieldElement>> images;
        for (const auto& s : m.group().elements()) images.push_back(s.apply(x, field));
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        for (auto& y : images) out.emplace_back(x, std::move(y));
    }
    return out;
}

}  // namespace sepinv

#endif
