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

#ifndef SEPINV_GROUP_HPP
#define SEPINV_GROUP_HPP

#include <algorithm>
#include <compare>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affine.hpp"
#include "caps.hpp"
#include "ideal.hpp"

namespace sepinv {

/// A codimension in {0, 1, ...} or +infinity (the codimension of the empty set).
class Codim {
   public:
    constexpr explicit Codim(std::size_t v) : v_(v) {}
    static constexpr Codim infinite() { return Codim(kInf); }

    constexpr bool is_infinite() const noexcept { return v_ == kInf; }
    std::size_t value() const {
        if (is_infinite()) fail(ErrorCode::InvalidArgument, "infinite codimension has no value");
        return v_;
    }
    constexpr bool at_most(std::size_t k) const noexcept { return !is_infinite() && v_ <= k; }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

    friend constexpr auto operator<=>(Codim, Codim) = default;

   private:
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::size_t v_;
};

/// X = X_1 u ... u X_r in F^n, each component given by an (asserted prime) ideal
/// of K[x_1..x_n].
class VarietyPresentation {
   public:
    VarietyPresentation(Ring ring, std::vector<Ideal> components) : ring_(std::move(ring)), comps_(std::move(components)) {
        if (comps_.empty()) fail(ErrorCode::InvalidArgument, "a variety needs at least one component");
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (!same_ring(comps_[i].ring(), ring_))
                fail(ErrorCode::RingMismatch, "component " + std::to_string(i) + " is not in the base ring");
            if (comps_[i].is_unit()) fail(ErrorCode::UnitIdeal, "component " + std::to_string(i) + " is empty");
            dims_.push_back(sepinv::dimension(comps_[i]));
        }
    }

    /// X = F^n.
    static VarietyPresentation affine_space(Ring ring) {
        std::vector<Ideal> c;
        c.emplace_back(ring);
        return VarietyPresentation(std::move(ring), std::move(c));
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t ambient_dimension() const noexcept { return ring_->nvars(); }
    const std::vector<Ideal>& components() const noexcept { return comps_; }
    const Ideal& component(std::size_t i) const { return comps_.at(i); }
    std::size_t component_dimension(std::size_t i) const { return dims_.at(i); }
    const std::vector<std::size_t>& component_dimensions() const noexcept { return dims_; }
    std::size_t dimension() const { return *std::max_element(dims_.begin(), dims_.end()); }

    bool is_affine_space() const { return comps_.size() == 1 && comps_[0].is_zero(); }
    bool is_equidimensional() const {
        return std::all_of(dims_.begin(), dims_.end(), [&](std::size_t d) { return d == dims_[0]; });
    }

    /// I(X) = intersection of the component ideals.
    const Ideal& vanishing_ideal() const {
        if (!vanishing_) {
            Ideal acc = comps_[0];
            for (std::size_t i = 1; i < comps_.size(); ++i) acc = intersect(acc, comps_[i]);
            vanishing_ = std::move(acc);
        }
        return *vanishing_;
    }

    /// f vanishes on X.
    bool vanishes(const Polynomial& f) const {
        return std::all_of(comps_.begin(), comps_.end(), [&](const Ideal& c) { return c.contains(f); });
    }

    /// Points of F^n (over any field of the same characteristic) lying on X.
    bool contains_point(std::span<const FieldElement> x, const Field& target) const {
        for (const auto& c : comps_) {
            bool on = true;
            for (const auto& g : c.generators())
                if (!g.evaluate(x, target).is_zero()) {
                    on = false;
                    break;
                }
            if (on) return true;
        }
        return false;
    }

    /// Index j with sigma(X_i) = X_j, if any. I(sigma X_i) is generated by
    /// g o sigma^{-1} for g in I(X_i).
    std::optional<std::size_t> image_component(const AffineMap& sigma, std::size_t i) const {
        const AffineMap inv = sigma.inverse();
        std::vector<Polynomial> gens;
        for (const auto& g : comps_.at(i).generators()) gens.push_back(compose_affine(g, inv));
        Ideal img(ring_, std::move(gens));
        for (std::size_t j = 0; j < comps_.size(); ++j)
            if (dims_[j] == dims_[i] && img == comps_[j]) return j;
        return std::nullopt;
    }

    /// Throws unless every map permutes the component list.
    void check_permuted_by(const std::vector<AffineMap>& maps) const {
        for (std::size_t s = 0; s < maps.size(); ++s)
            for (std::size_t i = 0; i < comps_.size(); ++i)
                if (!image_component(maps[s], i))
                    fail(ErrorCode::InvalidArgument, "generator " + std::to_string(s) + " does not map component " +
                                                         std::to_string(i) + " onto a listed component");
    }

   private:
    Ring ring_;
    std::vector<Ideal> comps_;
    std::vector<std::size_t> dims_;
    mutable std::optional<Ideal> vanishing_;
};

/// A finite group of affine maps, with its elements listed breadth-first over
/// generator words. Element 0 is the identity.
class FiniteGroup {
   public:
    const Field& field() const noexcept { return field_; }
    std::size_t dimension() const noexcept { return n_; }
    const std::vector<AffineMap>& generators() const noexcept { return gens_; }
    const std::vector<AffineMap>& elements() const noexcept { return elems_; }
    const AffineMap& element(std::size_t i) const { return elems_.at(i); }
    std::size_t order() const noexcept { return elems_.size(); }
    std::size_t identity_index() const noexcept { return 0; }

    std::optional<std::size_t> index_of(const AffineMap& a) const {
        auto it = index_.find(a);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend FiniteGroup enumerate_group(const Field& field, std::size_t n, std::vector<AffineMap> gens,
                                       std::size_t cap);

   private:
    Field field_ = Field::prime(2);
    std::size_t n_ = 0;
    std::vector<AffineMap> gens_;
    std::vector<AffineMap> elems_;
    std::map<AffineMap, std::size_t> index_;
};

inline std::vector<AffineMap> closure(const AffineMap& identity, const std::vector<AffineMap>& gens, std::size_t cap) {
    std::vector<AffineMap> out{identity};
    std::map<AffineMap, std::size_t> seen{{identity, 0}};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : gens) {
            AffineMap w = out[head] * g;
            if (seen.count(w)) continue;
            if (out.size() >= cap)
                fail(ErrorCode::GroupCapExceeded, "group order exceeds the cap of " + std::to_string(cap));
            seen.emplace(w, out.size());
            out.push_back(std::move(w));
        }
    }
    return out;
}

/// Closure of the generators. Multiplication closure suffices since every
/// element of a finite group has finite order.
inline FiniteGroup enumerate_group(const Field& field, std::size_t n, std::vector<AffineMap> gens,
                                   std::size_t cap = resource_caps().max_group_order) {
    for (const auto& g : gens) {
        if (g.dimension() != n) fail(ErrorCode::DimensionMismatch, "generator dimension differs from ambient dimension");
        if (g.field() != field) fail(ErrorCode::RingMismatch, "generator over a different field");
    }
    FiniteGroup G;
    G.field_ = field;
    G.n_ = n;
    G.elems_ = closure(AffineMap::identity(field, n), gens, cap);
    G.gens_ = std::move(gens);
    for (std::size_t i = 0; i < G.elems_.size(); ++i) G.index_.emplace(G.elems_[i], i);
    return G;
}

/// f o sigma - f vanishes on X for every generator sigma.
inline bool is_invariant(const Polynomial& f, const FiniteGroup& G, const VarietyPresentation& X) {
    for (const auto& s : G.generators()) {
        Polynomial d = compose_affine(f, s) - f;
        if (d.is_zero()) continue;
        if (!X.vanishes(d)) return false;
    }
    return true;
}

inline bool is_invariant(const Polynomial& f, const FiniteGroup& G) {
    for (const auto& s : G.generators())
        if (compose_affine(f, s) != f) return false;
    return true;
}

/// Ideal of the fixed locus of sigma on the variety V(base): base + (sigma(x)_j - x_j).
inline Ideal fixed_locus_ideal(const AffineMap& sigma, const Ideal& base) {
    const Ring& R = base.ring();
    std::vector<Polynomial> gens = base.generators();
    auto img = sigma.coordinate_images(R);
    for (std::size_t j = 0; j < img.size(); ++j) {
        Polynomial d = img[j] - Polynomial::variable(R, j);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    return Ideal(R, std::move(gens));
}

/// codim_X(X^sigma) = dim X - max_i dim(X_i^sigma), or +inf when sigma has no
/// fixed point on X.
inline Codim fixed_locus_codim(const AffineMap& sigma, const VarietyPresentation& X) {
    std::optional<std::size_t> best;
    for (const auto& c : X.components()) {
        Ideal fix = fixed_locus_ideal(sigma, c);
        if (fix.is_unit()) continue;
        std::size_t d = dimension(fix);
        if (!best || d > *best) best = d;
    }
    if (!best) return Codim::infinite();
    return Codim(X.dimension() - *best);
}

/// Fixed-locus codimension of every group element, in element order.
inline std::vector<Codim> fixed_locus_codims(const FiniteGroup& G, const VarietyPresentation& X) {
    std::vector<Codim> out;
    out.reserve(G.order());
    for (const auto& s : G.elements()) out.push_back(fixed_locus_codim(s, X));
    return out;
}

/// Indices of the elements with fixed-locus codimension at most k.
inline std::vector<std::size_t> k_reflections(const std::vector<Codim>& codims, std::size_t k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < codims.size(); ++i)
        if (codims[i].at_most(k)) out.push_back(i);
    return out;
}

inline std::vector<std::size_t> k_reflections(const FiniteGroup& G, const VarietyPresentation& X, std::size_t k) {
    return k_reflections(fixed_locus_codims(G, X), k);
}

/// The subgroup generated by the listed elements is all of G.
inline bool generated_by(const FiniteGroup& G, const std::vector<std::size_t>& subset) {
    std::vector<AffineMap> gens;
    for (std::size_t i : subset) gens.push_back(G.element(i));
    return closure(G.element(G.identity_index()), gens, G.order() + 1).size() == G.order();
}

/// Least m with G generated by its m-reflections.
inline std::size_t min_reflection_number(const FiniteGroup& G, const VarietyPresentation& X,
                                         const std::vector<Codim>& codims) {
    for (std::size_t m = 0; m <= X.dimension(); ++m)
        if (generated_by(G, k_reflections(codims, m))) return m;
    fail(ErrorCode::NotGeneratedByFixedPointElements, "G is not generated by elements having a fixed point on X");
}

inline std::size_t min_reflection_number(const FiniteGroup& G, const VarietyPresentation& X) {
    return min_reflection_number(G, X, fixed_locus_codims(G, X));
}

/// G is generated by the elements having a fixed point on X.
inline bool generated_by_fixed_point_elements(const FiniteGroup& G, const VarietyPresentation& X,
                                              const std::vector<Codim>& codims) {
    return generated_by(G, k_reflections(codims, X.dimension()));
}

}  // namespace sepinv

#endif
