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

#ifndef SEPINV_MODULE_HPP
#define SEPINV_MODULE_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "polynomial.hpp"

namespace sepinv {

/// Graded free module R(-d_1) + ... + R(-d_r); basis element i has degree shifts[i].
struct GradedFreeModule {
    std::vector<int> shifts;

    std::size_t rank() const noexcept { return shifts.size(); }
    friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Element of a free module R^r, stored sparsely: (component, nonzero
/// polynomial) pairs with increasing component.
class ModuleElement {
   public:
    using Entry = std::pair<std::size_t, Polynomial>;

    ModuleElement() = default;
    explicit ModuleElement(Ring ring) : ring_(std::move(ring)) {}

    static ModuleElement from_dense(Ring ring, const std::vector<Polynomial>& coords) {
        ModuleElement m(std::move(ring));
        for (std::size_t c = 0; c < coords.size(); ++c)
            if (!coords[c].is_zero()) m.entries_.emplace_back(c, coords[c]);
        return m;
    }

    static ModuleElement unit(Ring ring, std::size_t c, Polynomial f) {
        ModuleElement m(std::move(ring));
        if (!f.is_zero()) m.entries_.emplace_back(c, std::move(f));
        return m;
    }

    /// Collects (component, monomial, coefficient) triples.
    static ModuleElement from_terms(Ring ring, std::vector<std::tuple<std::size_t, Monomial, FieldElement>> terms) {
        std::map<std::size_t, std::vector<std::pair<Monomial, FieldElement>>> by;
        for (auto& [c, m, x] : terms) by[c].emplace_back(std::move(m), x);
        ModuleElement r(ring);
        for (auto& [c, ts] : by) {
            Polynomial p = Polynomial::from_terms(ring, std::move(ts));
            if (!p.is_zero()) r.entries_.emplace_back(c, std::move(p));
        }
        return r;
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }

    Polynomial at(std::size_t c) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                                   [](const Entry& e, std::size_t k) { return e.first < k; });
        if (it != entries_.end() && it->first == c) return it->second;
        return Polynomial(ring_);
    }

    std::vector<Polynomial> dense(std::size_t rank) const {
        std::vector<Polynomial> out(rank, Polynomial(ring_));
        for (const auto& [c, p] : entries_) {
            if (c >= rank) fail(ErrorCode::DimensionMismatch, "module element exceeds rank");
            out[c] = p;
        }
        return out;
    }

    /// this + c * m * other (m == nullptr means 1).
    ModuleElement axpy(FieldElement c, const Exponent* m, const ModuleElement& other) const {
        ModuleElement r(ring_ ? ring_ : other.ring_);
        std::size_t i = 0, j = 0;
        while (i < entries_.size() || j < other.entries_.size()) {
            if (j == other.entries_.size() || (i < entries_.size() && entries_[i].first < other.entries_[j].first)) {
                r.entries_.push_back(entries_[i++]);
            } else if (i == entries_.size() || other.entries_[j].first < entries_[i].first) {
                Polynomial z(r.ring_);
                Polynomial p = Polynomial::axpy(z, c, m, other.entries_[j].second);
                if (!p.is_zero()) r.entries_.emplace_back(other.entries_[j].first, std::move(p));
                ++j;
            } else {
                Polynomial p = Polynomial::axpy(entries_[i].second, c, m, other.entries_[j].second);
                if (!p.is_zero()) r.entries_.emplace_back(entries_[i].first, std::move(p));
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
        return a.axpy(FieldElement{1}, nullptr, b);
    }

    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
        const Ring& r = a.ring_ ? a.ring_ : b.ring_;
        return a.axpy(r->field().neg(FieldElement{1}), nullptr, b);
    }

    ModuleElement times(const Polynomial& f) const {
        ModuleElement r(ring_);
        for (const auto& [c, p] : entries_) {
            Polynomial q = p * f;
            if (!q.is_zero()) r.entries_.emplace_back(c, std::move(q));
        }
        return r;
    }

    /// Keeps only components for which keep(c) holds, renumbered by remap(c).
    template <class Keep, class Remap>
    ModuleElement filtered(Keep keep, Remap remap) const {
        ModuleElement r(ring_);
        for (const auto& [c, p] : entries_)
            if (keep(c)) r.entries_.emplace_back(remap(c), p);
        return r;
    }

    /// Homogeneous of degree d w.r.t. shifts: deg p_c + shift_c = d for each entry.
    std::optional<int> homogeneous_degree(const GradedFreeModule& F) const {
        std::optional<int> d;
        for (const auto& [c, p] : entries_) {
            auto pd = p.homogeneous_degree();
            if (!pd) return std::nullopt;
            int v = static_cast<int>(*pd) + F.shifts.at(c);
            if (d && *d != v) return std::nullopt;
            d = v;
        }
        return d ? d : std::optional<int>(0);
    }

    friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
        if (a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (a.entries_[i].first != b.entries_[i].first || !(a.entries_[i].second == b.entries_[i].second))
                return false;
        return true;
    }

   private:
    Ring ring_;
    std::vector<Entry> entries_;
};

/// sum_c coords_c * images_c, images given as module elements of a common target.
inline ModuleElement apply_matrix(const ModuleElement& v, const std::vector<ModuleElement>& columns, const Ring& ring) {
    ModuleElement acc(ring);
    for (const auto& [c, p] : v.entries()) {
        for (std::size_t t = 0; t < p.size(); ++t) acc = acc.axpy(p.coeff(t), p.exponents(t).data(), columns.at(c));
    }
    return acc;
}

/// Module monomial order on a free module: m e_c > m' e_c' when m T_c > m' T_c'
/// in the ring order, ties broken lexicographically by chain_c. Term-over-position
/// is T_c = 1, chain_c = (c); Schreyer orders carry the leading data of the
/// previous module.
class ModuleOrder {
   public:
    struct Key {
        Monomial total;
        std::vector<std::size_t> chain;
    };

    ModuleOrder() = default;
    ModuleOrder(Ring ring, std::vector<Key> keys) : ring_(std::move(ring)), keys_(std::move(keys)) {}

    static ModuleOrder term_over_position(Ring ring, std::size_t rank) {
        std::vector<Key> keys;
        for (std::size_t c = 0; c < rank; ++c) keys.push_back({Monomial(ring->nvars(), 0), {c}});
        return ModuleOrder(std::move(ring), std::move(keys));
    }

    std::size_t rank() const noexcept { return keys_.size(); }
    const Key& key(std::size_t c) const { return keys_.at(c); }

    int compare(std::span<const Exponent> a, std::size_t ca, std::span<const Exponent> b, std::size_t cb) const {
        const std::size_t n = a.size();
        tmp_a_.resize(n);
        tmp_b_.resize(n);
        mono::multiply_into(a.data(), keys_[ca].total.data(), tmp_a_.data(), n);
        mono::multiply_into(b.data(), keys_[cb].total.data(), tmp_b_.data(), n);
        int c = ring_->order().compare(tmp_a_.data(), tmp_b_.data(), n);
        if (c != 0) return c;
        const auto& x = keys_[ca].chain;
        const auto& y = keys_[cb].chain;
        for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
            if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
        return 0;
    }

    /// Leading component of a nonzero element.
    std::size_t leading_component(const ModuleElement& v) const {
        const auto& es = v.entries();
        if (es.empty()) fail(ErrorCode::InvalidArgument, "leading term of zero module element");
        std::size_t best = 0;
        for (std::size_t k = 1; k < es.size(); ++k)
            if (compare(es[k].second.exponents(0), es[k].first, es[best].second.exponents(0), es[best].first) > 0)
                best = k;
        return es[best].first;
    }

   private:
    Ring ring_;
    std::vector<Key> keys_;
    mutable Monomial tmp_a_, tmp_b_;
};

/// An element of a module Groebner basis with its leading term.
struct ModuleBasisElement {
    ModuleElement element;
    Monomial lead;
    std::size_t component = 0;
};

inline ModuleBasisElement make_basis_element(ModuleElement v, const ModuleOrder& order) {
    std::size_t c = order.leading_component(v);
    Polynomial p = v.at(c);
    Monomial lead(p.exponents(0).begin(), p.exponents(0).end());
    FieldElement lc = p.leading_coeff();
    if (lc.code != 1) {
        FieldElement inv = v.ring()->field().inv(lc);
        v = ModuleElement(v.ring()).axpy(inv, nullptr, v);
    }
    return {std::move(v), std::move(lead), c};
}

namespace detail {

// Dense reduction workspace for a module element.
class ModuleWorkspace {
   public:
    ModuleWorkspace(const Ring& ring, std::size_t rank) : ring_(ring), coords_(rank, Polynomial(ring)) {}

    void load(const ModuleElement& v) {
        for (const auto& [c, p] : v.entries()) {
            coords_.at(c) = p;
            nonzero_.push_back(c);
        }
    }

    void add(FieldElement c, const Exponent* m, const ModuleElement& other) {
        for (const auto& [k, p] : other.entries()) {
            bool was_zero = coords_.at(k).is_zero();
            coords_[k] = Polynomial::axpy(coords_[k], c, m, p);
            if (was_zero && !coords_[k].is_zero()) nonzero_.push_back(k);
        }
    }

    bool leading(const ModuleOrder& order, std::size_t& comp) {
        std::size_t w = 0;
        bool found = false;
        for (std::size_t k = 0; k < nonzero_.size(); ++k) {
            std::size_t c = nonzero_[k];
            if (coords_[c].is_zero()) continue;
            nonzero_[w++] = c;
            if (!found || order.compare(coords_[c].exponents(0), c, coords_[comp].exponents(0), comp) > 0) {
                comp = c;
                found = true;
            }
        }
        nonzero_.resize(w);
        return found;
    }

    Polynomial& at(std::size_t c) { return coords_[c]; }

   private:
    Ring ring_;
    std::vector<Polynomial> coords_;
    std::vector<std::size_t> nonzero_;
};

}  // namespace detail

/// Reduces v by a module basis, moving irreducible leading terms to the remainder.
/// Each reduction step c * m * basis[k] is reported through record(k, m, c).
template <class Record>
ModuleElement module_reduce(const ModuleElement& v, const std::vector<ModuleBasisElement>& basis,
                            const ModuleOrder& order, Record&& record) {
    const Ring& ring = v.ring();
    const Field& F = ring->field();
    std::vector<std::vector<std::size_t>> by_comp(order.rank());
    for (std::size_t k = 0; k < basis.size(); ++k) by_comp.at(basis[k].component).push_back(k);
    detail::ModuleWorkspace ws(ring, order.rank());
    ws.load(v);
    std::vector<std::tuple<std::size_t, Monomial, FieldElement>> rem;
    std::size_t steps = 0;
    std::size_t comp = 0;
    while (ws.leading(order, comp)) {
        Polynomial& p = ws.at(comp);
        auto lm = p.exponents(0);
        const ModuleBasisElement* red = nullptr;
        std::size_t red_index = 0;
        for (auto k : by_comp[comp]) {
            if (mono::divides(basis[k].lead, lm)) {
                red = &basis[k];
                red_index = k;
                break;
            }
        }
        if (red == nullptr) {
            rem.emplace_back(comp, Monomial(lm.begin(), lm.end()), p.leading_coeff());
            p = p.tail();
            continue;
        }
        Monomial q = mono::quotient(lm, red->lead);
        FieldElement c = p.leading_coeff();  // basis elements are monic
        record(red_index, q, c);
        ws.add(F.neg(c), q.data(), red->element);
        if (++steps > resource_caps().max_pairs * 16)
            fail(ErrorCode::ResourceCapExceeded, "module reduction step cap exceeded");
    }
    return ModuleElement::from_terms(ring, std::move(rem));
}

/// Syzygies of a module Groebner basis (w.r.t. `order` on the ambient module),
/// one per minimal generator of the leading-term quotients over pairs sharing a
/// leading component. Their leading terms are lcm/lead_j e_j under the induced
/// Schreyer order, so they form a Groebner basis of the syzygy module.
inline std::vector<ModuleBasisElement> schreyer_syzygies(const std::vector<ModuleBasisElement>& basis,
                                                         const ModuleOrder& order, const Ring& ring) {
    const Field& F = ring->field();
    std::vector<ModuleBasisElement> out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::vector<std::pair<Monomial, std::size_t>> quots;
        for (std::size_t i = 0; i < j; ++i) {
            if (basis[i].component != basis[j].component) continue;
            Monomial l = mono::lcm(basis[i].lead, basis[j].lead);
            quots.emplace_back(mono::quotient(l, basis[j].lead), i);
        }
        // minimal generators, first i wins among equal quotients
        std::vector<std::pair<Monomial, std::size_t>> minimal;
        for (std::size_t a = 0; a < quots.size(); ++a) {
            bool dominated = false;
            for (std::size_t b = 0; b < quots.size() && !dominated; ++b) {
                if (a == b) continue;
                if (mono::divides(quots[b].first, quots[a].first) &&
                    (quots[b].first != quots[a].first || b < a))
                    dominated = true;
            }
            if (!dominated) minimal.push_back(quots[a]);
        }
        for (auto& [q, i] : minimal) {
            Monomial l = mono::multiply(q, basis[j].lead);
            Monomial qi = mono::quotient(l, basis[i].lead);
            ModuleElement s = ModuleElement(ring).axpy(FieldElement{1}, q.data(), basis[j].element);
            s = s.axpy(F.neg(FieldElement{1}), qi.data(), basis[i].element);
            std::vector<std::tuple<std::size_t, Monomial, FieldElement>> terms;
            terms.emplace_back(j, q, FieldElement{1});
            terms.emplace_back(i, qi, F.neg(FieldElement{1}));
            ModuleElement rest = module_reduce(s, basis, order, [&](std::size_t k, const Monomial& m, FieldElement c) {
                terms.emplace_back(k, m, F.neg(c));
            });
            if (!rest.is_zero())
                fail(ErrorCode::InternalInconsistency, "S-element did not reduce to zero; input is not a Groebner basis");
            ModuleElement syz = ModuleElement::from_terms(ring, std::move(terms));
            out.push_back({std::move(syz), q, j});
        }
    }
    return out;
}

/// Module Groebner basis in term-over-position order, tracking each basis
/// element as a combination of the inputs.
struct TrackedModuleBasis {
    std::vector<ModuleBasisElement> basis;
    std::vector<ModuleElement> representation;  // basis[k] = sum_i representation[k]_i * input_i
};

inline TrackedModuleBasis tracked_module_groebner(const std::vector<ModuleElement>& inputs, const ModuleOrder& order,
                                                  const Ring& ring) {
    const Field& F = ring->field();
    TrackedModuleBasis G;
    auto add = [&](ModuleElement v, ModuleElement rep) {
        std::size_t c = order.leading_component(v);
        FieldElement lc = v.at(c).leading_coeff();
        FieldElement inv = F.inv(lc);
        v = ModuleElement(ring).axpy(inv, nullptr, v);
        rep = ModuleElement(ring).axpy(inv, nullptr, rep);
        G.basis.push_back(make_basis_element(std::move(v), order));
        G.representation.push_back(std::move(rep));
    };
    auto reduce_tracked = [&](const ModuleElement& v, ModuleElement rep) {
        ModuleElement r = module_reduce(v, G.basis, order, [&](std::size_t k, const Monomial& m, FieldElement c) {
            rep = rep.axpy(F.neg(c), m.data(), G.representation[k]);
        });
        return std::make_pair(std::move(r), std::move(rep));
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto [r, rep] = reduce_tracked(inputs[i], ModuleElement::unit(ring, i, Polynomial::constant(ring, FieldElement{1})));
        if (r.is_zero()) continue;
        std::size_t k = G.basis.size();
        add(std::move(r), std::move(rep));
        for (std::size_t a = 0; a < k; ++a)
            if (G.basis[a].component == G.basis[k].component) pairs.emplace_back(a, k);
    }
    std::uint64_t processed = 0;
    while (!pairs.empty()) {
        auto [a, b] = pairs.front();
        pairs.erase(pairs.begin());
        if (++processed > resource_caps().max_pairs) fail(ErrorCode::ResourceCapExceeded, "module S-pair cap exceeded");
        Monomial l = mono::lcm(G.basis[a].lead, G.basis[b].lead);
        Monomial qa = mono::quotient(l, G.basis[a].lead), qb = mono::quotient(l, G.basis[b].lead);
        ModuleElement s = ModuleElement(ring).axpy(FieldElement{1}, qa.data(), G.basis[a].element);
        s = s.axpy(F.neg(FieldElement{1}), qb.data(), G.basis[b].element);
        ModuleElement rep = ModuleElement(ring).axpy(FieldElement{1}, qa.data(), G.representation[a]);
        rep = rep.axpy(F.neg(FieldElement{1}), qb.data(), G.representation[b]);
        auto [r, rrep] = reduce_tracked(s, std::move(rep));
        if (r.is_zero()) continue;
        std::size_t k = G.basis.size();
        add(std::move(r), std::move(rrep));
        for (std::size_t x = 0; x < k; ++x)
            if (G.basis[x].component == G.basis[k].component) pairs.emplace_back(x, k);
    }
    return G;
}

/// Generators of the syzygy module of (g_1, ..., g_r) in a free module of the given rank:
/// all s with sum s_i g_i = 0. Gens must be homogeneous for the free-module grading.
inline std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, const GradedFreeModule& ambient,
                                           const Ring& ring) {
    for (const auto& g : gens)
        if (!g.homogeneous_degree(ambient)) fail(ErrorCode::NonHomogeneousInput, "syzygy input must be homogeneous");
    ModuleOrder top = ModuleOrder::term_over_position(ring, ambient.rank());
    TrackedModuleBasis G = tracked_module_groebner(gens, top, ring);
    std::vector<ModuleElement> out;
    // Syz(G) pulled back through the representation, plus the relations
    // e_i - (expression of g_i in G) pulled back the same way.
    auto syz = schreyer_syzygies(G.basis, top, ring);
    for (const auto& s : syz) {
        ModuleElement v = apply_matrix(s.element, G.representation, ring);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        ModuleElement expr(ring);
        ModuleElement r = module_reduce(gens[i], G.basis, top, [&](std::size_t k, const Monomial& m, FieldElement c) {
            expr = expr.axpy(c, m.data(), ModuleElement::unit(ring, k, Polynomial::constant(ring, FieldElement{1})));
        });
        if (!r.is_zero()) fail(ErrorCode::InternalInconsistency, "input not in its own module");
        ModuleElement v = ModuleElement::unit(ring, i, Polynomial::constant(ring, FieldElement{1})) -
                          apply_matrix(expr, G.representation, ring);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

/// Syzygies of homogeneous polynomials.
inline std::vector<ModuleElement> syzygies(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return {};
    const Ring& ring = gens.front().ring();
    std::vector<ModuleElement> v;
    for (const auto& g : gens) {
        if (!g.homogeneous_degree()) fail(ErrorCode::NonHomogeneousInput, "syzygy input must be homogeneous");
        v.push_back(ModuleElement::unit(ring, 0, g));
    }
    return syzygies(v, GradedFreeModule{{0}}, ring);
}

}  // namespace sepinv

#endif
