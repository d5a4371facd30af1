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

#ifndef SEPINV_GROEBNER_HPP
#define SEPINV_GROEBNER_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <vector>

#include "caps.hpp"
#include "polynomial.hpp"

namespace sepinv {

namespace detail {

struct Reducer {
    const Polynomial* poly;
    std::uint32_t mask;
};

inline const Polynomial* find_reducer(std::span<const Exponent> m, std::uint32_t mmask,
                                      const std::vector<Reducer>& reducers) {
    for (const auto& r : reducers) {
        if ((r.mask & ~mmask) != 0) continue;
        if (mono::divides(r.poly->leading_monomial(), m)) return r.poly;
    }
    return nullptr;
}

inline std::vector<Reducer> make_reducers(const std::vector<Polynomial>& basis) {
    std::vector<Reducer> out;
    out.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) out.push_back({&g, mono::support_mask(g.leading_monomial())});
    return out;
}

// Complete reduction of f: no term of the result is divisible by a reducer's
// leading monomial.
inline Polynomial full_reduce(Polynomial p, const std::vector<Reducer>& reducers) {
    const Ring ring = p.ring();
    if (reducers.empty() || p.is_zero()) return p;
    const Field& F = ring->field();
    std::vector<std::pair<Monomial, FieldElement>> rem;
    while (!p.is_zero()) {
        auto lm = p.leading_monomial();
        const Polynomial* g = find_reducer(lm, mono::support_mask(lm), reducers);
        if (g != nullptr) {
            Monomial q = mono::quotient(lm, g->leading_monomial());
            FieldElement c = F.neg(F.div(p.leading_coeff(), g->leading_coeff()));
            p = Polynomial::axpy(p, c, q.data(), *g);
        } else {
            rem.emplace_back(Monomial(lm.begin(), lm.end()), p.leading_coeff());
            p = p.tail();
        }
    }
    return Polynomial::from_terms(ring, std::move(rem));
}

}  // namespace detail

/// Remainder of f on division by `basis` (full reduction). When basis is a
/// Groebner basis the result is the unique normal form.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    return detail::full_reduce(f, detail::make_reducers(basis));
}

/// S-polynomial of two nonzero polynomials.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Field& F = f.field();
    Monomial l = mono::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial qf = mono::quotient(l, f.leading_monomial());
    Monomial qg = mono::quotient(l, g.leading_monomial());
    Polynomial a = f.shifted(qf, F.inv(f.leading_coeff()));
    return Polynomial::axpy(a, F.neg(F.inv(g.leading_coeff())), qg.data(), g);
}

struct GroebnerStats {
    std::uint64_t pairs_considered = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
};

/// Reduced Groebner basis (monic, inter-reduced, sorted by decreasing leading
/// monomial) in the ring order of the inputs. Buchberger with the
/// Gebauer-Moeller criteria; pairs are taken by smallest sugar, then smallest
/// lcm, which for homogeneous input is the normal strategy.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& input, GroebnerStats* stats = nullptr,
                                              const ResourceCaps& caps = resource_caps()) {
    struct Entry {
        Polynomial f;
        Monomial lm;
        unsigned sugar;
        std::uint32_t mask;
        bool active;
    };
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        unsigned sugar;
    };

    std::vector<Polynomial> gens;
    for (const auto& f : input) {
        if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) return {};
    const Ring ring = gens.front().ring();
    for (const auto& g : gens)
        if (!same_ring(g.ring(), ring)) fail(ErrorCode::RingMismatch, "Groebner input from several rings");
    const std::size_t n = ring->nvars();
    const auto& ord = ring->order();
    const Field& F = ring->field();

    std::vector<Entry> G;
    std::vector<Pair> B;
    GroebnerStats local;
    GroebnerStats& st = stats != nullptr ? *stats : local;

    auto unit_basis = [&]() { return std::vector<Polynomial>{Polynomial::constant(ring, FieldElement{1})}; };

    auto active_reducers = [&]() {
        std::vector<detail::Reducer> rs;
        for (const auto& e : G)
            if (e.active) rs.push_back({&e.f, e.mask});
        return rs;
    };

    auto insert = [&](Polynomial h, unsigned sugar) {
        Entry e{h.monic(), Monomial(h.leading_monomial().begin(), h.leading_monomial().end()), sugar,
                mono::support_mask(h.leading_monomial()), true};
        const std::size_t hi = G.size();
        const std::span<const Exponent> lh = e.lm;

        // Gebauer-Moeller: new pairs (h, g)
        std::vector<Pair> C;
        for (std::size_t g = 0; g < G.size(); ++g) {
            if (!G[g].active) continue;
            Monomial l = mono::lcm(lh, G[g].lm);
            unsigned d = mono::degree(l);
            unsigned s = std::max(sugar + d - mono::degree(lh), G[g].sugar + d - mono::degree(G[g].lm));
            C.push_back({g, hi, std::move(l), s});
        }
        std::vector<Pair> D;
        for (std::size_t k = 0; k < C.size(); ++k) {
            bool keep = mono::coprime(lh, G[C[k].i].lm);
            if (!keep) {
                keep = true;
                for (std::size_t m = k + 1; m < C.size() && keep; ++m)
                    if (mono::divides(C[m].lcm, C[k].lcm)) keep = false;
                for (std::size_t m = 0; m < D.size() && keep; ++m)
                    if (mono::divides(D[m].lcm, C[k].lcm)) keep = false;
            }
            if (keep) D.push_back(std::move(C[k]));
        }
        std::vector<Pair> E;
        for (auto& p : D)
            if (!mono::coprime(lh, G[p.i].lm)) E.push_back(std::move(p));
        // drop old pairs made redundant by h
        std::vector<Pair> kept;
        kept.reserve(B.size() + E.size());
        for (auto& p : B) {
            bool redundant = false;
            if (mono::divides(lh, p.lcm)) {
                Monomial a = mono::lcm(G[p.i].lm, lh);
                Monomial b = mono::lcm(lh, G[p.j].lm);
                redundant = a != p.lcm && b != p.lcm;
            }
            if (!redundant) kept.push_back(std::move(p));
        }
        for (auto& p : E) kept.push_back(std::move(p));
        B = std::move(kept);
        for (auto& g : G)
            if (g.active && mono::divides(lh, g.lm)) g.active = false;
        G.push_back(std::move(e));
    };

    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (const auto& f : gens) {
        Polynomial h = detail::full_reduce(f, active_reducers());
        if (h.is_zero()) continue;
        if (h.is_constant()) return unit_basis();
        insert(std::move(h), f.total_degree());
    }

    while (!B.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < B.size(); ++k) {
            const Pair& a = B[k];
            const Pair& b = B[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
                continue;
            }
            int c = ord.compare(a.lcm.data(), b.lcm.data(), n);
            if (c < 0 || (c == 0 && (a.j < b.j || (a.j == b.j && a.i < b.i)))) best = k;
        }
        Pair p = std::move(B[best]);
        B[best] = std::move(B.back());
        B.pop_back();

        if (++st.pairs_considered > caps.max_pairs)
            fail(ErrorCode::ResourceCapExceeded, "S-pair cap " + std::to_string(caps.max_pairs) + " exceeded");
        if (p.sugar > caps.max_degree)
            fail(ErrorCode::ResourceCapExceeded, "degree cap " + std::to_string(caps.max_degree) + " exceeded");
        ++st.pairs_reduced;
        Polynomial s = s_polynomial(G[p.i].f, G[p.j].f);
        Polynomial h = detail::full_reduce(std::move(s), active_reducers());
        if (h.is_zero()) {
            ++st.zero_reductions;
            continue;
        }
        if (h.is_constant()) return unit_basis();
        insert(std::move(h), p.sugar);
    }

    std::vector<Polynomial> basis;
    for (const auto& e : G)
        if (e.active) basis.push_back(e.f);
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    std::vector<Polynomial> reduced;
    reduced.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<detail::Reducer> others;
        for (std::size_t m = 0; m < basis.size(); ++m)
            if (m != k) others.push_back({&basis[m], mono::support_mask(basis[m].leading_monomial())});
        Polynomial t = detail::full_reduce(basis[k].tail(), others);
        reduced.push_back((basis[k].leading_term() + t).monic());
    }
    (void)F;
    return reduced;
}

/// Ideal of a polynomial ring, with its reduced Groebner basis (for the ring
/// order) computed on first use and shared between copies.
class Ideal {
   public:
    explicit Ideal(Ring ring, std::vector<Polynomial> gens = {}) : ring_(std::move(ring)), gens_(std::move(gens)) {
        for (const auto& g : gens_)
            if (!same_ring(g.ring(), ring_)) fail(ErrorCode::RingMismatch, "ideal generator from another ring");
        cache_ = std::make_shared<Cache>();
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }

    const std::vector<Polynomial>& groebner_basis() const {
        std::call_once(cache_->once, [this] { cache_->basis = sepinv::groebner_basis(gens_); });
        return cache_->basis;
    }

    /// Seeds the cache with a basis already known to be the reduced Groebner basis.
    static Ideal from_reduced_basis(Ring ring, std::vector<Polynomial> basis) {
        Ideal I(std::move(ring), basis);
        std::call_once(I.cache_->once, [&] { I.cache_->basis = std::move(basis); });
        return I;
    }

    Polynomial normal_form(const Polynomial& f) const {
        if (!same_ring(f.ring(), ring_)) fail(ErrorCode::RingMismatch, "normal form across rings");
        return reduce(f, groebner_basis());
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool contains(const Ideal& J) const {
        for (const auto& g : J.generators())
            if (!contains(g)) return false;
        return true;
    }

    bool is_unit() const {
        const auto& gb = groebner_basis();
        return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
    }

    bool is_zero() const { return groebner_basis().empty(); }

    bool is_homogeneous() const {
        for (const auto& g : gens_)
            if (!g.homogeneous_degree()) return false;
        return true;
    }

    /// Leading monomials of the reduced Groebner basis.
    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& g : groebner_basis()) out.emplace_back(g.leading_monomial().begin(), g.leading_monomial().end());
        return out;
    }

    friend Ideal operator+(const Ideal& a, const Ideal& b) {
        if (!same_ring(a.ring_, b.ring_)) fail(ErrorCode::RingMismatch, "sum of ideals in different rings");
        std::vector<Polynomial> g = a.gens_;
        g.insert(g.end(), b.gens_.begin(), b.gens_.end());
        return Ideal(a.ring_, std::move(g));
    }

    /// Equality as ideals (identical reduced Groebner bases).
    friend bool operator==(const Ideal& a, const Ideal& b) {
        return same_ring(a.ring_, b.ring_) && a.groebner_basis() == b.groebner_basis();
    }

   private:
    struct Cache {
        std::once_flag once;
        std::vector<Polynomial> basis;
    };

    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis of I with respect to another order; the result
/// lives in the re-ordered ring.
inline std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& order) {
    if (I.ring()->order() == order) return I.groebner_basis();
    Ring r = I.ring()->with_order(order);
    std::vector<Polynomial> g;
    for (const auto& f : I.generators()) g.push_back(f.reorder(r));
    return groebner_basis(g);
}

inline Polynomial normal_form(const Polynomial& f, const Ideal& I) { return I.normal_form(f); }

}  // namespace sepinv

#endif
