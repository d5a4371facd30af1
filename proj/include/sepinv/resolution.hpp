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

#ifndef SEPINV_RESOLUTION_HPP
#define SEPINV_RESOLUTION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hilbert.hpp"
#include "ideal.hpp"
#include "module.hpp"

namespace sepinv {

/// Graded Betti numbers beta_{i,j}: rank of the degree-j part of F_i.
class BettiTable {
   public:
    void add(std::size_t i, int j, std::size_t count = 1) {
        if (count != 0) entries_[{i, j}] += count;
    }

    std::size_t at(std::size_t i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    std::size_t total(std::size_t i) const {
        std::size_t s = 0;
        for (const auto& [k, v] : entries_)
            if (k.first == i) s += v;
        return s;
    }

    std::vector<std::size_t> totals() const {
        std::vector<std::size_t> out;
        for (const auto& [k, v] : entries_) {
            if (out.size() <= k.first) out.resize(k.first + 1, 0);
            out[k.first] += v;
        }
        return out;
    }

    const std::map<std::pair<std::size_t, int>, std::size_t>& entries() const noexcept { return entries_; }

    /// Rows are j - i, columns are homological degree i, '.' for zero.
    std::string render() const {
        if (entries_.empty()) return "";
        std::size_t imax = 0;
        int rmin = 0, rmax = 0;
        bool first = true;
        for (const auto& [k, v] : entries_) {
            int r = k.second - static_cast<int>(k.first);
            imax = std::max(imax, k.first);
            if (first) rmin = rmax = r;
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
            first = false;
        }
        auto pad = [](std::string s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
        std::string out = pad("", 6);
        for (std::size_t i = 0; i <= imax; ++i) out += pad(std::to_string(i), 6);
        out += "\n" + pad("total:", 6);
        for (std::size_t i = 0; i <= imax; ++i) out += pad(std::to_string(total(i)), 6);
        out += "\n";
        for (int r = rmin; r <= rmax; ++r) {
            out += pad(std::to_string(r) + ":", 6);
            for (std::size_t i = 0; i <= imax; ++i) {
                std::size_t v = at(i, r + static_cast<int>(i));
                out += pad(v == 0 ? "." : std::to_string(v), 6);
            }
            out += "\n";
        }
        return out;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

   private:
    std::map<std::pair<std::size_t, int>, std::size_t> entries_;
};

/// Free resolution F_0 <- F_1 <- ... <- F_l of K[x]/I. differentials[i]
/// holds the columns of d_i : F_i -> F_{i-1} (index 0 unused).
struct Resolution {
    Ring ring;
    std::vector<GradedFreeModule> modules;
    std::vector<std::vector<ModuleElement>> differentials;

    std::size_t length() const noexcept { return modules.empty() ? 0 : modules.size() - 1; }

    BettiTable betti() const {
        BettiTable t;
        for (std::size_t i = 0; i < modules.size(); ++i)
            for (int s : modules[i].shifts) t.add(i, s);
        return t;
    }

    /// sum_i (-1)^i sum_b t^{shift_b}.
    HilbertPolynomial alternating_numerator() const {
        HilbertPolynomial r;
        for (std::size_t i = 0; i < modules.size(); ++i)
            for (int s : modules[i].shifts) {
                HilbertPolynomial mono(static_cast<std::size_t>(s) + 1, 0);
                mono.back() = 1;
                r = detail::hp_add(std::move(r), mono, i % 2 == 0 ? 1 : -1);
            }
        return r;
    }
};

namespace detail {

inline bool lex_greater(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// Elements sharing a leading component in decreasing lex order of their leading
// monomials; this keeps the Schreyer frame within nvars steps.
inline void sort_for_schreyer(std::vector<ModuleBasisElement>& v) {
    std::stable_sort(v.begin(), v.end(), [](const ModuleBasisElement& a, const ModuleBasisElement& b) {
        if (a.component != b.component) return a.component < b.component;
        return lex_greater(a.lead, b.lead);
    });
}

inline bool is_unit_entry(const Polynomial& p) { return !p.is_zero() && p.is_constant(); }

}  // namespace detail

/// Schreyer resolution of K[x]/I from the reduced Groebner basis of I; exact
/// but usually not minimal.
inline Resolution schreyer_resolution(const Ideal& I) {
    const Ring& ring = I.ring();
    if (!I.is_homogeneous()) fail(ErrorCode::NonHomogeneousInput, "resolution needs homogeneous generators");
    if (I.is_unit()) fail(ErrorCode::UnitIdeal, "resolution of the zero ring");
    Resolution res;
    res.ring = ring;
    res.modules.push_back(GradedFreeModule{{0}});
    res.differentials.emplace_back();
    const auto& gb = I.groebner_basis();
    if (gb.empty()) return res;

    ModuleOrder order = ModuleOrder::term_over_position(ring, 1);
    std::vector<ModuleBasisElement> level;
    for (const auto& g : gb)
        level.push_back({ModuleElement::unit(ring, 0, g),
                         Monomial(g.leading_monomial().begin(), g.leading_monomial().end()), 0});
    detail::sort_for_schreyer(level);

    const std::size_t max_levels = ring->nvars() + 1;
    while (!level.empty()) {
        if (res.modules.size() > max_levels)
            fail(ErrorCode::InternalInconsistency, "Schreyer frame longer than the number of variables");
        const GradedFreeModule& prev = res.modules.back();
        GradedFreeModule F;
        std::vector<ModuleOrder::Key> keys;
        std::vector<ModuleElement> columns;
        for (std::size_t b = 0; b < level.size(); ++b) {
            const auto& e = level[b];
            F.shifts.push_back(static_cast<int>(mono::degree(e.lead)) + prev.shifts.at(e.component));
            const auto& pk = order.key(e.component);
            std::vector<std::size_t> chain = pk.chain;
            chain.push_back(b);
            keys.push_back({mono::multiply(e.lead, pk.total), std::move(chain)});
            columns.push_back(e.element);
        }
        auto next = schreyer_syzygies(level, order, ring);
        res.modules.push_back(std::move(F));
        res.differentials.push_back(std::move(columns));
        order = ModuleOrder(ring, std::move(keys));
        detail::sort_for_schreyer(next);
        level = std::move(next);
    }
    return res;
}

/// Splits off trivial summands R(-d) <- R(-d) (unit entries) until none are
/// left; the result is a minimal graded free resolution.
inline Resolution minimize(Resolution res) {
    const std::size_t L = res.length();
    const Ring& ring = res.ring;
    const Field& F = ring->field();
    std::vector<std::vector<bool>> alive(L + 1);
    for (std::size_t i = 0; i <= L; ++i) alive[i].assign(res.modules[i].rank(), true);

    for (std::size_t lvl = 1; lvl <= L; ++lvl) {
        auto& cols = res.differentials[lvl];
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t b = 0; b < cols.size(); ++b) {
                if (!alive[lvl][b]) continue;
                std::size_t a = 0;
                FieldElement u{0};
                bool found = false;
                for (const auto& [row, p] : cols[b].entries()) {
                    if (alive[lvl - 1][row] && detail::is_unit_entry(p)) {
                        a = row;
                        u = p.leading_coeff();
                        found = true;
                        break;
                    }
                }
                if (!found) continue;
                const FieldElement uinv = F.inv(u);
                const ModuleElement pivot_col = cols[b];
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    if (c == b || !alive[lvl][c]) continue;
                    Polynomial x = cols[c].at(a);
                    if (x.is_zero()) continue;
                    Polynomial factor = x.scaled(F.neg(uinv));
                    ModuleElement upd = cols[c];
                    for (std::size_t t = 0; t < factor.size(); ++t)
                        upd = upd.axpy(factor.coeff(t), factor.exponents(t).data(), pivot_col);
                    cols[c] = std::move(upd);
                }
                alive[lvl][b] = false;
                alive[lvl - 1][a] = false;
                changed = true;
            }
        }
    }

    // compact
    std::vector<std::vector<std::size_t>> index(L + 1);
    for (std::size_t i = 0; i <= L; ++i) {
        index[i].assign(alive[i].size(), static_cast<std::size_t>(-1));
        std::size_t k = 0;
        for (std::size_t b = 0; b < alive[i].size(); ++b)
            if (alive[i][b]) index[i][b] = k++;
    }
    Resolution out;
    out.ring = ring;
    out.differentials.emplace_back();
    for (std::size_t i = 0; i <= L; ++i) {
        GradedFreeModule F2;
        for (std::size_t b = 0; b < alive[i].size(); ++b)
            if (alive[i][b]) F2.shifts.push_back(res.modules[i].shifts[b]);
        if (F2.rank() == 0) break;
        out.modules.push_back(std::move(F2));
        if (i == 0) continue;
        std::vector<ModuleElement> cols;
        for (std::size_t b = 0; b < alive[i].size(); ++b) {
            if (!alive[i][b]) continue;
            const auto& rows_alive = alive[i - 1];
            const auto& rows_index = index[i - 1];
            cols.push_back(res.differentials[i][b].filtered([&](std::size_t r) { return rows_alive[r]; },
                                                            [&](std::size_t r) { return rows_index[r]; }));
        }
        out.differentials.push_back(std::move(cols));
    }
    return out;
}

/// Minimal graded free resolution of K[x]/I for homogeneous, proper I.
inline Resolution minimal_free_resolution(const Ideal& I) { return minimize(schreyer_resolution(I)); }

/// d_{i-1} o d_i == 0 for every i, and d_1 maps onto the ideal generators' span.
inline bool composes_to_zero(const Resolution& res) {
    for (std::size_t i = 2; i < res.differentials.size(); ++i) {
        for (const auto& col : res.differentials[i])
            if (!apply_matrix(col, res.differentials[i - 1], res.ring).is_zero()) return false;
    }
    return true;
}

/// No differential entry is a nonzero constant.
inline bool is_minimal(const Resolution& res) {
    for (std::size_t i = 1; i < res.differentials.size(); ++i)
        for (const auto& col : res.differentials[i])
            for (const auto& [r, p] : col.entries())
                if (detail::is_unit_entry(p)) return false;
    return true;
}

/// Every column is homogeneous of the degree of its basis element.
inline bool is_graded(const Resolution& res) {
    for (std::size_t i = 1; i < res.differentials.size(); ++i)
        for (std::size_t b = 0; b < res.differentials[i].size(); ++b) {
            auto d = res.differentials[i][b].homogeneous_degree(res.modules[i - 1]);
            if (!d || (*d != res.modules[i].shifts[b] && !res.differentials[i][b].is_zero())) return false;
        }
    return true;
}

/// Hilbert numerator of K[x]/I computed from the leading-term ideal.
inline HilbertPolynomial hilbert_numerator(const Ideal& I) {
    return hilbert_numerator(I.leading_monomials(), I.ring()->nvars());
}

struct DefectReport {
    std::size_t dimension = 0;
    std::size_t projective_dimension = 0;
    std::size_t depth = 0;
    std::size_t cmdef = 0;
    BettiTable betti;
};

/// dim, pd, depth (= nvars - pd, Auslander-Buchsbaum) and cmdef = dim - depth
/// of K[x]/I.
inline DefectReport cohen_macaulay_report(const Ideal& I) {
    if (!I.is_homogeneous()) fail(ErrorCode::NonHomogeneousInput, "cmdef needs a homogeneous ideal");
    if (I.is_unit()) fail(ErrorCode::UnitIdeal, "cmdef of the zero ring");
    DefectReport r;
    Resolution res = minimal_free_resolution(I);
    r.dimension = dimension(I);
    r.projective_dimension = res.length();
    const std::size_t n = I.ring()->nvars();
    if (r.projective_dimension > n) fail(ErrorCode::InternalInconsistency, "projective dimension exceeds nvars");
    r.depth = n - r.projective_dimension;
    if (r.depth > r.dimension) fail(ErrorCode::InternalInconsistency, "depth exceeds dimension");
    r.cmdef = r.dimension - r.depth;
    r.betti = res.betti();
    return r;
}

inline std::size_t cohen_macaulay_defect(const Ideal& I) { return cohen_macaulay_report(I).cmdef; }

}  // namespace sepinv

#endif
