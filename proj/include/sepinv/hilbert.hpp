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

#ifndef SEPINV_HILBERT_HPP
#define SEPINV_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "monomial.hpp"

namespace sepinv {

/// Integer polynomial in t, low degree first, trailing zeros trimmed.
using HilbertPolynomial = std::vector<long long>;

namespace detail {

inline void trim(HilbertPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline HilbertPolynomial hp_add(HilbertPolynomial a, const HilbertPolynomial& b, long long sign = 1,
                                std::size_t shift = 0) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
    trim(a);
    return a;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        unsigned da = mono::degree(a), db = mono::degree(b);
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (mono::divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(g));
    }
    return out;
}

inline HilbertPolynomial numerator_rec(std::vector<Monomial> gens, std::size_t n) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    // pairwise coprime generators: product of (1 - t^deg)
    bool coprime = true;
    for (std::size_t a = 0; a < gens.size() && coprime; ++a)
        for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
            coprime = mono::coprime(gens[a], gens[b]);
    if (coprime) {
        HilbertPolynomial r{1};
        for (const auto& g : gens) {
            HilbertPolynomial f(mono::degree(g) + 1, 0);
            f[0] = 1;
            f.back() -= 1;
            HilbertPolynomial prod(r.size() + f.size() - 1, 0);
            for (std::size_t i = 0; i < r.size(); ++i)
                for (std::size_t j = 0; j < f.size(); ++j) prod[i + j] += r[i] * f[j];
            r = std::move(prod);
        }
        trim(r);
        return r;
    }
    // pivot x_v^e on the most frequent variable, e the median positive exponent
    std::size_t var = 0, best = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t cnt = 0;
        for (const auto& g : gens) cnt += g[v] != 0;
        if (cnt > best) {
            best = cnt;
            var = v;
        }
    }
    std::vector<Exponent> exps;
    for (const auto& g : gens)
        if (g[var] != 0) exps.push_back(g[var]);
    std::sort(exps.begin(), exps.end());
    Exponent e = exps[(exps.size() - 1) / 2];
    // HN(M) = HN(M + x^e) + t^e HN(M : x^e)
    std::vector<Monomial> with = gens;
    Monomial p(n, 0);
    p[var] = e;
    with.push_back(p);
    std::vector<Monomial> quot;
    for (const auto& g : gens) {
        Monomial q = g;
        q[var] = static_cast<Exponent>(q[var] > e ? q[var] - e : 0);
        quot.push_back(std::move(q));
    }
    HilbertPolynomial a = numerator_rec(std::move(with), n);
    HilbertPolynomial b = numerator_rec(std::move(quot), n);
    return hp_add(std::move(a), b, 1, e);
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of K[x_1..x_n]/M, M
/// generated by the given monomials (standard grading).
inline HilbertPolynomial hilbert_numerator(const std::vector<Monomial>& gens, std::size_t n) {
    for (const auto& g : gens)
        if (mono::degree(g) == 0) return {};
    return detail::numerator_rec(gens, n);
}

}  // namespace sepinv

#endif
