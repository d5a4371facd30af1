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

#ifndef SEPINV_MONOMIAL_HPP
#define SEPINV_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace sepinv {

using Exponent = std::uint16_t;
using Monomial = std::vector<Exponent>;

namespace mono {

inline unsigned degree(std::span<const Exponent> a) noexcept {
    unsigned d = 0;
    for (auto e : a) d += e;
    return d;
}

inline bool divides(const Exponent* a, const Exponent* b, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool divides(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
    return divides(a.data(), b.data(), a.size());
}

inline bool coprime(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

inline Monomial lcm(std::span<const Exponent> a, std::span<const Exponent> b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

/// a / b; requires b | a.
inline Monomial quotient(std::span<const Exponent> a, std::span<const Exponent> b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Exponent>(a[i] - b[i]);
    return r;
}

inline void multiply_into(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        unsigned s = unsigned{a[i]} + b[i];
        if (s > 0xFFFFu) fail(ErrorCode::ResourceCapExceeded, "exponent overflow");
        out[i] = static_cast<Exponent>(s);
    }
}

inline Monomial multiply(std::span<const Exponent> a, std::span<const Exponent> b) {
    Monomial r(a.size());
    multiply_into(a.data(), b.data(), r.data(), a.size());
    return r;
}

/// Bit i set when variable i (mod 32) occurs; a necessary condition filter for divisibility.
inline std::uint32_t support_mask(std::span<const Exponent> a) noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) m |= 1u << (i % 32);
    return m;
}

}  // namespace mono

/// Monomial orders on exponent vectors. Block orders compare the first
/// `split` variables first, then the rest; weighted orders compare a
/// weighted degree and break ties with grevlex.
class MonomialOrder {
   public:
    enum class Kind : std::uint8_t { lex, grevlex, block, weighted };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }

    static MonomialOrder block(std::size_t split, Kind first = Kind::grevlex, Kind second = Kind::grevlex) {
        if ((first != Kind::lex && first != Kind::grevlex) || (second != Kind::lex && second != Kind::grevlex))
            fail(ErrorCode::InvalidArgument, "block order parts must be lex or grevlex");
        MonomialOrder o(Kind::block);
        o.split_ = split;
        o.first_ = first;
        o.second_ = second;
        return o;
    }

    static MonomialOrder weighted(std::vector<unsigned> weights) {
        MonomialOrder o(Kind::weighted);
        o.weights_ = std::move(weights);
        return o;
    }

    Kind kind() const noexcept { return kind_; }
    std::size_t split() const noexcept { return split_; }

    /// Positive when a > b.
    int compare(const Exponent* a, const Exponent* b, std::size_t n) const noexcept {
        switch (kind_) {
            case Kind::lex: return lex_cmp(a, b, 0, n);
            case Kind::grevlex: return grevlex_cmp(a, b, 0, n);
            case Kind::block: {
                std::size_t s = split_ < n ? split_ : n;
                int c = part_cmp(first_, a, b, 0, s);
                return c != 0 ? c : part_cmp(second_, a, b, s, n);
            }
            case Kind::weighted: {
                unsigned long wa = 0, wb = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    unsigned w = i < weights_.size() ? weights_[i] : 1;
                    wa += static_cast<unsigned long>(w) * a[i];
                    wb += static_cast<unsigned long>(w) * b[i];
                }
                if (wa != wb) return wa > wb ? 1 : -1;
                return grevlex_cmp(a, b, 0, n);
            }
        }
        return 0;
    }

    int compare(std::span<const Exponent> a, std::span<const Exponent> b) const noexcept {
        return compare(a.data(), b.data(), a.size());
    }

    /// Whether the order refines total degree (so leading terms have maximal degree).
    bool is_degree_compatible() const noexcept {
        if (kind_ == Kind::grevlex) return true;
        if (kind_ == Kind::weighted) {
            for (auto w : weights_)
                if (w != 1) return false;
            return true;
        }
        return false;
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::grevlex: return "grevlex";
            case Kind::block:
                return "block(" + std::to_string(split_) + "," + kind_name(first_) + "," + kind_name(second_) + ")";
            case Kind::weighted: {
                std::string s = "weighted(";
                for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
                return s + ")";
            }
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    static std::string kind_name(Kind k) { return k == Kind::lex ? "lex" : "grevlex"; }

    static int lex_cmp(const Exponent* a, const Exponent* b, std::size_t lo, std::size_t hi) noexcept {
        for (std::size_t i = lo; i < hi; ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }

    static int grevlex_cmp(const Exponent* a, const Exponent* b, std::size_t lo, std::size_t hi) noexcept {
        unsigned da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    static int part_cmp(Kind k, const Exponent* a, const Exponent* b, std::size_t lo, std::size_t hi) noexcept {
        return k == Kind::lex ? lex_cmp(a, b, lo, hi) : grevlex_cmp(a, b, lo, hi);
    }

    Kind kind_;
    std::size_t split_ = 0;
    Kind first_ = Kind::grevlex;
    Kind second_ = Kind::grevlex;
    std::vector<unsigned> weights_;
};

}  // namespace sepinv

#endif
