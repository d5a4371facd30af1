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

#ifndef SEPINV_FIELD_HPP
#define SEPINV_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "caps.hpp"
#include "error.hpp"

namespace sepinv {

/// Element of a finite field F_{p^e}. The code is the reduced polynomial
/// c_0 + c_1 t + ... + c_{e-1} t^{e-1} read as the base-p integer
/// sum c_i p^i, so equality of codes is equality of elements.
struct FieldElement {
    std::uint32_t code = 0;

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Dense polynomials over F_p, low degree first, used only for modulus checks
// and for extension-field multiplication.
using DensePoly = std::vector<std::uint32_t>;

inline void trim(DensePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
inline DensePoly poly_mod(DensePoly a, const DensePoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            std::uint64_t sub = lead * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of index.
inline DensePoly monic_from_index(std::uint64_t index, std::size_t d, std::uint32_t p) {
    DensePoly r(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        r[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    r[d] = 1;
    return r;
}

}  // namespace detail

/// A finite field F_p or F_{p^e} = F_p[t]/(modulus). Cheap to copy; all
/// copies share one immutable table set.
class Field {
   public:
    /// Arithmetic tables are built when p^e does not exceed this.
    static constexpr std::uint64_t kTableLimit = 1u << 16;

    static Field make(std::uint32_t p, unsigned e = 1, std::optional<std::vector<std::uint32_t>> modulus = {}) {
        if (!detail::is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
        if (e == 0) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= p;
            if (q > (std::uint64_t{1} << 31))
                fail(ErrorCode::InvalidArgument, "field order exceeds 2^31");
        }
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->e = e;
        impl->q = q;
        if (e == 1) {
            if (modulus && !modulus->empty()) fail(ErrorCode::InvalidArgument, "a prime field takes no modulus");
        } else {
            if (!modulus) fail(ErrorCode::MissingModulus, "extension degree " + std::to_string(e) + " needs a modulus");
            detail::DensePoly m;
            for (auto c : *modulus) m.push_back(c % p);
            detail::trim(m);
            if (m.size() != e + 1 || m.back() != 1)
                fail(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(e));
            if (!irreducible(m, p)) fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
            impl->modulus = m;
            if (q <= kTableLimit) build_tables(*impl);
        }
        return Field(std::move(impl));
    }

    static Field prime(std::uint32_t p) { return make(p); }

    /// F_{p^e} with the first irreducible monic modulus, ordering the lower
    /// coefficients as base-p digits (t^2+t+1 over F_2, t^3+t+1 for e = 3).
    static Field standard(std::uint32_t p, unsigned e = 1) {
        if (e <= 1 || !detail::is_prime(p)) return make(p, e);
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) {
            count *= p;
            if (count > (std::uint64_t{1} << 31)) fail(ErrorCode::InvalidArgument, "field order exceeds 2^31");
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto m = detail::monic_from_index(idx, e, p);
            if (irreducible(m, p)) return make(p, e, std::vector<std::uint32_t>(m.begin(), m.end()));
        }
        fail(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
    }

    std::uint32_t characteristic() const noexcept { return impl_->p; }
    unsigned degree() const noexcept { return impl_->e; }
    std::uint64_t order() const noexcept { return impl_->q; }
    bool is_prime_field() const noexcept { return impl_->e == 1; }
    /// Low degree first, monic; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }

    /// Image of an integer under Z -> F_p -> F_{p^e}.
    FieldElement from_int(long long v) const noexcept {
        long long p = impl_->p;
        long long r = v % p;
        if (r < 0) r += p;
        return {static_cast<std::uint32_t>(r)};
    }

    /// Element with coefficient list c_0 + c_1 t + ..., reduced modulo the modulus.
    FieldElement from_coefficients(const std::vector<long long>& coeffs) const {
        detail::DensePoly a;
        for (auto c : coeffs) a.push_back(from_int(c).code);
        if (impl_->e > 1) a = detail::poly_mod(a, impl_->modulus, impl_->p);
        else if (a.size() > 1) fail(ErrorCode::InvalidArgument, "prime field element given as a polynomial");
        return encode(a);
    }

    std::vector<std::uint32_t> coefficients(FieldElement a) const {
        std::vector<std::uint32_t> out(impl_->e, 0);
        std::uint32_t c = a.code;
        for (unsigned i = 0; i < impl_->e; ++i) {
            out[i] = c % impl_->p;
            c /= impl_->p;
        }
        return out;
    }

    /// Whether a lies in the prime subfield.
    bool in_prime_field(FieldElement a) const noexcept { return a.code < impl_->p; }

    FieldElement add(FieldElement a, FieldElement b) const noexcept {
        const auto& m = *impl_;
        if (m.e == 1) {
            std::uint32_t s = a.code + b.code;
            return {s >= m.p ? s - m.p : s};
        }
        if (m.p == 2) return {a.code ^ b.code};
        std::uint32_t r = 0, mul = 1, x = a.code, y = b.code;
        for (unsigned i = 0; i < m.e; ++i) {
            r += ((x % m.p + y % m.p) % m.p) * mul;
            x /= m.p;
            y /= m.p;
            mul *= m.p;
        }
        return {r};
    }

    FieldElement neg(FieldElement a) const noexcept {
        const auto& m = *impl_;
        if (m.p == 2) return a;
        if (m.e == 1) return {a.code == 0 ? 0 : m.p - a.code};
        std::uint32_t r = 0, mul = 1, x = a.code;
        for (unsigned i = 0; i < m.e; ++i) {
            std::uint32_t d = x % m.p;
            r += (d == 0 ? 0 : m.p - d) * mul;
            x /= m.p;
            mul *= m.p;
        }
        return {r};
    }

    FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

    FieldElement mul(FieldElement a, FieldElement b) const {
        const auto& m = *impl_;
        if (a.code == 0 || b.code == 0) return {0};
        if (m.e == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % m.p)};
        if (!m.log.empty()) {
            std::uint32_t s = m.log[a.code] + m.log[b.code];
            if (s >= m.q - 1) s -= static_cast<std::uint32_t>(m.q - 1);
            return {m.exp[s]};
        }
        return slow_mul(a, b);
    }

    FieldElement inv(FieldElement a) const {
        const auto& m = *impl_;
        if (a.code == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
        if (m.e == 1) return {static_cast<std::uint32_t>(detail::pow_mod(a.code, m.p - 2, m.p))};
        if (!m.log.empty()) {
            std::uint32_t l = m.log[a.code];
            return {m.exp[l == 0 ? 0 : static_cast<std::uint32_t>(m.q - 1) - l]};
        }
        return pow(a, m.q - 2);
    }

    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    FieldElement pow(FieldElement a, std::uint64_t k) const {
        FieldElement r = one();
        while (k != 0) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    /// Every element exactly once, zero first, in code order.
    std::vector<FieldElement> enumerate(std::uint64_t cap = resource_caps().max_enumeration) const {
        if (impl_->q > cap)
            fail(ErrorCode::EnumerationCapExceeded,
                 "field of order " + std::to_string(impl_->q) + " exceeds cap " + std::to_string(cap));
        std::vector<FieldElement> out;
        out.reserve(impl_->q);
        for (std::uint64_t c = 0; c < impl_->q; ++c) out.push_back({static_cast<std::uint32_t>(c)});
        return out;
    }

    /// "F_5", "F_4[t]/(t^2+t+1)".
    std::string describe() const {
        std::string s = "F_" + std::to_string(impl_->q);
        if (impl_->e > 1) {
            s += "[t]/(";
            bool first = true;
            for (std::size_t i = impl_->modulus.size(); i-- > 0;) {
                auto c = impl_->modulus[i];
                if (c == 0) continue;
                if (!first) s += "+";
                first = false;
                if (i == 0 || c != 1) s += std::to_string(c);
                if (i > 0) s += (c != 1 ? "*t" : "t") + (i > 1 ? "^" + std::to_string(i) : std::string());
            }
            s += ")";
        }
        return s;
    }

    /// Renders an element as an integer (prime field) or a polynomial in `gen`.
    std::string render(FieldElement a, const std::string& gen = "a") const {
        if (impl_->e == 1 || a.code < impl_->p) return std::to_string(a.code);
        auto c = coefficients(a);
        std::string s;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? gen : gen + "^" + std::to_string(i));
            if (mono.empty()) s += std::to_string(c[i]);
            else if (c[i] == 1) s += mono;
            else s += std::to_string(c[i]) + "*" + mono;
        }
        return "(" + s + ")";
    }

    /// The generator t of F_p[t]/(modulus); for prime fields, fails.
    FieldElement generator() const {
        if (impl_->e == 1) fail(ErrorCode::InvalidArgument, "prime field has no adjoined generator");
        return {impl_->p};
    }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.impl_ == b.impl_ ||
               (a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e && a.impl_->modulus == b.impl_->modulus);
    }

   private:
    struct Impl {
        std::uint32_t p = 2;
        unsigned e = 1;
        std::uint64_t q = 2;
        detail::DensePoly modulus;
        std::vector<std::uint32_t> log;  // code -> discrete log (index 0 unused)
        std::vector<std::uint32_t> exp;  // discrete log -> code
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    static bool irreducible(const detail::DensePoly& m, std::uint32_t p) {
        const std::size_t e = m.size() - 1;
        for (std::size_t d = 1; d <= e / 2; ++d) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                if (detail::poly_mod(m, detail::monic_from_index(idx, d, p), p).empty()) return false;
            }
        }
        return true;
    }

    FieldElement encode(const detail::DensePoly& a) const {
        std::uint32_t r = 0, mul = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            r += a[i] * mul;
            mul *= impl_->p;
        }
        return {r};
    }

    detail::DensePoly decode(FieldElement a) const {
        auto c = coefficients(a);
        return detail::DensePoly(c.begin(), c.end());
    }

    FieldElement slow_mul(FieldElement a, FieldElement b) const {
        const auto& m = *impl_;
        auto x = decode(a), y = decode(b);
        detail::DensePoly prod(x.size() + y.size(), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % m.p);
        return encode(detail::poly_mod(prod, m.modulus, m.p));
    }

    static void build_tables(Impl& m) {
        // find a primitive element by brute force over the slow product
        Field probe(std::make_shared<Impl>(m));
        const std::uint32_t q1 = static_cast<std::uint32_t>(m.q - 1);
        for (std::uint32_t g = 2; g < m.q; ++g) {
            std::vector<std::uint32_t> exp(q1);
            std::vector<std::uint32_t> log(m.q, 0);
            FieldElement x{1};
            bool primitive = true;
            for (std::uint32_t k = 0; k < q1; ++k) {
                if (k > 0 && x.code == 1) {
                    primitive = false;
                    break;
                }
                exp[k] = x.code;
                log[x.code] = k;
                x = probe.slow_mul(x, {g});
            }
            if (primitive && x.code == 1) {
                m.exp = std::move(exp);
                m.log = std::move(log);
                return;
            }
        }
    }

    std::shared_ptr<const Impl> impl_;
};

}  // namespace sepinv

#endif
