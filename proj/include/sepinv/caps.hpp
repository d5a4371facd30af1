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

#ifndef SEPINV_CAPS_HPP
#define SEPINV_CAPS_HPP

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <type_traits>

#include "error.hpp"

namespace sepinv {

/// Hard limits on the desk-scale algorithms. Exceeding any of them raises a
/// resource error instead of silently truncating.
struct ResourceCaps {
    std::uint64_t max_pairs = 500000;        // S-pairs processed per Groebner run
    unsigned max_degree = 512;               // sugar degree of any intermediate polynomial
    std::uint64_t max_group_order = 4096;    // elements produced by group enumeration
    std::uint64_t max_enumeration = 1u << 16;  // field elements / points listed
};

namespace detail {
inline ResourceCaps& caps_storage() {
    static ResourceCaps caps;
    return caps;
}
}  // namespace detail

inline const ResourceCaps& resource_caps() { return detail::caps_storage(); }

/// Not thread-safe; call once at startup.
inline void set_resource_caps(const ResourceCaps& caps) { detail::caps_storage() = caps; }

/// Reads SEPINV_PAIR_CAP, SEPINV_DEGREE_CAP, SEPINV_GROUP_CAP and
/// SEPINV_ENUM_CAP, keeping defaults for unset variables.
inline ResourceCaps caps_from_environment(ResourceCaps base = {}) {
    auto read = [](const char* name, auto& slot) {
        if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
            std::size_t used = 0;
            unsigned long long x = 0;
            try {
                x = std::stoull(v, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || v[used] != '\0' || *v < '0' || *v > '9')
                fail(ErrorCode::InvalidArgument, std::string(name) + " must be a non-negative integer");
            slot = static_cast<std::remove_reference_t<decltype(slot)>>(x);
        }
    };
    read("SEPINV_PAIR_CAP", base.max_pairs);
    read("SEPINV_DEGREE_CAP", base.max_degree);
    read("SEPINV_GROUP_CAP", base.max_group_order);
    read("SEPINV_ENUM_CAP", base.max_enumeration);
    return base;
}

}  // namespace sepinv

#endif
