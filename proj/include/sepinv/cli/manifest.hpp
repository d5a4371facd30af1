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

#ifndef SEPINV_CLI_MANIFEST_HPP
#define SEPINV_CLI_MANIFEST_HPP

#include <json.hpp>

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "../parser.hpp"
#include "../separating.hpp"

namespace sepinv::cli {

using json = nlohmann::json;

inline constexpr int kManifestSchemaVersion = 1;

struct GeneratorEntry {
    std::vector<std::vector<long long>> matrix;
    std::vector<long long> translation;
};

struct NamedText {
    std::string name;
    std::string text;
};

struct CandidateEntry {
    std::string name;
    std::string provenance;
    std::vector<NamedText> members;  // text is an expression in x1..xn and invariant names
};

struct IdealEntry {
    std::string name;
    std::vector<std::string> generators;  // in x1..xn, y1..yn
};

/// The declarative input of every subcommand.
struct Manifest {
    std::string name;
    std::string description;
    std::uint32_t p = 2;
    unsigned e = 1;
    std::optional<std::vector<std::uint32_t>> modulus;
    std::size_t n = 0;
    std::vector<GeneratorEntry> group;
    std::vector<std::vector<std::string>> components;  // empty: X = K^n
    std::optional<bool> cohen_macaulay;
    std::vector<NamedText> invariants;
    std::vector<CandidateEntry> candidates;
    std::vector<IdealEntry> ideals;
};

namespace detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
    fail(ErrorCode::ManifestError, where + ": " + what);
}

inline const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing \"") + key + "\"");
    return j.at(key);
}

template <class T>
T as(const json& j, const std::string& where) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        bad(where, "unexpected value " + j.dump());
    }
}

inline NamedText named_text(const json& j, const std::string& where, const char* text_key) {
    return {as<std::string>(need(j, "name", where), where + ".name"),
            as<std::string>(need(j, text_key, where), where + "." + text_key)};
}

inline void check_name(const std::string& name, const std::string& where) {
    if (name.empty()) bad(where, "empty name");
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        bad(where, "name \"" + name + "\" must start with a letter");
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            bad(where, "name \"" + name + "\" may only contain letters, digits and '_'");
}

}  // namespace detail

/// Structural parse of a manifest document; polynomial texts are checked by
/// `instantiate`.
inline Manifest parse_manifest(const json& j) {
    using detail::as;
    using detail::bad;
    using detail::need;
    if (!j.is_object()) bad("manifest", "top level must be an object");
    Manifest m;
    int version = as<int>(need(j, "schema_version", "manifest"), "schema_version");
    if (version != kManifestSchemaVersion)
        bad("schema_version", "unsupported version " + std::to_string(version));
    m.name = as<std::string>(need(j, "name", "manifest"), "name");
    if (j.contains("description")) m.description = as<std::string>(j["description"], "description");

    const json& f = need(j, "field", "manifest");
    long long p = as<long long>(need(f, "p", "field"), "field.p");
    if (p < 2 || p > (1ll << 31)) bad("field.p", "out of range");
    m.p = static_cast<std::uint32_t>(p);
    if (f.contains("e")) {
        long long e = as<long long>(f["e"], "field.e");
        if (e < 1 || e > 31) bad("field.e", "out of range");
        m.e = static_cast<unsigned>(e);
    }
    if (f.contains("modulus")) m.modulus = as<std::vector<std::uint32_t>>(f["modulus"], "field.modulus");

    long long n = as<long long>(need(j, "n", "manifest"), "n");
    if (n < 1 || n > 64) bad("n", "ambient dimension must be in 1..64");
    m.n = static_cast<std::size_t>(n);

    const json& g = need(j, "group", "manifest");
    if (!g.is_array()) bad("group", "must be a list of generators");
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::string where = "group[" + std::to_string(i) + "]";
        GeneratorEntry s;
        s.matrix = as<std::vector<std::vector<long long>>>(need(g[i], "matrix", where), where + ".matrix");
        if (s.matrix.size() != m.n) bad(where, "matrix must have n rows");
        for (const auto& row : s.matrix)
            if (row.size() != m.n) bad(where, "matrix must have n columns");
        if (g[i].contains("translation")) {
            s.translation = as<std::vector<long long>>(g[i]["translation"], where + ".translation");
            if (s.translation.size() != m.n) bad(where, "translation must have n entries");
        }
        m.group.push_back(std::move(s));
    }

    if (j.contains("variety")) {
        const json& v = j["variety"];
        if (v.contains("components"))
            m.components = as<std::vector<std::vector<std::string>>>(v["components"], "variety.components");
        if (v.contains("cohen_macaulay") && !v["cohen_macaulay"].is_null())
            m.cohen_macaulay = as<bool>(v["cohen_macaulay"], "variety.cohen_macaulay");
    }

    std::set<std::string> names;
    for (std::size_t i = 0; i < m.n; ++i) {
        names.insert("x" + std::to_string(i + 1));
        names.insert("y" + std::to_string(i + 1));
    }
    names.insert("a");
    if (j.contains("invariants")) {
        const json& inv = j["invariants"];
        if (!inv.is_array()) bad("invariants", "must be a list");
        for (std::size_t i = 0; i < inv.size(); ++i) {
            std::string where = "invariants[" + std::to_string(i) + "]";
            NamedText t = detail::named_text(inv[i], where, "poly");
            detail::check_name(t.name, where);
            if (!names.insert(t.name).second) bad(where, "name \"" + t.name + "\" is reserved or already used");
            m.invariants.push_back(std::move(t));
        }
    }

    std::set<std::string> set_names{"I", "sqrt(I)", "X"};
    if (j.contains("candidates")) {
        const json& cs = j["candidates"];
        if (!cs.is_array()) bad("candidates", "must be a list");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            std::string where = "candidates[" + std::to_string(i) + "]";
            CandidateEntry c;
            c.name = as<std::string>(need(cs[i], "name", where), where + ".name");
            detail::check_name(c.name, where);
            if (!set_names.insert(c.name).second) bad(where, "duplicate set name \"" + c.name + "\"");
            if (cs[i].contains("provenance")) c.provenance = as<std::string>(cs[i]["provenance"], where + ".provenance");
            const json& ms = need(cs[i], "members", where);
            if (!ms.is_array() || ms.empty()) bad(where, "members must be a non-empty list");
            for (std::size_t k = 0; k < ms.size(); ++k) {
                std::string w = where + ".members[" + std::to_string(k) + "]";
                if (ms[k].is_string()) {
                    std::string s = ms[k].get<std::string>();
                    c.members.push_back({s, s});
                } else {
                    c.members.push_back(detail::named_text(ms[k], w, "poly"));
                }
            }
            m.candidates.push_back(std::move(c));
        }
    }

    if (j.contains("ideals")) {
        const json& is = j["ideals"];
        if (!is.is_array()) bad("ideals", "must be a list");
        for (std::size_t i = 0; i < is.size(); ++i) {
            std::string where = "ideals[" + std::to_string(i) + "]";
            IdealEntry s;
            s.name = as<std::string>(need(is[i], "name", where), where + ".name");
            detail::check_name(s.name, where);
            if (!set_names.insert(s.name).second) bad(where, "duplicate ideal name \"" + s.name + "\"");
            s.generators = as<std::vector<std::string>>(need(is[i], "generators", where), where + ".generators");
            m.ideals.push_back(std::move(s));
        }
    }
    return m;
}

inline Manifest parse_manifest_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ManifestError, std::string("manifest is not valid JSON: ") + e.what());
    }
    return parse_manifest(j);
}

/// Every polynomial of the manifest, parsed in its ring; no algebra yet.
struct ParsedManifest {
    Manifest manifest;
    Field field = Field::prime(2);
    Ring base, doubled;
    std::vector<AffineMap> generators;
    std::vector<Ideal> components;
    std::vector<NamedPolynomial> invariants;
    std::vector<SeparatingCandidate> candidates;
    std::vector<NamedIdeal> ideals;
};

namespace detail {

inline Polynomial parse_at(const std::string& text, const Ring& ring, const std::string& where) {
    try {
        return parse(text, ring);
    } catch (const Error& e) {
        fail(e.code(), where + ": " + e.what());
    }
}

}  // namespace detail

inline ParsedManifest parse_polynomials(Manifest manifest) {
    ParsedManifest pm;
    pm.field = Field::make(manifest.p, manifest.e, manifest.modulus);
    pm.base = PolynomialRing::standard(pm.field, manifest.n);
    pm.doubled = doubled_ring(pm.base);
    for (std::size_t i = 0; i < manifest.group.size(); ++i) {
        try {
            pm.generators.push_back(AffineMap::from_integers(pm.field, manifest.group[i].matrix, manifest.group[i].translation));
        } catch (const Error& e) {
            fail(e.code(), "group[" + std::to_string(i) + "]: " + e.what());
        }
    }
    for (std::size_t i = 0; i < manifest.components.size(); ++i) {
        std::vector<Polynomial> gens;
        for (const auto& t : manifest.components[i])
            gens.push_back(detail::parse_at(t, pm.base, "variety.components[" + std::to_string(i) + "]"));
        pm.components.emplace_back(pm.base, std::move(gens));
    }
    for (const auto& inv : manifest.invariants)
        pm.invariants.push_back({inv.name, detail::parse_at(inv.text, pm.base, "invariant " + inv.name)});

    // candidate members may use invariant names as variables
    std::vector<std::string> names = pm.base->names();
    for (const auto& inv : pm.invariants) names.push_back(inv.name);
    Ring ext = PolynomialRing::make(pm.field, names);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < manifest.n; ++i) images.push_back(Polynomial::variable(pm.base, i));
    for (const auto& inv : pm.invariants) images.push_back(inv.poly);
    for (const auto& c : manifest.candidates) {
        SeparatingCandidate s{c.name, {}, c.provenance};
        for (const auto& mem : c.members)
            s.members.push_back(
                {mem.name, detail::parse_at(mem.text, ext, "candidate " + c.name + " member " + mem.name).substitute(images)});
        pm.candidates.push_back(std::move(s));
    }
    for (const auto& id : manifest.ideals) {
        std::vector<Polynomial> gens;
        for (const auto& t : id.generators) gens.push_back(detail::parse_at(t, pm.doubled, "ideal " + id.name));
        pm.ideals.push_back({id.name, Ideal(pm.doubled, std::move(gens))});
    }
    pm.manifest = std::move(manifest);
    return pm;
}

/// The manifest with its group enumerated and its separating-variety model built.
struct Instance {
    ParsedManifest parsed;
    std::shared_ptr<const SepVarietyModel> model;

    const FiniteGroup& group() const { return model->group(); }
    const VarietyPresentation& variety() const { return model->variety(); }

    const SeparatingCandidate& candidate(const std::string& name) const {
        for (const auto& c : parsed.candidates)
            if (c.name == name) return c;
        fail(ErrorCode::InvalidArgument, "no candidate set named \"" + name + "\"");
    }
};

inline Instance instantiate(ParsedManifest pm) {
    FiniteGroup G = enumerate_group(pm.field, pm.manifest.n, pm.generators);
    VarietyPresentation X = pm.components.empty() ? VarietyPresentation::affine_space(pm.base)
                                                  : VarietyPresentation(pm.base, pm.components);
    Instance inst{std::move(pm), nullptr};
    inst.model = std::make_shared<SepVarietyModel>(std::move(G), std::move(X), inst.parsed.invariants);
    return inst;
}

inline Instance load_instance(const std::string& text) { return instantiate(parse_polynomials(parse_manifest_text(text))); }

/// Manifest of the additive action of F_p on the line by translations.
inline json additive_manifest(std::uint32_t p) {
    if (!sepinv::detail::is_prime(p)) fail(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    json j;
    j["schema_version"] = kManifestSchemaVersion;
    j["name"] = "additive-" + std::to_string(p);
    j["description"] = "F_" + std::to_string(p) + " acting on the affine line by translation";
    j["field"] = {{"p", p}};
    j["n"] = 1;
    j["group"] = json::array({{{"matrix", {{1}}}, {"translation", {1}}}});
    j["invariants"] = json::array({{{"name", "f"}, {"poly", "x1^" + std::to_string(p) + " - x1"}}});
    j["candidates"] = json::array({{{"name", "S"}, {"provenance", "generator of the invariant ring"}, {"members", {"f"}}}});
    return j;
}

}  // namespace sepinv::cli

#endif
