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

#ifndef SEPINV_CLI_APP_HPP
#define SEPINV_CLI_APP_HPP

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reproduce.hpp"
#include "sepinv/bundled_data.hpp"

namespace sepinv::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kResourceCap = 3, kInternalError = 4 };

inline int exit_code_for(ErrorCode c) {
    if (is_resource_error(c)) return kResourceCap;
    if (is_internal_error(c)) return kInternalError;
    return kInputError;
}

inline std::string status_for(int code) {
    switch (code) {
        case kOk: return "ok";
        case kNegative: return "negative";
        case kInputError: return "input_error";
        case kResourceCap: return "resource_cap";
        default: return "internal_error";
    }
}

/// Text of a bundled data file ("manifests/id10253.json", ...).
inline std::string bundled_text(const std::string& name) {
    for (const auto& e : bundled::kFiles)
        if (e.name == name) return std::string(e.text);
    fail(ErrorCode::InvalidArgument, "no bundled file " + name);
}

inline std::vector<std::string> bundled_examples() {
    std::vector<std::string> out;
    const std::string pre = "manifests/", suf = ".json";
    for (const auto& e : bundled::kFiles) {
        std::string n(e.name);
        if (n.rfind(pre, 0) == 0 && n.size() > pre.size() + suf.size())
            out.push_back(n.substr(pre.size(), n.size() - pre.size() - suf.size()));
    }
    return out;
}

/// "8", "2^3" -> F_8 with the standard modulus.
inline Field parse_point_field(const std::string& text) {
    auto number = [&](const std::string& s) -> unsigned long long {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::InvalidArgument, "--points expects p^e or a prime power, got \"" + text + "\"");
        if (s.size() > 10) fail(ErrorCode::InvalidArgument, "--points value too large");
        return std::stoull(s);
    };
    auto caret = text.find('^');
    unsigned long long p = 0, e = 1;
    if (caret != std::string::npos) {
        p = number(text.substr(0, caret));
        e = number(text.substr(caret + 1));
    } else {
        unsigned long long q = number(text);
        for (unsigned long long d = 2; d <= q; ++d) {
            if (q % d != 0) continue;
            p = d;
            e = 0;
            while (q % d == 0) {
                q /= d;
                ++e;
            }
            if (q != 1) fail(ErrorCode::InvalidArgument, text + " is not a prime power");
            break;
        }
    }
    if (p < 2 || e < 1 || e > 31 || p > (1ull << 31)) fail(ErrorCode::InvalidArgument, "bad field size " + text);
    return Field::standard(static_cast<std::uint32_t>(p), static_cast<unsigned>(e));
}

struct Outcome {
    json result = json::object();
    int exit_code = kOk;
    std::string human;
};

/// Parses the command line, runs one subcommand and writes the report.
class Application {
   public:
    Application(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"sepinv: separating varieties, k-reflections and Cohen-Macaulay defects"};
        app.set_version_flag("--version", "sepinv 0.1.0");
        app.add_flag("--json", json_, "print the machine-readable report instead of text");
        app.add_option("--report", report_path_, "also write the JSON report to this file");
        app.add_flag("--timing", timing_, "include wall-clock timings in the report");
        app.require_subcommand(1);

        auto manifest_opts = [&](CLI::App* c) {
            auto* m = c->add_option("--manifest", manifest_path_, "manifest file (JSON)");
            auto* e = c->add_option("--example", example_, "bundled manifest name");
            m->excludes(e);
        };

        auto* group = app.add_subcommand("group", "group operations");
        group->require_subcommand(1);
        auto* analyze = group->add_subcommand("analyze", "order, k-reflection table and min_reflection_number");
        manifest_opts(analyze);

        auto* sepvar = app.add_subcommand("sepvar", "separating variety");
        sepvar->require_subcommand(1);
        auto* build = sepvar->add_subcommand("build", "graph components, their dimensions and sqrt(I)");
        manifest_opts(build);
        auto* conn = sepvar->add_subcommand("connectivity", "both sides of the codim-k equivalence");
        manifest_opts(conn);
        conn->add_option("--codim", codim_, "k")->required()->check(CLI::NonNegativeNumber);

        auto* cmdef = app.add_subcommand("cmdef", "dim, pd, depth, cmdef and Betti table of an ideal");
        manifest_opts(cmdef);
        cmdef->add_option("--ideal", ideal_, "I, sqrt(I), X, a candidate set name or a manifest ideal")->required();

        auto* verify = app.add_subcommand("verify", "verify a candidate separating set");
        manifest_opts(verify);
        verify->add_option("--set", set_, "candidate set name")->required();
        verify->add_option("--points", points_, "also check points over F_q, q = p^e");

        auto* audit = app.add_subcommand("audit", "hypotheses and conclusions of the reflection corollary");
        manifest_opts(audit);

        auto* repro = app.add_subcommand("reproduce", "run a bundled example and compare with expected values");
        repro->add_option("example", repro_, "id10253 | additive-p | two-planes")
            ->required()
            ->check(CLI::IsMember({"id10253", "additive-p", "two-planes"}));
        repro->add_option("--p", prime_, "prime for additive-p")->check(CLI::PositiveNumber);

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e, out_, err_);
            return code == 0 ? kOk : kInputError;
        }

        std::string command;
        if (analyze->parsed()) command = "group analyze";
        else if (build->parsed()) command = "sepvar build";
        else if (conn->parsed()) command = "sepvar connectivity";
        else if (cmdef->parsed()) command = "cmdef";
        else if (verify->parsed()) command = "verify";
        else if (audit->parsed()) command = "audit";
        else command = "reproduce";
        return execute(command);
    }

   private:
    int execute(const std::string& command) {
        const auto t0 = std::chrono::steady_clock::now();
        json report{{"schema_version", kReportSchemaVersion}, {"tool", "sepinv"}, {"command", command}};
        Outcome o;
        try {
            set_resource_caps(caps_from_environment());
            report["caps"] = to_json(resource_caps());
            if (command == "reproduce") {
                o = reproduce(report);
            } else {
                Instance inst = load(report);
                if (command == "group analyze") o = group_analyze(inst);
                else if (command == "sepvar build") o = sepvar_build(inst);
                else if (command == "sepvar connectivity") o = sepvar_connectivity(inst);
                else if (command == "cmdef") o = cmdef(inst);
                else if (command == "verify") o = verify(inst);
                else o = audit(inst);
                report["assertions"] = assertions(inst);
            }
        } catch (const Error& e) {
            o = Outcome{};
            o.exit_code = exit_code_for(e.code());
            report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
            o.human = std::string("error: ") + e.what() + "\n";
        } catch (const std::bad_alloc&) {
            o = Outcome{};
            o.exit_code = kResourceCap;
            report["error"] = {{"code", "ResourceCapExceeded"}, {"message", "out of memory"}};
            o.human = "error: out of memory\n";
        } catch (const std::exception& e) {
            o = Outcome{};
            o.exit_code = kInternalError;
            report["error"] = {{"code", "InternalInconsistency"}, {"message", e.what()}};
            o.human = std::string("internal error: ") + e.what() + "\n";
        }
        if (!o.result.empty()) report["result"] = std::move(o.result);
        report["exit_code"] = o.exit_code;
        report["status"] = status_for(o.exit_code);
        if (timing_) {
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            report["timing_ms"] = ms;
        }
        const std::string text = report.dump(2) + "\n";
        if (json_) out_ << text;
        else (o.exit_code >= kInputError ? err_ : out_) << o.human;
        if (!report_path_.empty()) {
            std::ofstream f(report_path_, std::ios::binary);
            if (!f) {
                err_ << "cannot write report to " << report_path_ << "\n";
                return kInputError;
            }
            f << text;
        }
        return o.exit_code;
    }

    Instance load(json& report) {
        std::string text;
        if (!manifest_path_.empty()) {
            std::ifstream f(manifest_path_, std::ios::binary);
            if (!f) fail(ErrorCode::ManifestError, "cannot read manifest " + manifest_path_);
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
            report["manifest"] = {{"source", manifest_path_}};
        } else if (!example_.empty()) {
            text = bundled_text("manifests/" + example_ + ".json");
            report["manifest"] = {{"source", "bundled:" + example_}};
        } else {
            fail(ErrorCode::InvalidArgument, "give --manifest PATH or --example NAME");
        }
        Instance inst = load_instance(text);
        report["manifest"]["name"] = inst.parsed.manifest.name;
        return inst;
    }

    static json assertions(const Instance& inst) {
        json a = json::array();
        if (!inst.parsed.components.empty()) a.push_back("component ideals of X are asserted prime (not verified)");
        if (inst.parsed.manifest.cohen_macaulay) a.push_back("X Cohen-Macaulay asserted by the manifest");
        a.push_back("the invariant list is asserted to generate K[X]^G");
        a.push_back("I is generated by f(x) - f(y) for the listed generators, plus I(X) in x and in y");
        a.push_back("graph components H_(sigma,i) are deduplicated; merged elements are listed per component");
        a.push_back("finite-field point checks are necessary evidence only");
        return a;
    }

    Outcome group_analyze(const Instance& inst) const {
        Outcome o;
        const auto& G = inst.group();
        const auto& X = inst.variety();
        const auto& codims = inst.model->element_codims();
        json elems = json::array();
        for (std::size_t i = 0; i < G.order(); ++i) {
            json e = to_json(G.element(i));
            e["index"] = i;
            e["fixed_locus_codim"] = to_json(codims[i]);
            elems.push_back(std::move(e));
        }
        json gens = json::array();
        for (const auto& s : G.generators()) gens.push_back(to_json(fixed_locus_codim(s, X)));
        json table = json::array();
        std::ostringstream h;
        h << std::boolalpha;
        h << "group order " << G.order() << ", dim X = " << X.dimension() << "\n";
        for (std::size_t k = 0; k <= X.dimension(); ++k) {
            auto ref = k_reflections(codims, k);
            bool gen = generated_by(G, ref);
            table.push_back({{"k", k}, {"count", ref.size()}, {"generates", gen}});
            h << "  " << k << "-reflections: " << ref.size() << (gen ? " (generate G)" : "") << "\n";
        }
        bool fp = generated_by_fixed_point_elements(G, X, codims);
        json mrn = nullptr;
        if (fp) mrn = min_reflection_number(G, X, codims);
        h << "min_reflection_number: " << (fp ? mrn.dump() : "none (not generated by elements with a fixed point)")
          << "\n";
        o.result = {{"order", G.order()},
                    {"dim_x", X.dimension()},
                    {"generator_codims", gens},
                    {"elements", elems},
                    {"k_reflections", table},
                    {"fixed_point_generated", fp},
                    {"min_reflection_number", mrn}};
        o.human = h.str();
        return o;
    }

    Outcome sepvar_build(const Instance& inst) const {
        Outcome o;
        const auto& m = *inst.model;
        json comps = json::array();
        std::ostringstream h;
        h << std::boolalpha;
        h << m.components().size() << " graph components in " << m.ring()->nvars() << " variables\n";
        for (std::size_t c = 0; c < m.components().size(); ++c) {
            const auto& g = m.components()[c];
            comps.push_back({{"index", c},
                             {"element", g.element},
                             {"x_component", g.component},
                             {"merged_elements", g.merged},
                             {"dimension", g.dimension},
                             {"generators", polys_json(g.ideal.groebner_basis())}});
            h << "  H[" << c << "] element " << g.element << " on X_" << g.component << ": dim " << g.dimension << "\n";
        }
        Reproduction r;
        detail::remark_checks(m, r);
        o.result = {{"components", comps},
                    {"ideal_generators", polys_json(m.ideal().generators())},
                    {"radical", r.details["radical"]},
                    {"radical_contains_I", true},
                    {"I_radical", m.ideal().contains(m.radical())},
                    {"remarks", r.actual}};
        h << "dim sqrt(I) = " << r.details["radical"]["dimension"].get<std::size_t>() << " (dim X = "
          << m.variety().dimension() << ")\n";
        o.human = h.str();
        return o;
    }

    Outcome sepvar_connectivity(const Instance& inst) const {
        Outcome o;
        auto r = theorem_equivalence_check(*inst.model, codim_);
        o.result = to_json(r);
        o.result["pairwise_codims"] = detail::codims_json(*inst.model);
        std::ostringstream h;
        h << std::boolalpha;
        h << "k = " << codim_ << ": V_sep connected " << r.vsep_connected << "; X connected " << r.x_connected
          << ", G generated by k-reflections " << r.generated_by_k_reflections << "; sides agree\n";
        o.human = h.str();
        return o;
    }

    Ideal named_ideal(const Instance& inst, const std::string& name) const {
        const auto& m = *inst.model;
        if (name == "I") return m.ideal();
        if (name == "sqrt(I)") return m.radical();
        if (name == "X") return m.variety().vanishing_ideal();
        for (const auto& c : inst.parsed.candidates)
            if (c.name == name) return candidate_ideal(c, m);
        for (const auto& i : inst.parsed.ideals)
            if (i.name == name) return i.ideal;
        fail(ErrorCode::InvalidArgument, "no ideal named \"" + name + "\"");
    }

    Outcome cmdef(const Instance& inst) const {
        Outcome o;
        Ideal I = named_ideal(inst, ideal_);
        auto d = cohen_macaulay_report(I);
        o.result = to_json(d);
        o.result["ideal"] = ideal_;
        o.result["variables"] = I.ring()->nvars();
        std::ostringstream h;
        h << std::boolalpha;
        h << ideal_ << ": dim " << d.dimension << ", pd " << d.projective_dimension << ", depth " << d.depth
          << ", cmdef " << d.cmdef << "\n"
          << d.betti.render();
        o.human = h.str();
        return o;
    }

    Outcome verify(const Instance& inst) const {
        Outcome o;
        const auto& S = inst.candidate(set_);
        bool sym = verify_separating_symbolic(S, *inst.model);
        o.result = {{"set", S.name}, {"size", S.members.size()}, {"provenance", S.provenance}, {"symbolic", sym}};
        std::ostringstream h;
        h << std::boolalpha;
        h << S.name << " (" << S.members.size() << " invariants): symbolic " << (sym ? "separating" : "NOT separating")
          << "\n";
        bool ok = sym;
        if (!points_.empty()) {
            Field F = parse_point_field(points_);
            auto pc = check_separating_points(S, *inst.model, F);
            o.result["points"] = to_json(pc, F);
            ok = ok && pc.separating;
            h << "  points over " << F.describe() << ": " << (pc.separating ? "separating" : "NOT separating") << " ("
              << pc.points << " points, " << pc.orbits << " orbits)\n";
        }
        o.result["separating"] = ok;
        o.exit_code = ok ? kOk : kNegative;
        o.human = h.str();
        return o;
    }

    Outcome audit(const Instance& inst) const {
        Outcome o;
        auto a = corollary_audit(*inst.model, {inst.parsed.candidates, inst.parsed.ideals, inst.parsed.manifest.cohen_macaulay, true});
        o.result = to_json(a);
        std::ostringstream h;
        h << std::boolalpha;
        h << "X connected " << a.x_connected << ", Cohen-Macaulay "
          << (a.x_cohen_macaulay ? (*a.x_cohen_macaulay ? "true" : "false") : "unknown") << " (" << to_string(a.cm_status)
          << "), G generated by fixed-point elements " << a.fixed_point_generated << "\n";
        for (const auto& d : a.ideals)
            h << "  cmdef(R/" << d.name << ") = " << (d.defect ? std::to_string(d.defect->cmdef) : "-")
              << (d.note.empty() ? "" : "  [" + d.note + "]") << "\n";
        if (a.conclusion_drawn()) h << "conclusion: G is generated by reflections (confirmed)\n";
        for (const auto& s : a.refusals) h << "no conclusion: " << s << "\n";
        o.exit_code = a.conclusion_drawn() ? kOk : kNegative;
        o.human = h.str();
        return o;
    }

    Outcome reproduce(json& report) const {
        Outcome o;
        std::optional<std::uint32_t> p;
        std::string manifest_text;
        if (repro_ == "additive-p") {
            p = static_cast<std::uint32_t>(prime_);
            manifest_text = additive_manifest(*p).dump();
        } else {
            manifest_text = bundled_text("manifests/" + repro_ + ".json");
        }
        Instance inst = load_instance(manifest_text);
        report["manifest"] = {{"source", "bundled:" + repro_}, {"name", inst.parsed.manifest.name}};
        Reproduction r = repro_ == "id10253"      ? reproduce_id10253(inst)
                         : repro_ == "two-planes" ? reproduce_two_planes(inst)
                                                  : reproduce_additive(inst);
        json fixture = json::parse(bundled_text("expected/" + repro_ + ".json"));
        bool all = false;
        json rows = compare_with_fixture(fixture, r.actual, p, all);
        std::ostringstream h;
        h << std::boolalpha;
        h << "reproduce " << inst.parsed.manifest.name << "\n";
        for (const auto& row : rows)
            h << "  " << (row["match"].get<bool>() ? "ok       " : "MISMATCH ") << row["quantity"].get<std::string>()
              << " = " << row["actual"].dump() << " (expected " << row["expected"].dump() << ", "
              << row["source"].get<std::string>() << ")\n";
        if (r.details.contains("relation_with_f3_f4_exchanged"))
            h << "  note: relation with f3 and f4 exchanged holds: " << r.details["relation_with_f3_f4_exchanged"].dump()
              << "\n";
        o.result = {{"example", repro_}, {"comparisons", rows}, {"all_match", all}, {"details", r.details}};
        if (p) o.result["p"] = *p;
        o.exit_code = all ? kOk : kNegative;
        report["assertions"] = assertions(inst);
        o.human = h.str();
        return o;
    }

    std::ostream& out_;
    std::ostream& err_;
    bool json_ = false;
    bool timing_ = false;
    std::string report_path_;
    std::string manifest_path_;
    std::string example_;
    std::size_t codim_ = 0;
    std::string ideal_;
    std::string set_;
    std::string points_;
    std::string repro_;
    long long prime_ = 5;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return Application(out, err).run(argc, argv);
}

}  // namespace sepinv::cli

#endif
