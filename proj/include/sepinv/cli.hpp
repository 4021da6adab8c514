#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepinv.hpp"

namespace sepinv::cli {

enum ExitCode : int { ok = 0, negative = 1, inconclusive = 2, bad_input = 3, resource_cap = 4 };

struct RunConfig {
    std::string subcommand;
    std::string scene_path;
    std::string ideal_path;                 // gb
    std::string method = "groebner";        // check-separating
    std::vector<unsigned> powers{1, 2};     // points method
    std::vector<std::string> candidates;    // overrides the scene's candidates
    std::optional<unsigned> max_degree;     // invariants
    std::size_t terms = 10;                 // molien
    std::string order = "grevlex";          // gb
    std::optional<unsigned> k;              // crosscheck / vsep-graph
    std::vector<std::string> assume;        // extra hypothesis flags
    std::optional<std::size_t> max_basis, max_pairs;
    std::optional<std::uint64_t> monomial_budget;
    std::uint64_t point_cap = kDefaultPointCap;
    std::string output;                     // report (or DOT) destination
};

namespace detail {

struct Report {
    std::ostringstream body;
    template <class T>
    void kv(const std::string& key, const T& value) {
        body << key << ": " << value << "\n";
    }
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

inline Json scene_json(const RunConfig& cfg) {
    if (cfg.scene_path.empty()) throw InputError("--scene is required");
    Json j = read_json_file(cfg.scene_path);
    if (!cfg.assume.empty()) {
        Json flags = j.value("flags", Json::array());
        for (const auto& f : cfg.assume) flags.push_back(f);
        j["flags"] = flags;
    }
    if (!cfg.candidates.empty()) j["candidates"] = cfg.candidates;
    if (cfg.max_basis || cfg.max_pairs || cfg.monomial_budget) {
        Json caps = j.value("caps", Json::object());
        if (cfg.max_basis) caps["max_basis"] = *cfg.max_basis;
        if (cfg.max_pairs) caps["max_pairs"] = *cfg.max_pairs;
        if (cfg.monomial_budget) caps["monomial_budget"] = *cfg.monomial_budget;
        j["caps"] = caps;
    }
    return j;
}

template <CoefficientField F>
void scene_header(Report& r, const Scene<F>& s) {
    r.kv("field", s.field().spec().to_string());
    r.kv("ambient_dim", s.ambient());
    r.kv("dim_X", s.dimension());
    r.kv("group_order", s.group().order());
}

template <CoefficientField F>
int reflections(const Scene<F>& s, Report& r) {
    scene_header(r, s);
    const auto codims = classify_reflections(s);
    for (std::size_t i = 0; i < codims.size(); ++i)
        r.kv("element " + std::to_string(i), s.group().element(i).to_string() + " codim " + to_string(codims[i]));
    const auto k = min_reflection_k(s.group(), codims, s.dimension());
    r.kv("min_reflection_k", k ? std::to_string(*k) : "none");
    return ok;
}

template <CoefficientField F>
int vsep_graph(const Scene<F>& s, const RunConfig& cfg, Report& r, std::string& dot) {
    const auto g = build_component_graph(s);
    dot = to_dot(g);
    scene_header(r, s);
    r.kv("nodes", g.nodes.size());
    std::size_t finite = 0;
    for (const auto& e : g.edges) finite += e.weight.has_value();
    r.kv("nonempty_edges", finite);
    if (cfg.k) {
        r.kv("k", *cfg.k);
        r.kv("connected_in_codim", connected_in_codim(g, *cfg.k) ? "true" : "false");
    } else {
        for (unsigned k = 0; k <= s.dimension(); ++k)
            r.kv("connected_in_codim " + std::to_string(k), connected_in_codim(g, k) ? "true" : "false");
    }
    return ok;
}

template <CoefficientField F>
int check_separating(const Scene<F>& s, const RunConfig& cfg, Report& r) {
    scene_header(r, s);
    if (s.candidates().empty()) throw InputError("no candidates: list them in the scene or pass --candidate");
    std::vector<std::string> names;
    for (const auto& f : s.candidates()) names.push_back(s.format(f));
    r.kv("candidates", join(names, "; "));
    r.kv("method", cfg.method);
    if (cfg.method == "groebner") {
        const auto res = verify_separating_groebner(s, s.candidates());
        r.kv("verdict", to_string(res.verdict));
        if (!res.note.empty()) r.kv("note", res.note);
        if (res.verdict == SeparatingVerdict::inconclusive) {
            r.kv("suggestion", "rerun with --method points");
            return inconclusive;
        }
        return res.verdict == SeparatingVerdict::separating ? ok : negative;
    }
    if (cfg.method != "points") throw InputError("unknown method '" + cfg.method + "'");
    if constexpr (std::is_same_v<F, FiniteField>) {
        std::vector<std::string> pw;
        for (auto m : cfg.powers) pw.push_back(std::to_string(m));
        r.kv("extension_degrees", join(pw));
        const auto res = verify_separating_points(s, s.candidates(), cfg.powers, cfg.point_cap);
        for (const auto& [field, count] : res.points_per_field) r.kv("points " + field, count);
        r.kv("verdict", to_string(res.verdict));
        if (res.verdict == PointsVerdict::refuted) {
            r.kv("witness_field", res.witness_field);
            r.kv("witness_p", "(" + join(res.witness_first) + ")");
            r.kv("witness_q", "(" + join(res.witness_second) + ")");
            r.kv("invariants_differ", res.invariants_differ ? "true" : "false");
            return negative;
        }
        r.kv("note", "evidence only: rational points over the listed extensions");
        return ok;
    } else {
        throw InputError("the points method needs a finite field");
    }
}

template <CoefficientField F>
int gamma_bound(const Scene<F>& s, Report& r) {
    const auto b = gamma_sep_bounds(s);
    scene_header(r, s);
    r.kv("min_reflection_k", b.k_star ? std::to_string(*b.k_star) : "none");
    r.kv("lower", b.lower);
    r.kv("upper", b.upper);
    for (const auto& n : b.notes) r.kv("note", n);
    return ok;
}

template <CoefficientField F>
int invariants(const Scene<F>& s, const RunConfig& cfg, Report& r) {
    scene_header(r, s);
    const unsigned top = cfg.max_degree.value_or(static_cast<unsigned>(s.group().order()));
    r.kv("max_degree", top);
    for (unsigned d = 0; d <= top; ++d) {
        const auto piece = invariant_space(s.group(), d);
        r.kv("degree " + std::to_string(d) + " dimension", piece.basis.size());
        for (const auto& f : piece.basis) r.kv("  basis", s.format(f));
    }
    return ok;
}

template <CoefficientField F>
int molien(const Scene<F>& s, const RunConfig& cfg, Report& r) {
    scene_header(r, s);
    const auto series = molien_series(s.group(), cfg.terms);
    std::vector<std::string> parts;
    for (const auto& c : series) parts.push_back(s.field().to_string(c));
    r.kv("molien", join(parts));
    return ok;
}

template <CoefficientField F>
int crosscheck(const Scene<F>& s, const RunConfig& cfg, Report& r) {
    scene_header(r, s);
    std::vector<unsigned> ks;
    if (cfg.k)
        ks.push_back(*cfg.k);
    else
        for (unsigned k = 0; k <= s.dimension(); ++k) ks.push_back(k);
    bool all = true;
    for (const auto& rep : crosscheck_connectedness(s, ks)) {
        const std::string p = "k=" + std::to_string(rep.k) + " ";
        r.kv(p + "vsep_connected", rep.vsep_connected ? "true" : "false");
        r.kv(p + "x_connected", rep.x_connected ? "true" : "false");
        r.kv(p + "generated_by_k_reflections", rep.generated ? "true" : "false");
        r.kv(p + "agree", rep.agree() ? "true" : "false");
        all = all && rep.agree();
    }
    r.kv("verdict", all ? "agree" : "DISAGREE");
    return all ? ok : negative;
}

template <CoefficientField F>
int dispatch_scene(const F& field, const Json& j, const RunConfig& cfg, Report& r, std::string& dot) {
    const auto s = scene_from_json(j, field);
    const auto& c = cfg.subcommand;
    if (c == "reflections") return reflections(s, r);
    if (c == "vsep-graph") return vsep_graph(s, cfg, r, dot);
    if (c == "check-separating") return check_separating(s, cfg, r);
    if (c == "gamma-bound") return gamma_bound(s, r);
    if (c == "invariants") return invariants(s, cfg, r);
    if (c == "molien") return molien(s, cfg, r);
    if (c == "crosscheck-1-5" || c == "crosscheck") return crosscheck(s, cfg, r);
    throw InputError("unknown subcommand '" + c + "'");
}

// Ideal file: header "ring n=<n> field=<spec>", then one polynomial per line.
template <CoefficientField F>
int groebner_file(const F& field, std::size_t n, const std::vector<std::string>& lines, const RunConfig& cfg,
                  Report& r) {
    std::vector<Polynomial<F>> gens;
    for (const auto& l : lines) gens.push_back(parse_polynomial(field, n, l));
    MonomialOrder order = MonomialOrder::grevlex();
    if (cfg.order == "lex")
        order = MonomialOrder::lex();
    else if (cfg.order != "grevlex")
        throw InputError("unknown order '" + cfg.order + "'");
    GroebnerCaps caps;
    if (cfg.max_basis) caps.max_basis = *cfg.max_basis;
    if (cfg.max_pairs) caps.max_pairs = *cfg.max_pairs;
    if (cfg.monomial_budget) caps.monomial_budget = *cfg.monomial_budget;
    const auto gb = buchberger(Ideal<F>{field, n, gens}, order, caps);
    r.kv("field", field.spec().to_string());
    r.kv("n", n);
    r.kv("order", order.name());
    r.kv("size", gb.size());
    const auto names = default_names(n);
    for (const auto& g : gb.basis()) r.kv("basis", g.to_string(names));
    const auto dim = dimension(gb);
    r.kv("dimension", dim ? std::to_string(*dim) : "empty");
    return ok;
}

inline int gb(const RunConfig& cfg, Report& r) {
    if (cfg.ideal_path.empty()) throw InputError("--ideal is required");
    std::ifstream in(cfg.ideal_path);
    if (!in) throw InputError("cannot open " + cfg.ideal_path);
    std::string header, line;
    while (std::getline(in, header)) {
        if (auto hash = header.find('#'); hash != std::string::npos) header.resize(hash);
        if (header.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream hs(header);
    std::string word, field_text;
    std::optional<std::size_t> n;
    hs >> word;
    if (word != "ring") throw InputError("ideal file must start with 'ring n=<n> field=<field>'");
    while (hs >> word) {
        if (word.rfind("n=", 0) == 0)
            n = std::stoul(word.substr(2));
        else if (word.rfind("field=", 0) == 0)
            field_text = word.substr(6);
        else
            throw InputError("unexpected header item '" + word + "'");
    }
    if (!n || field_text.empty()) throw InputError("ring header needs n= and field=");
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
    const auto spec = FieldSpec::parse(field_text);
    if (spec.kind == FieldSpec::Kind::rationals) return groebner_file(RationalField{}, *n, lines, cfg, r);
    return groebner_file(FiniteField(spec), *n, lines, cfg, r);
}

}  // namespace detail

/// Runs one subcommand. The report goes to `out` (or cfg.output); error
/// messages go to `err`. Returns the process exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    detail::Report r;
    std::string dot;
    int code = ok;
    try {
        if (cfg.subcommand == "gb") {
            code = detail::gb(cfg, r);
        } else {
            const Json j = detail::scene_json(cfg);
            const auto spec = scene_field_spec(j);
            if (spec.kind == FieldSpec::Kind::rationals)
                code = detail::dispatch_scene(RationalField{}, j, cfg, r, dot);
            else
                code = detail::dispatch_scene(FiniteField(spec), j, cfg, r, dot);
        }
    } catch (const ResourceCapError& e) {
        err << "error: resource cap: " << e.what() << "\n";
        return resource_cap;
    } catch (const std::invalid_argument& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return bad_input;
    } catch (const std::out_of_range& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return bad_input;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
    // vsep-graph prints DOT unless an output file takes it.
    if (!dot.empty()) {
        if (cfg.output.empty()) {
            out << dot;
            return code;
        }
        std::ofstream f(cfg.output);
        if (!f) {
            err << "error: cannot write " << cfg.output << "\n";
            return bad_input;
        }
        f << dot;
        out << r.body.str();
        return code;
    }
    if (!cfg.output.empty()) {
        std::ofstream f(cfg.output);
        if (!f) {
            err << "error: cannot write " << cfg.output << "\n";
            return bad_input;
        }
        f << r.body.str();
    } else {
        out << r.body.str();
    }
    return code;
}

}  // namespace sepinv::cli
