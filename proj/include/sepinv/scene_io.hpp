#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "multiplicative.hpp"
#include "parse.hpp"
#include "scene.hpp"

namespace sepinv {

using Json = nlohmann::json;

// Scene file keys:
//   field       "Q", "F7", "F16:x^4+x+1"
//   n           ambient dimension (omitted for torus scenes)
//   variables   optional names, default x1..xn
//   variety     polynomial strings; empty or absent means affine space
//   components  optional list of lists of polynomial strings
//   group       list of {matrix, translation?} objects or bare matrices
//   torus       {n, generators} for lattice actions; replaces n/variety/group
//   invariants  polynomial strings, or {"orbit_sum": [...]} on torus scenes
//   invariant_names, candidates, flags, caps

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline FieldSpec scene_field_spec(const Json& j) {
    if (!j.contains("field") || !j["field"].is_string()) throw InputError("scene needs a \"field\" string");
    return FieldSpec::parse(j["field"].get<std::string>());
}

namespace detail {

inline std::string scalar_text(const Json& v) {
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_string()) return v.get<std::string>();
    throw InputError("matrix entries must be integers or strings, got " + v.dump());
}

template <CoefficientField F>
typename F::value_type parse_entry(const F& field, const Json& v) {
    if (v.is_number_integer()) return field.from_int(v.get<long long>());
    return PolynomialParser<F>(field, {}).parse_scalar(scalar_text(v));
}

template <CoefficientField F>
Matrix<F> parse_matrix(const F& field, const Json& rows, std::size_t n) {
    if (!rows.is_array() || rows.size() != n) throw InputError("group matrix must have " + std::to_string(n) + " rows");
    Matrix<F> m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw InputError("group matrix row must have " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_entry(field, rows[i][j]);
    }
    return m;
}

inline IntMatrix parse_int_matrix(const Json& rows, std::size_t n) {
    if (!rows.is_array() || rows.size() != n) throw InputError("lattice matrix must have " + std::to_string(n) + " rows");
    std::vector<std::vector<long long>> out;
    for (const auto& r : rows) {
        if (!r.is_array() || r.size() != n) throw InputError("lattice matrix rows must have " + std::to_string(n) + " entries");
        std::vector<long long> row;
        for (const auto& v : r) {
            if (!v.is_number_integer()) throw InputError("lattice entries must be integers");
            row.push_back(v.get<long long>());
        }
        out.push_back(std::move(row));
    }
    return IntMatrix::from_rows(out);
}

template <CoefficientField F>
std::vector<Polynomial<F>> parse_list(const PolynomialParser<F>& parser, const Json& j, const char* key) {
    std::vector<Polynomial<F>> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw InputError(std::string("\"") + key + "\" must be a list");
    for (const auto& s : j[key]) {
        if (!s.is_string()) throw InputError(std::string("\"") + key + "\" entries must be strings");
        out.push_back(parser.parse(s.get<std::string>()));
    }
    return out;
}

inline std::vector<std::string> string_list(const Json& j, const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    for (const auto& s : j[key]) {
        if (!s.is_string()) throw InputError(std::string("\"") + key + "\" entries must be strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

inline GroebnerCaps parse_caps(const Json& j) {
    GroebnerCaps caps;
    if (!j.contains("caps")) return caps;
    const auto& c = j["caps"];
    if (c.contains("max_basis")) caps.max_basis = c["max_basis"].get<std::size_t>();
    if (c.contains("max_pairs")) caps.max_pairs = c["max_pairs"].get<std::size_t>();
    if (c.contains("monomial_budget")) caps.monomial_budget = c["monomial_budget"].get<std::uint64_t>();
    if (caps.max_basis == 0 || caps.max_pairs == 0) throw InputError("caps must be positive");
    return caps;
}

template <CoefficientField F>
Scene<F> torus_from_json(const Json& j, const F& field) {
    const auto& t = j["torus"];
    const std::size_t r = t.at("n").get<std::size_t>();
    std::vector<IntMatrix> gens;
    for (const auto& g : t.value("generators", Json::array())) gens.push_back(parse_int_matrix(g, r));
    LatticeAction action(r, std::move(gens));
    PolynomialParser<F> parser(field, torus_names(r));
    std::vector<Polynomial<F>> invariants;
    for (const auto& inv : j.value("invariants", Json::array())) {
        if (inv.is_string()) {
            invariants.push_back(parser.parse(inv.get<std::string>()));
        } else if (inv.is_object() && inv.contains("orbit_sum")) {
            invariants.push_back(orbit_sum(action, field, inv["orbit_sum"].get<std::vector<long long>>()));
        } else {
            throw InputError("torus invariants must be strings or {\"orbit_sum\": [...]}");
        }
    }
    std::set<Hypothesis> flags;
    for (const auto& s : string_list(j, "flags")) flags.insert(parse_hypothesis(s));
    return torus_scene(action, field, std::move(invariants), parse_list(parser, j, "candidates"), std::move(flags),
                       string_list(j, "invariant_names"));
}

}  // namespace detail

template <CoefficientField F>
Scene<F> scene_from_json(const Json& j, const F& field) {
    try {
        if (j.contains("torus")) return detail::torus_from_json(j, field);
        SceneData<F> d;
        d.field = field;
        if (!j.contains("n") || !j["n"].is_number_unsigned()) throw InputError("scene needs a positive integer \"n\"");
        d.ambient = j["n"].get<std::size_t>();
        d.names = detail::string_list(j, "variables");
        if (d.names.empty()) d.names = default_names(d.ambient);
        PolynomialParser<F> parser(field, d.names);
        d.variety = detail::parse_list(parser, j, "variety");
        if (j.contains("components")) {
            std::vector<std::vector<Polynomial<F>>> comps;
            for (const auto& c : j["components"]) {
                std::vector<Polynomial<F>> comp;
                for (const auto& s : c) comp.push_back(parser.parse(s.get<std::string>()));
                comps.push_back(std::move(comp));
            }
            d.components = std::move(comps);
        }
        bool affine = false;
        const Json group = j.value("group", Json::array());
        for (const auto& g : group)
            if (g.is_object() && g.contains("translation")) affine = true;
        std::vector<ActionElement<F>> gens;
        for (const auto& g : group) {
            const Json& mat = g.is_object() ? g.at("matrix") : g;
            auto m = detail::parse_matrix(field, mat, d.ambient);
            std::vector<typename F::value_type> b(d.ambient, field.zero());
            if (g.is_object() && g.contains("translation")) {
                const auto& tv = g["translation"];
                if (!tv.is_array() || tv.size() != d.ambient) throw InputError("translation has the wrong length");
                for (std::size_t i = 0; i < d.ambient; ++i) b[i] = detail::parse_entry(field, tv[i]);
            }
            gens.push_back(affine ? ActionElement<F>::affine(std::move(m), std::move(b))
                                  : ActionElement<F>::linear(std::move(m)));
        }
        auto id = Matrix<F>::identity(field, d.ambient);
        auto identity = affine ? ActionElement<F>::affine(id, std::vector<typename F::value_type>(d.ambient, field.zero()))
                               : ActionElement<F>::linear(id);
        d.group = close_group(identity, std::move(gens));
        d.invariants = detail::parse_list(parser, j, "invariants");
        d.invariant_names = detail::string_list(j, "invariant_names");
        d.candidates = detail::parse_list(parser, j, "candidates");
        for (const auto& s : detail::string_list(j, "flags")) d.flags.insert(parse_hypothesis(s));
        d.caps = detail::parse_caps(j);
        return Scene<F>(std::move(d));
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed scene: ") + e.what());
    }
}

}  // namespace sepinv
