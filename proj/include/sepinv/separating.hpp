#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "reflections.hpp"
#include "scene.hpp"
#include "sepvariety.hpp"

namespace sepinv {

enum class SeparatingVerdict { separating, not_separating, inconclusive };

inline std::string to_string(SeparatingVerdict v) {
    switch (v) {
        case SeparatingVerdict::separating: return "separating";
        case SeparatingVerdict::not_separating: return "not_separating";
        case SeparatingVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct GroebnerCheck {
    SeparatingVerdict verdict = SeparatingVerdict::inconclusive;
    // Index of the first invariant generator outside the radical, if any.
    std::optional<std::size_t> failing_generator;
    std::string note;
};

/// The ideal delta(S) + I_X(x) + I_X(y) in the doubled ring.
template <CoefficientField F>
Ideal<F> doubled_candidate_ideal(const Scene<F>& scene, const std::vector<Polynomial<F>>& candidates) {
    const std::size_t n = scene.ambient();
    Ideal<F> ideal{scene.field(), 2 * n, {}};
    for (const auto& f : candidates) {
        auto d = delta(f);
        if (!d.is_zero()) ideal.generators.push_back(std::move(d));
    }
    for (const auto& f : scene.variety_generators()) {
        ideal.generators.push_back(to_doubled(f, true));
        ideal.generators.push_back(to_doubled(f, false));
    }
    return ideal;
}

/// Decides whether `candidates` separate by testing delta(f) in the radical of
/// delta(S) + I_{X x X} for every generating invariant f. The inclusion of
/// delta(S) in I_sep holds automatically, so one direction suffices.
template <CoefficientField F>
GroebnerCheck verify_separating_groebner(const Scene<F>& scene, const std::vector<Polynomial<F>>& candidates) {
    if (scene.invariants().empty()) throw InputError("scene lists no invariant generators");
    for (const auto& f : candidates) {
        if (f.nvars() != scene.ambient()) throw InputError("candidate lives in a ring of the wrong size");
        if (!scene.is_invariant_on_x(f)) throw NonInvariantError("candidate " + scene.format(f) + " is not invariant");
    }
    GroebnerCheck out;
    try {
        const auto ideal = doubled_candidate_ideal(scene, candidates);
        const auto gb = buchberger(ideal, MonomialOrder::grevlex(), scene.caps());
        for (std::size_t i = 0; i < scene.invariants().size(); ++i) {
            auto d = delta(scene.invariants()[i]);
            if (!radical_member(d, ideal, scene.caps(), &gb)) {
                out.verdict = SeparatingVerdict::not_separating;
                out.failing_generator = i;
                out.note = "delta(" + scene.invariant_names()[i] + ") is not in the radical";
                return out;
            }
        }
        out.verdict = SeparatingVerdict::separating;
    } catch (const ResourceCapError& e) {
        out.verdict = SeparatingVerdict::inconclusive;
        out.note = std::string(e.what()) + "; try the points method";
    }
    return out;
}

enum class PointsVerdict { refuted, no_violation_found };

inline std::string to_string(PointsVerdict v) { return v == PointsVerdict::refuted ? "refuted" : "no_violation_found"; }

struct PointsCheck {
    PointsVerdict verdict = PointsVerdict::no_violation_found;
    // Witness pair as coordinate strings over the extension in which it was found.
    std::vector<std::string> witness_first, witness_second;
    std::string witness_field;
    bool invariants_differ = false;  // the full generator list tells the pair apart
    std::vector<std::pair<std::string, std::size_t>> points_per_field;
};

inline constexpr std::uint64_t kDefaultPointCap = 2'000'000;

namespace detail {

inline Polynomial<FiniteField> embed(const Polynomial<FiniteField>& f, const FiniteField& target) {
    std::vector<Term<FiniteField>> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) terms.push_back({t.mono, t.coef});
    return Polynomial<FiniteField>::from_terms(target, f.nvars(), std::move(terms));
}

inline std::vector<Polynomial<FiniteField>> embed_all(const std::vector<Polynomial<FiniteField>>& fs,
                                                      const FiniteField& target) {
    std::vector<Polynomial<FiniteField>> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(embed(f, target));
    return out;
}

inline FiniteField extension_of(const FiniteField& base, unsigned m) {
    if (m == 1) return base;
    if (base.degree() != 1)
        throw InputError("point enumeration over extensions is only supported for prime base fields");
    return FiniteField(FieldSpec::finite(base.characteristic(), m));
}

}  // namespace detail

/// Enumerates the rational points of X over F_{q^m} for each m in `powers`,
/// buckets them by the values of `candidates`, and reports the
/// lexicographically least pair with equal values lying in distinct orbits.
/// A refutation is sound; the absence of one is only evidence.
inline PointsCheck verify_separating_points(const Scene<FiniteField>& scene,
                                            const std::vector<Polynomial<FiniteField>>& candidates,
                                            const std::vector<unsigned>& powers = {1, 2},
                                            std::uint64_t point_cap = kDefaultPointCap) {
    for (const auto& f : candidates)
        if (!scene.is_invariant_on_x(f)) throw NonInvariantError("candidate " + scene.format(f) + " is not invariant");
    PointsCheck out;
    const std::size_t n = scene.ambient();
    for (unsigned m : powers) {
        if (m == 0) throw InputError("extension degree must be positive");
        const FiniteField ext = detail::extension_of(scene.field(), m);
        const std::uint64_t q = ext.size();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            total *= q;
            if (total > point_cap)
                throw EnumerationCapError("enumerating F_" + std::to_string(q) + "^" + std::to_string(n) +
                                          " exceeds the point cap of " + std::to_string(point_cap));
        }
        const auto variety = detail::embed_all(scene.variety_generators(), ext);
        const auto cands = detail::embed_all(candidates, ext);
        const auto invs = detail::embed_all(scene.invariants(), ext);
        std::vector<std::vector<Polynomial<FiniteField>>> images;
        for (const auto& g : scene.group().elements()) images.push_back(detail::embed_all(g.coordinate_images(), ext));

        using Point = std::vector<std::uint32_t>;
        struct Bucket {
            Point first, first_orbit;
            std::optional<Point> other;
        };
        std::map<Point, Bucket> buckets;
        std::size_t on_x = 0;
        Point p(n, 0), img(n), key(n), sig(cands.size());
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            if (idx) {
                // Odometer with the last coordinate fastest: lexicographic order.
                for (std::size_t i = n; i-- > 0;) {
                    if (++p[i] < q) break;
                    p[i] = 0;
                }
            }
            bool on = true;
            for (const auto& f : variety)
                if (!ext.is_zero(f.evaluate(p))) {
                    on = false;
                    break;
                }
            if (!on) continue;
            ++on_x;
            for (std::size_t c = 0; c < cands.size(); ++c) sig[c] = cands[c].evaluate(p);
            auto [it, fresh] = buckets.try_emplace(sig);
            Bucket& b = it->second;
            if (!fresh && b.other) continue;
            // Orbit key: least coordinate tuple over the orbit.
            bool have = false;
            for (const auto& im : images) {
                for (std::size_t l = 0; l < n; ++l) img[l] = im[l].evaluate(p);
                if (!have || img < key) key = img;
                have = true;
            }
            if (fresh) {
                b.first = p;
                b.first_orbit = key;
            } else if (key != b.first_orbit) {
                b.other = p;
            }
        }
        out.points_per_field.emplace_back(ext.spec().to_string(), on_x);

        std::optional<std::pair<Point, Point>> best;
        for (const auto& [s, b] : buckets)
            if (b.other && (!best || std::make_pair(b.first, *b.other) < *best)) best = std::make_pair(b.first, *b.other);
        if (best) {
            out.verdict = PointsVerdict::refuted;
            out.witness_field = ext.spec().to_string();
            for (std::size_t i = 0; i < n; ++i) {
                out.witness_first.push_back(ext.to_string(best->first[i]));
                out.witness_second.push_back(ext.to_string(best->second[i]));
            }
            for (const auto& f : invs)
                if (f.evaluate(best->first) != f.evaluate(best->second)) out.invariants_differ = true;
            return out;
        }
    }
    return out;
}

struct GammaBounds {
    unsigned lower = 0;
    unsigned upper = 0;
    std::optional<unsigned> k_star;
    std::vector<std::string> notes;
};

/// Bounds on the least size of a separating set. Needs the hypothesis flags
/// {normal, connected} or {connected, cohen_macaulay}, plus a machine check
/// that every generator has a fixed point.
template <CoefficientField F>
GammaBounds gamma_sep_bounds(const Scene<F>& scene) {
    const bool path_nk = scene.has_flag(Hypothesis::normal) && scene.has_flag(Hypothesis::connected);
    const bool path_cm = scene.has_flag(Hypothesis::connected) && scene.has_flag(Hypothesis::cohen_macaulay);
    if (!path_nk && !path_cm) {
        std::string missing;
        for (auto h : {Hypothesis::connected, Hypothesis::normal, Hypothesis::cohen_macaulay})
            if (!scene.has_flag(h)) missing += (missing.empty() ? "" : ", ") + to_string(h);
        throw HypothesisMissingError("missing hypothesis flags: " + missing +
                                     " (need {normal, connected} or {connected, cohen_macaulay})");
    }
    if (!generators_have_fixed_points(scene))
        throw HypothesisMissingError("some group generator has no fixed point on X");

    const unsigned n = scene.dimension();
    GammaBounds out;
    out.upper = 2 * n + 1;
    out.lower = n;
    out.k_star = min_reflection_k(scene);
    out.notes.push_back("upper bound 2n+1 with n = dim X = " + std::to_string(n));
    out.notes.push_back("asserted flags:");
    for (auto h : scene.flags()) out.notes.back() += " " + to_string(h);
    out.notes.push_back("checked: every generator has a fixed point");
    const unsigned k = out.k_star.value_or(n);
    if (path_nk && k >= 1 && n + k - 1 > out.lower) {
        out.lower = n + k - 1;
        out.notes.push_back("normal+connected: size n+j-1 forces generation by j-reflections; least such k is " +
                            std::to_string(k) + ", so lower = n+k-1 = " + std::to_string(out.lower));
    }
    if (path_cm && k > 1 && n + 1 > out.lower) {
        out.lower = n + 1;
        out.notes.push_back("connected+cohen_macaulay: size n forces a reflection group, which G is not");
    }
    if (out.lower == n) out.notes.push_back("lower bound n = dim X");
    return out;
}

}  // namespace sepinv
