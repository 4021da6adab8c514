#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "action.hpp"
#include "groebner.hpp"
#include "scene.hpp"

namespace sepinv {

/// Codimension of a fixed locus in X, or nullopt when it is empty.
using FixedCodim = std::optional<unsigned>;

inline std::string to_string(const FixedCodim& c) { return c ? std::to_string(*c) : "empty-fixed-locus"; }

/// Generators act(g, x_l) - x_l of the ideal cutting out the fixed locus of g.
template <CoefficientField F>
std::vector<Polynomial<F>> fixed_locus_generators(const ActionElement<F>& g) {
    std::vector<Polynomial<F>> out;
    const auto& images = g.coordinate_images();
    for (std::size_t l = 0; l < images.size(); ++l) {
        auto d = images[l] - Polynomial<F>::variable(g.field(), images.size(), l);
        if (!d.is_zero()) out.push_back(std::move(d));
    }
    return out;
}

namespace detail {

// Solution set of (A - I) x = -b on affine space: codim rank(A - I) or empty.
template <CoefficientField F>
FixedCodim linear_fixed_codim(const ActionElement<F>& g) {
    const auto& field = g.field();
    const std::size_t n = g.dimension();
    auto m = g.matrix() - Matrix<F>::identity(field, n);
    std::vector<typename F::value_type> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = field.neg(g.translation()[i]);
    if (!solve(m, rhs)) return std::nullopt;
    return static_cast<unsigned>(rank(m));
}

template <CoefficientField F>
FixedCodim codim_in(unsigned dim_x, const Ideal<F>& ideal, const GroebnerCaps& caps) {
    auto d = dimension(ideal, MonomialOrder::grevlex(), caps);
    if (!d) return std::nullopt;
    return dim_x - std::min(*d, dim_x);
}

}  // namespace detail

/// Codimension in X of the fixed locus of g.
template <CoefficientField F>
FixedCodim fixed_codim(const ActionElement<F>& g, const Scene<F>& scene) {
    if (g.dimension() != scene.ambient()) throw InputError("group element does not act on the scene");
    if (scene.is_affine_space() && g.is_linear_like()) return detail::linear_fixed_codim(g);
    auto ideal = scene.variety();
    for (auto& f : fixed_locus_generators(g)) ideal.generators.push_back(std::move(f));
    return detail::codim_in(scene.dimension(), ideal, scene.caps());
}

/// Same quantity through the Groebner route only; used to cross-check.
template <CoefficientField F>
FixedCodim fixed_codim_groebner(const ActionElement<F>& g, const Scene<F>& scene) {
    auto ideal = scene.variety();
    for (auto& f : fixed_locus_generators(g)) ideal.generators.push_back(std::move(f));
    return detail::codim_in(scene.dimension(), ideal, scene.caps());
}

/// fixed_codim of every group element, in element order.
template <CoefficientField F>
std::vector<FixedCodim> classify_reflections(const Scene<F>& scene) {
    std::vector<FixedCodim> out;
    out.reserve(scene.group().order());
    for (const auto& g : scene.group().elements()) out.push_back(fixed_codim(g, scene));
    return out;
}

/// True iff the elements with the given indices generate the whole group.
template <CoefficientField F>
bool is_generated_by(const FiniteGroup<F>& group, const std::vector<std::size_t>& subset) {
    const std::size_t n = group.order();
    for (auto i : subset)
        if (i >= n) throw InputError("subset index outside the group");
    // Closure inside the multiplication table of the known group.
    std::vector<char> in(n, 0);
    std::vector<std::size_t> reached{group.identity_index()};
    in[group.identity_index()] = 1;
    for (std::size_t head = 0; head < reached.size(); ++head)
        for (auto s : subset) {
            auto p = group.product_index(reached[head], s);
            if (!in[p]) {
                in[p] = 1;
                reached.push_back(p);
            }
        }
    return reached.size() == n;
}

/// Indices of the k-reflections (fixed locus nonempty, codim at most k).
inline std::vector<std::size_t> k_reflections(const std::vector<FixedCodim>& codims, unsigned k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < codims.size(); ++i)
        if (codims[i] && *codims[i] <= k) out.push_back(i);
    return out;
}

/// Least k such that the k-reflections generate the group; nullopt if none.
template <CoefficientField F>
std::optional<unsigned> min_reflection_k(const FiniteGroup<F>& group, const std::vector<FixedCodim>& codims,
                                         unsigned dim_x) {
    for (unsigned k = 0; k <= dim_x; ++k)
        if (is_generated_by(group, k_reflections(codims, k))) return k;
    return std::nullopt;
}

template <CoefficientField F>
std::optional<unsigned> min_reflection_k(const Scene<F>& scene) {
    return min_reflection_k(scene.group(), classify_reflections(scene), scene.dimension());
}

}  // namespace sepinv
