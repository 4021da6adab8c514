#pragma once

#include <set>
#include <vector>

#include "action.hpp"
#include "reflections.hpp"
#include "scene.hpp"

namespace sepinv {

/// A finite group of unimodular integer matrices acting on Z^n.
class LatticeAction {
public:
    LatticeAction(std::size_t rank, std::vector<IntMatrix> generators, std::size_t cap = kDefaultGroupCap)
        : rank_(rank), generators_(std::move(generators)) {
        for (const auto& g : generators_) {
            if (g.rows() != rank_ || g.cols() != rank_) throw InputError("lattice generator has the wrong size");
            if (!g.is_unimodular()) throw InputError("lattice generator is not unimodular");
        }
        elements_ = bfs_closure(
            IntMatrix::identity(rank_), generators_, [](const IntMatrix& a, const IntMatrix& b) { return a * b; },
            [](const IntMatrix& a) { return a.key(); }, cap);
    }

    [[nodiscard]] std::size_t rank() const { return rank_; }
    [[nodiscard]] const std::vector<IntMatrix>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<IntMatrix>& elements() const { return elements_; }
    [[nodiscard]] std::size_t order() const { return elements_.size(); }

private:
    std::size_t rank_;
    std::vector<IntMatrix> generators_;
    std::vector<IntMatrix> elements_;
};

/// Rank over Q of sigma - I, i.e. of the sublattice {sigma l - l}.
inline unsigned reflection_rank_lattice(const IntMatrix& sigma) {
    if (!sigma.is_unimodular()) throw InputError("lattice matrix is not unimodular");
    auto m = sigma.to_rational() - Matrix<RationalField>::identity(RationalField{}, sigma.rows());
    return static_cast<unsigned>(rank(m));
}

/// Variable names x1..xn, y1..yn of the torus ring.
inline std::vector<std::string> torus_names(std::size_t n) { return paired_names(n); }

/// Generators x_j y_j - 1 of the torus (G_m)^n inside A^{2n}.
template <CoefficientField F>
std::vector<Polynomial<F>> torus_ideal(const F& field, std::size_t n) {
    std::vector<Polynomial<F>> out;
    for (std::size_t j = 0; j < n; ++j) {
        Monomial m;
        m.set(j, 1);
        m.set(n + j, 1);
        out.push_back(Polynomial<F>::from_terms(field, 2 * n, {{m, field.one()}, {Monomial{}, field.neg(field.one())}}));
    }
    return out;
}

template <CoefficientField F>
FiniteGroup<F> torus_group(const LatticeAction& action, const F& field) {
    std::vector<ActionElement<F>> gens;
    for (const auto& g : action.generators()) gens.push_back(ActionElement<F>::monomial(field, g));
    return close_group(ActionElement<F>::monomial(field, IntMatrix::identity(action.rank())), std::move(gens));
}

/// Sum of the monomials x^{sigma l} over the orbit of l.
template <CoefficientField F>
Polynomial<F> orbit_sum(const LatticeAction& action, const F& field, const std::vector<long long>& exponent) {
    const std::size_t n = action.rank();
    if (exponent.size() != n) throw InputError("exponent vector length differs from lattice rank");
    std::set<std::vector<long long>> orbit;
    for (const auto& g : action.elements()) orbit.insert(g.apply(exponent));
    std::vector<Term<F>> terms;
    for (const auto& v : orbit) terms.push_back({laurent_monomial(v), field.one()});
    return Polynomial<F>::from_terms(field, 2 * n, std::move(terms));
}

/// Scene on 2n variables presenting the torus with the induced action.
template <CoefficientField F>
Scene<F> torus_scene(const LatticeAction& action, const F& field, std::vector<Polynomial<F>> invariants = {},
                     std::vector<Polynomial<F>> candidates = {}, std::set<Hypothesis> flags = {},
                     std::vector<std::string> invariant_names = {}) {
    SceneData<F> d;
    d.field = field;
    d.ambient = 2 * action.rank();
    d.names = torus_names(action.rank());
    d.variety = torus_ideal(field, action.rank());
    d.components = std::vector<std::vector<Polynomial<F>>>{d.variety};
    d.group = torus_group(action, field);
    for (auto& f : invariants) f = laurent_reduce(f);
    for (auto& f : candidates) f = laurent_reduce(f);
    d.invariants = std::move(invariants);
    d.invariant_names = std::move(invariant_names);
    d.candidates = std::move(candidates);
    d.flags = std::move(flags);
    return Scene<F>(std::move(d));
}

struct LatticeCrosscheck {
    unsigned lattice_rank = 0;
    FixedCodim torus_codim;
    [[nodiscard]] bool agree() const { return torus_codim && *torus_codim == lattice_rank; }
};

/// Compares rank(sigma - I) with the codimension of the fixed locus of sigma
/// on the torus.
template <CoefficientField F>
LatticeCrosscheck lattice_height_crosscheck(const LatticeAction& action, const IntMatrix& sigma, const F& field) {
    if (action.rank() > 3) throw InputError("lattice crosscheck is limited to rank 3");
    LatticeCrosscheck out;
    out.lattice_rank = reflection_rank_lattice(sigma);
    const auto scene = torus_scene(action, field);
    out.torus_codim = fixed_codim(ActionElement<F>::monomial(field, sigma), scene);
    return out;
}

}  // namespace sepinv
