#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "action.hpp"
#include "groebner.hpp"
#include "parse.hpp"

namespace sepinv {

/// All monomials of total degree d in n variables, descending in grevlex.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
        if (var + 1 == n) {
            cur.set(var, left);
            out.push_back(cur);
            cur.set(var, 0);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur.set(var, e);
            self(self, var + 1, left - e);
        }
        cur.set(var, 0);
    };
    if (n == 0) return d == 0 ? std::vector<Monomial>{Monomial{}} : std::vector<Monomial>{};
    rec(rec, 0, d);
    const auto ord = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    return out;
}

template <CoefficientField F>
struct GradedPiece {
    unsigned degree = 0;
    std::vector<Polynomial<F>> basis;
};

inline constexpr std::size_t kMaxPieceMonomials = 20000;

/// Basis of the degree-d invariants of a linear group: the common kernel of
/// the maps g - 1 on the degree-d coefficient space, in reduced echelon form
/// with respect to descending grevlex.
template <CoefficientField F>
GradedPiece<F> invariant_space(const FiniteGroup<F>& group, unsigned d, std::size_t max_monomials = kMaxPieceMonomials) {
    if (group.kind() != ActionKind::linear) throw InputError("invariant_space needs a linear action");
    const std::size_t n = group.dimension();
    const F& field = group.field();
    const auto monos = monomials_of_degree(n, d);
    if (monos.size() > max_monomials)
        throw ResourceCapError("degree " + std::to_string(d) + " needs " + std::to_string(monos.size()) +
                               " monomials, above the bound " + std::to_string(max_monomials));
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

    const std::size_t m = monos.size();
    const auto& gens = group.generators();
    Matrix<F> stacked(field, std::max<std::size_t>(1, gens.size()) * m, m);
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (std::size_t c = 0; c < m; ++c) {
            auto img = act(gens[gi], Polynomial<F>::monomial(field, n, monos[c], field.one()));
            for (const auto& t : img.terms()) stacked(gi * m + index.at(t.mono), c) = t.coef;
            auto& diag = stacked(gi * m + c, c);
            diag = field.sub(diag, field.one());
        }
    auto kernel = nullspace(stacked);
    GradedPiece<F> out;
    out.degree = d;
    if (kernel.empty()) return out;
    Matrix<F> rows(field, kernel.size(), m);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        for (std::size_t c = 0; c < m; ++c) rows(r, c) = kernel[r][c];
    auto ech = row_echelon(rows);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        std::vector<Term<F>> terms;
        for (std::size_t c = 0; c < m; ++c)
            if (!field.is_zero(ech.reduced(r, c))) terms.push_back({monos[c], ech.reduced(r, c)});
        out.basis.push_back(Polynomial<F>::from_terms(field, n, std::move(terms)));
    }
    return out;
}

/// First `terms` coefficients of (1/|G|) sum_g 1/det(I - z g). Over F_p
/// these are the dimensions reduced mod p.
template <CoefficientField F>
std::vector<typename F::value_type> molien_series(const FiniteGroup<F>& group, std::size_t terms) {
    if (group.kind() != ActionKind::linear) throw InputError("molien_series needs a linear action");
    const F& field = group.field();
    const std::uint32_t p = field.characteristic();
    if (p != 0 && group.order() % p == 0)
        throw ModularCharacteristicError("characteristic " + std::to_string(p) + " divides the group order " +
                                         std::to_string(group.order()));
    const std::size_t n = group.dimension();
    std::vector<typename F::value_type> total(terms, field.zero());
    const auto z = Polynomial<F>::variable(field, 1, 0);
    const auto one = Polynomial<F>::constant(field, 1, field.one());
    for (const auto& g : group.elements()) {
        std::vector<std::vector<Polynomial<F>>> m(n, std::vector<Polynomial<F>>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = z.scaled(field.neg(g.matrix()(i, j)));
                if (i == j) m[i][j] += one;
            }
        const auto det = determinant(m, field, 1);
        // Coefficients of det as a polynomial in z; det(0) = 1.
        std::vector<typename F::value_type> c(n + 1, field.zero());
        for (const auto& t : det.terms()) c[t.mono[0]] = t.coef;
        // Series inverse: s_0 = 1, s_k = -sum_{i=1..k} c_i s_{k-i}.
        std::vector<typename F::value_type> s(terms, field.zero());
        for (std::size_t k = 0; k < terms; ++k) {
            if (k == 0) {
                s[0] = field.one();
            } else {
                auto acc = field.zero();
                for (std::size_t i = 1; i <= std::min(k, n); ++i) acc = field.add(acc, field.mul(c[i], s[k - i]));
                s[k] = field.neg(acc);
            }
            total[k] = field.add(total[k], s[k]);
        }
    }
    const auto inv_order = field.inv(field.from_int(static_cast<long long>(group.order())));
    for (auto& v : total) v = field.mul(v, inv_order);
    return total;
}

/// Substitutes the named polynomials into `identity` (a polynomial in the
/// names, optionally written "lhs = rhs") and tests for zero, modulo the
/// variety when a basis is supplied.
template <CoefficientField F>
bool check_identity(const std::vector<std::pair<std::string, Polynomial<F>>>& named, const std::string& identity,
                    const GroebnerBasis<F>* variety = nullptr) {
    if (named.empty()) throw InputError("no named generators");
    const F& field = named.front().second.field();
    std::vector<std::string> names;
    std::vector<Polynomial<F>> images;
    for (const auto& [name, poly] : named) {
        names.push_back(name);
        images.push_back(poly);
    }
    PolynomialParser<F> parser(field, names);
    Polynomial<F> rel;
    if (auto eq = identity.find('='); eq != std::string::npos)
        rel = parser.parse(identity.substr(0, eq)) - parser.parse(identity.substr(eq + 1));
    else
        rel = parser.parse(identity);
    auto value = rel.substitute(images);
    if (variety) value = normal_form(value, *variety);
    return value.is_zero();
}

inline constexpr std::size_t kMaxMembershipMonomials = 50000;

/// Looks for P with deg P <= degree_bound and f - P(generators) in the
/// variety ideal. Returns P as a polynomial in one variable per generator.
template <CoefficientField F>
std::optional<Polynomial<F>> check_membership_mod_variety(const Polynomial<F>& f,
                                                          const std::vector<Polynomial<F>>& generators,
                                                          const GroebnerBasis<F>& variety, unsigned degree_bound) {
    const std::size_t k = generators.size();
    const F& field = f.field();
    if (k > kMaxVariables) throw InputError("too many subalgebra generators");
    std::vector<Monomial> monos;
    for (unsigned d = 0; d <= degree_bound; ++d) {
        auto piece = monomials_of_degree(k, d);
        monos.insert(monos.end(), piece.begin(), piece.end());
        if (monos.size() > kMaxMembershipMonomials)
            throw ResourceCapError("degree bound " + std::to_string(degree_bound) + " gives too many products");
    }
    // Normal forms of products, each built from a smaller one.
    std::unordered_map<Monomial, Polynomial<F>, MonomialHash> nf;
    nf.emplace(Monomial{}, normal_form(Polynomial<F>::constant(field, f.nvars(), field.one()), variety));
    for (const auto& m : monos) {
        if (m.is_one()) continue;
        std::size_t v = 0;
        while (m[v] == 0) ++v;
        const auto& prev = nf.at(m / Monomial::variable(v));
        nf.emplace(m, normal_form(prev * generators[v], variety));
    }
    const auto target = normal_form(f, variety);
    // Columns: products; rows: monomials of the ambient ring.
    std::map<std::vector<unsigned>, std::size_t> rows;
    auto row_of = [&](const Monomial& mono) {
        std::vector<unsigned> key(f.nvars());
        for (std::size_t i = 0; i < key.size(); ++i) key[i] = mono[i];
        return rows.try_emplace(key, rows.size()).first->second;
    };
    for (const auto& m : monos)
        for (const auto& t : nf.at(m).terms()) row_of(t.mono);
    for (const auto& t : target.terms()) row_of(t.mono);
    Matrix<F> a(field, std::max<std::size_t>(1, rows.size()), monos.size());
    std::vector<typename F::value_type> b(a.rows(), field.zero());
    for (std::size_t c = 0; c < monos.size(); ++c)
        for (const auto& t : nf.at(monos[c]).terms()) a(row_of(t.mono), c) = t.coef;
    for (const auto& t : target.terms()) b[row_of(t.mono)] = t.coef;
    auto x = solve(a, std::span<const typename F::value_type>(b));
    if (!x) return std::nullopt;
    std::vector<Term<F>> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
        if (!field.is_zero((*x)[c])) terms.push_back({monos[c], (*x)[c]});
    return Polynomial<F>::from_terms(field, k, std::move(terms));
}

}  // namespace sepinv
