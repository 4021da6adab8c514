#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace sepinv {

/// Generators of an ideal in a polynomial ring with `nvars` variables.
template <CoefficientField F>
struct Ideal {
    F field;
    std::size_t nvars = 0;
    std::vector<Polynomial<F>> generators;

    Ideal() = default;
    Ideal(F f, std::size_t n, std::vector<Polynomial<F>> gens = {})
        : field(std::move(f)), nvars(n), generators(std::move(gens)) {
        for (const auto& g : generators)
            if (g.nvars() != nvars) throw InputError("ideal generator from a ring of a different size");
        std::erase_if(generators, [](const Polynomial<F>& g) { return g.is_zero(); });
    }

    // I + J.
    [[nodiscard]] Ideal operator+(const Ideal& other) const {
        if (other.nvars != nvars) throw InputError("ideal sum across rings of different sizes");
        auto gens = generators;
        gens.insert(gens.end(), other.generators.begin(), other.generators.end());
        return Ideal(field, nvars, std::move(gens));
    }
};

/// Limits on a single basis computation. A zero monomial budget means
/// unlimited; otherwise it bounds the number of terms produced while reducing.
struct GroebnerCaps {
    std::size_t max_basis = 20000;
    std::size_t max_pairs = 200000;
    std::uint64_t monomial_budget = 0;
};

namespace detail {

// Polynomial with terms sorted descending in an arbitrary order, monic when
// stored in a basis.
template <CoefficientField F>
using TermVector = std::vector<Term<F>>;

template <CoefficientField F>
class Reducer {
public:
    using value_type = typename F::value_type;

    Reducer(const F& field, MonomialOrder order, const GroebnerCaps& caps) : f_(field), order_(order), caps_(caps) {}

    [[nodiscard]] const MonomialOrder& order() const { return order_; }

    void sort(TermVector<F>& t) const {
        std::sort(t.begin(), t.end(), [&](const Term<F>& a, const Term<F>& b) { return order_.greater(a.mono, b.mono); });
    }

    // a - c * m * b where b is sorted; terms of b are skipped up to `skip`.
    TermVector<F> sub_mul(const TermVector<F>& a, std::size_t a_start, const value_type& c, const Monomial& m,
                          const TermVector<F>& b, std::size_t skip) {
        TermVector<F> out;
        out.reserve(a.size() - a_start + b.size() - skip);
        std::size_t i = a_start, j = skip;
        while (i < a.size() || j < b.size()) {
            int cmp;
            Monomial bm;
            if (j < b.size()) bm = b[j].mono * m;
            if (i == a.size())
                cmp = -1;
            else if (j == b.size())
                cmp = 1;
            else
                cmp = order_.compare(a[i].mono, bm);
            if (cmp > 0) {
                out.push_back(a[i++]);
            } else if (cmp < 0) {
                out.push_back({bm, f_.neg(f_.mul(c, b[j].coef))});
                ++j;
            } else {
                auto v = f_.sub(a[i].coef, f_.mul(c, b[j].coef));
                if (!f_.is_zero(v)) out.push_back({a[i].mono, std::move(v)});
                ++i;
                ++j;
            }
        }
        charge(out.size());
        return out;
    }

    void charge(std::size_t n) {
        spent_ += n;
        if (caps_.monomial_budget != 0 && spent_ > caps_.monomial_budget)
            throw ResourceCapError("monomial budget exceeded (" + std::to_string(caps_.monomial_budget) + ")");
    }

    // Full reduction of p by the listed basis elements (all monic). The first
    // listed divisor with the fewest terms is used.
    template <class Basis>
    TermVector<F> reduce(TermVector<F> p, const Basis& basis, const std::vector<std::size_t>& use) {
        TermVector<F> rem;
        std::size_t start = 0;
        while (start < p.size()) {
            const Monomial& lm = p[start].mono;
            const std::uint32_t supp = lm.support();
            std::size_t best = SIZE_MAX;
            for (std::size_t idx : use) {
                const auto& g = basis.poly(idx);
                if ((basis.support(idx) & ~supp) != 0) continue;
                if (!g.front().mono.divides(lm)) continue;
                if (best == SIZE_MAX || g.size() < basis.poly(best).size()) best = idx;
                if (g.size() <= 2) break;
            }
            if (best == SIZE_MAX) {
                rem.push_back(std::move(p[start]));
                ++start;
                continue;
            }
            const auto& g = basis.poly(best);
            const auto c = p[start].coef;
            const Monomial m = lm / g.front().mono;
            p = sub_mul(p, start + 1, c, m, g, 1);
            start = 0;
        }
        return rem;
    }

    void make_monic(TermVector<F>& p) const {
        if (p.empty() || f_.is_one(p.front().coef)) return;
        const auto inv = f_.inv(p.front().coef);
        for (auto& t : p) t.coef = f_.mul(t.coef, inv);
    }

    [[nodiscard]] const F& field() const { return f_; }

private:
    F f_;
    MonomialOrder order_;
    GroebnerCaps caps_;
    std::uint64_t spent_ = 0;
};

}  // namespace detail

/// Reduced Groebner basis: monic, auto-reduced, sorted by ascending leading
/// monomial.
template <CoefficientField F>
class GroebnerBasis {
public:
    GroebnerBasis(F field, std::size_t nvars, MonomialOrder order, std::vector<detail::TermVector<F>> elements)
        : field_(std::move(field)), nvars_(nvars), order_(order), elements_(std::move(elements)) {
        for (const auto& e : elements_) supports_.push_back(e.front().mono.support());
    }

    [[nodiscard]] const F& field() const { return field_; }
    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] const MonomialOrder& order() const { return order_; }
    [[nodiscard]] std::size_t size() const { return elements_.size(); }

    // 1 is in the ideal.
    [[nodiscard]] bool is_unit() const { return elements_.size() == 1 && elements_[0].front().mono.is_one(); }
    [[nodiscard]] bool is_zero_ideal() const { return elements_.empty(); }

    [[nodiscard]] std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& e : elements_) out.push_back(e.front().mono);
        return out;
    }

    [[nodiscard]] std::vector<Polynomial<F>> basis() const {
        std::vector<Polynomial<F>> out;
        for (const auto& e : elements_) out.push_back(Polynomial<F>::from_terms(field_, nvars_, e));
        return out;
    }

    [[nodiscard]] Polynomial<F> normal_form(const Polynomial<F>& p) const {
        if (p.nvars() != nvars_) throw InputError("normal form across rings of different sizes");
        detail::Reducer<F> red(field_, order_, GroebnerCaps{});
        detail::TermVector<F> t(p.terms().begin(), p.terms().end());
        red.sort(t);
        std::vector<std::size_t> use(elements_.size());
        for (std::size_t i = 0; i < use.size(); ++i) use[i] = i;
        auto rem = red.reduce(std::move(t), *this, use);
        return Polynomial<F>::from_terms(field_, nvars_, std::move(rem));
    }

    [[nodiscard]] bool contains(const Polynomial<F>& p) const { return normal_form(p).is_zero(); }

    // Accessors used by the reducer.
    [[nodiscard]] const detail::TermVector<F>& poly(std::size_t i) const { return elements_[i]; }
    [[nodiscard]] std::uint32_t support(std::size_t i) const { return supports_[i]; }

private:
    F field_;
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<detail::TermVector<F>> elements_;
    std::vector<std::uint32_t> supports_;
};

namespace detail {

template <CoefficientField F>
class BuchbergerEngine {
public:
    BuchbergerEngine(const F& field, MonomialOrder order, const GroebnerCaps& caps)
        : red_(field, order, caps), caps_(caps) {}

    [[nodiscard]] const TermVector<F>& poly(std::size_t i) const { return polys_[i]; }
    [[nodiscard]] std::uint32_t support(std::size_t i) const { return supports_[i]; }

    std::vector<TermVector<F>> run(const std::vector<Polynomial<F>>& input) {
        for (const auto& g : input) {
            TermVector<F> t(g.terms().begin(), g.terms().end());
            red_.sort(t);
            auto h = red_.reduce(std::move(t), *this, active_list());
            if (h.empty()) continue;
            if (insert(std::move(h))) return {unit_polynomial()};
        }
        while (!pairs_.empty()) {
            const Pair pr = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            auto s = spoly(pr);
            auto h = red_.reduce(std::move(s), *this, active_list());
            if (h.empty()) continue;
            if (insert(std::move(h))) return {unit_polynomial()};
        }
        return finalize();
    }

private:
    struct Pair {
        std::uint32_t degree;
        std::size_t i, j;
        Monomial lcm;
        friend bool operator<(const Pair& a, const Pair& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    std::vector<std::size_t> active_list() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < polys_.size(); ++i)
            if (active_[i]) out.push_back(i);
        return out;
    }

    TermVector<F> unit_polynomial() const { return {{Monomial{}, red_.field().one()}}; }

    TermVector<F> spoly(const Pair& pr) {
        const auto& a = polys_[pr.i];
        const auto& b = polys_[pr.j];
        const Monomial ma = pr.lcm / a.front().mono;
        const Monomial mb = pr.lcm / b.front().mono;
        TermVector<F> sa;
        sa.reserve(a.size());
        for (std::size_t k = 1; k < a.size(); ++k) sa.push_back({a[k].mono * ma, a[k].coef});
        return red_.sub_mul(sa, 0, red_.field().one(), mb, b, 1);
    }

    // Gebauer-Moeller update. Returns true when h is a nonzero constant.
    bool insert(TermVector<F> h) {
        red_.make_monic(h);
        if (h.front().mono.is_one()) return true;
        const std::size_t hi = polys_.size();
        if (hi + 1 > caps_.max_basis)
            throw ResourceCapError("Groebner basis size cap exceeded (" + std::to_string(caps_.max_basis) + ")");
        const Monomial lmh = h.front().mono;
        polys_.push_back(std::move(h));
        supports_.push_back(lmh.support());
        active_.push_back(true);

        struct Cand {
            std::size_t g;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> c;
        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g]) {
                const Monomial& lmg = polys_[g].front().mono;
                c.push_back({g, Monomial::lcm(lmh, lmg), lmh.coprime(lmg)});
            }

        // Chain criterion among the new pairs.
        std::vector<Cand> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            bool keep = c[k].coprime;
            if (!keep) {
                keep = true;
                for (std::size_t l = 0; l < c.size() && keep; ++l) {
                    if (l == k) continue;
                    // a later candidate counts only if not yet discarded; d holds survivors
                    if (l < k) continue;
                    if (c[l].lcm.divides(c[k].lcm)) keep = false;
                }
                for (const auto& kept : d)
                    if (kept.lcm.divides(c[k].lcm)) keep = false;
            }
            if (keep) d.push_back(c[k]);
        }
        std::vector<Cand> e;
        for (const auto& x : d)
            if (!x.coprime) e.push_back(x);

        // Prune old pairs whose lcm is strictly divisible by lm(h) in the B_h sense.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Monomial& l = it->lcm;
            if (lmh.divides(l) && !(Monomial::lcm(polys_[it->i].front().mono, lmh) == l) &&
                !(Monomial::lcm(polys_[it->j].front().mono, lmh) == l))
                it = pairs_.erase(it);
            else
                ++it;
        }
        for (const auto& x : e) pairs_.insert(Pair{x.lcm.degree(), x.g, hi, x.lcm});
        if (pairs_.size() > caps_.max_pairs)
            throw ResourceCapError("Groebner pair queue cap exceeded (" + std::to_string(caps_.max_pairs) + ")");

        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g] && lmh.divides(polys_[g].front().mono)) active_[g] = false;
        return false;
    }

    std::vector<TermVector<F>> finalize() {
        std::vector<std::size_t> minimal = active_list();
        // Inter-reduce tails; leading terms are untouched since the set is minimal.
        std::vector<TermVector<F>> out;
        for (std::size_t idx : minimal) {
            std::vector<std::size_t> others;
            for (std::size_t o : minimal)
                if (o != idx) others.push_back(o);
            TermVector<F> head{polys_[idx].front()};
            TermVector<F> tail(polys_[idx].begin() + 1, polys_[idx].end());
            auto rem = red_.reduce(std::move(tail), *this, others);
            head.insert(head.end(), rem.begin(), rem.end());
            out.push_back(std::move(head));
        }
        const auto& order = red_.order();
        std::sort(out.begin(), out.end(), [&](const TermVector<F>& a, const TermVector<F>& b) {
            return order.compare(a.front().mono, b.front().mono) < 0;
        });
        return out;
    }

    Reducer<F> red_;
    GroebnerCaps caps_;
    std::vector<TermVector<F>> polys_;
    std::vector<std::uint32_t> supports_;
    std::vector<bool> active_;
    std::set<Pair> pairs_;
};

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree, then lowest index pair) and Gebauer-Moeller pair criteria.
template <CoefficientField F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, MonomialOrder order = MonomialOrder::grevlex(),
                            const GroebnerCaps& caps = {}) {
    if (order.kind() == MonomialOrder::Kind::elimination && order.block() >= ideal.nvars && ideal.nvars > 0)
        throw InputError("elimination block must be smaller than the variable count");
    detail::BuchbergerEngine<F> engine(ideal.field, order, caps);
    auto elements = engine.run(ideal.generators);
    return GroebnerBasis<F>(ideal.field, ideal.nvars, order, std::move(elements));
}

/// Krull dimension of the quotient ring computed from a basis: the size of a
/// largest variable set containing no leading-monomial support. Empty when 1
/// is in the ideal.
template <CoefficientField F>
std::optional<unsigned> dimension(const GroebnerBasis<F>& gb) {
    if (gb.is_unit()) return std::nullopt;
    const std::size_t n = gb.nvars();
    std::vector<std::uint32_t> masks;
    for (const auto& m : gb.leading_monomials()) masks.push_back(m.support());
    std::sort(masks.begin(), masks.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint32_t> minimal;
    for (auto m : masks) {
        bool dominated = false;
        for (auto k : minimal)
            if ((k & m) == k) dominated = true;
        if (!dominated) minimal.push_back(m);
    }
    // Smallest set of variables meeting every support (branch on the first
    // unmet support); its complement is a maximal independent set.
    unsigned best = static_cast<unsigned>(n);
    auto search = [&](auto&& self, std::uint32_t chosen, unsigned count) -> void {
        if (count >= best) return;
        const std::uint32_t* unmet = nullptr;
        for (const auto& m : minimal)
            if ((m & chosen) == 0) {
                unmet = &m;
                break;
            }
        if (!unmet) {
            best = count;
            return;
        }
        if (count + 1 >= best) return;
        for (std::uint32_t bits = *unmet; bits; bits &= bits - 1) self(self, chosen | (bits & -bits), count + 1);
    };
    search(search, 0u, 0u);
    return static_cast<unsigned>(n) - best;
}

template <CoefficientField F>
std::optional<unsigned> dimension(const Ideal<F>& ideal, MonomialOrder order = MonomialOrder::grevlex(),
                                  const GroebnerCaps& caps = {}) {
    return dimension(buchberger(ideal, order, caps));
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
    return gb.normal_form(f);
}

/// f in the radical of I. Cheap checks first (f and f^2 in I), then the
/// Rabinowitsch test: 1 in I + (1 - t f) with t appended as the last variable.
template <CoefficientField F>
bool radical_member(const Polynomial<F>& f, const Ideal<F>& ideal, const GroebnerCaps& caps = {},
                    const GroebnerBasis<F>* precomputed = nullptr) {
    if (f.nvars() != ideal.nvars) throw InputError("radical membership across rings of different sizes");
    if (f.is_zero()) return true;
    std::optional<GroebnerBasis<F>> local;
    if (!precomputed) local.emplace(buchberger(ideal, MonomialOrder::grevlex(), caps));
    const GroebnerBasis<F>& gb = precomputed ? *precomputed : *local;
    if (gb.is_unit()) return true;
    if (gb.contains(f)) return true;
    if (gb.contains(f * f)) return true;
    const std::size_t n = ideal.nvars;
    if (n + 1 > kMaxVariables) throw ResourceCapError("no room for the Rabinowitsch variable");
    std::vector<Polynomial<F>> gens;
    for (const auto& g : gb.basis()) gens.push_back(g.extend(n + 1));
    const auto t = Polynomial<F>::variable(ideal.field, n + 1, n);
    gens.push_back(Polynomial<F>::constant(ideal.field, n + 1, ideal.field.one()) - t * f.extend(n + 1));
    return buchberger(Ideal<F>(ideal.field, n + 1, std::move(gens)), MonomialOrder::grevlex(), caps).is_unit();
}

/// Determinant by cofactor expansion along the first row.
template <CoefficientField F>
Polynomial<F> determinant(const std::vector<std::vector<Polynomial<F>>>& m, const F& field, std::size_t nvars) {
    const std::size_t k = m.size();
    if (k == 0) return Polynomial<F>::constant(field, nvars, field.one());
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial<F> acc(field, nvars);
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial<F>>> sub;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Polynomial<F>> row;
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        auto term = m[0][c] * determinant(sub, field, nvars);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

/// I plus every codim x codim minor of the Jacobian of its generators (rows
/// are generators, columns variables; minors in lexicographic row/column
/// order, zero minors dropped). Its zero set contains the singular locus.
template <CoefficientField F>
Ideal<F> singular_locus_ideal(const Ideal<F>& ideal, std::size_t codim) {
    const std::size_t n = ideal.nvars;
    const auto& gens = ideal.generators;
    std::vector<std::vector<Polynomial<F>>> jac(gens.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) jac[r].push_back(gens[r].derivative(c));
    auto out = gens;
    for (const auto& rows : detail::combinations(gens.size(), codim))
        for (const auto& cols : detail::combinations(n, codim)) {
            std::vector<std::vector<Polynomial<F>>> sub;
            for (auto r : rows) {
                std::vector<Polynomial<F>> row;
                for (auto c : cols) row.push_back(jac[r][c]);
                sub.push_back(std::move(row));
            }
            auto minor = determinant(sub, ideal.field, n);
            if (!minor.is_zero()) out.push_back(std::move(minor));
        }
    return Ideal<F>(ideal.field, n, std::move(out));
}

}  // namespace sepinv
