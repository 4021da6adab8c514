#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace sepinv {

/// Variable names x1..xn.
inline std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

/// Variable names x1..xn, y1..yn for a ring on two copies of n coordinates.
inline std::vector<std::string> paired_names(std::size_t n) {
    auto out = default_names(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back("y" + std::to_string(i + 1));
    return out;
}

template <CoefficientField F>
struct Term {
    Monomial mono;
    typename F::value_type coef;
};

/// Sparse multivariate polynomial. Terms are stored by descending grevlex
/// order with nonzero coefficients and distinct monomials.
template <CoefficientField F>
class Polynomial {
public:
    using value_type = typename F::value_type;
    using term_type = Term<F>;

    Polynomial() = default;
    Polynomial(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
        if (nvars > kMaxVariables) throw InputError("too many variables: " + std::to_string(nvars));
    }

    static Polynomial constant(const F& field, std::size_t nvars, const value_type& c) {
        Polynomial p(field, nvars);
        if (!field.is_zero(c)) p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static Polynomial variable(const F& field, std::size_t nvars, std::size_t index) {
        if (index >= nvars) throw InputError("variable index out of range");
        Polynomial p(field, nvars);
        p.terms_.push_back({Monomial::variable(index), field.one()});
        return p;
    }
    static Polynomial monomial(const F& field, std::size_t nvars, const Monomial& m, const value_type& c) {
        Polynomial p(field, nvars);
        if (!field.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }
    // Accepts unsorted terms with repeats and zeros.
    static Polynomial from_terms(const F& field, std::size_t nvars, std::vector<term_type> terms) {
        Polynomial p(field, nvars);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    [[nodiscard]] const F& field() const { return field_; }
    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] const std::vector<term_type>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    [[nodiscard]] value_type constant_term() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
        return field_.zero();
    }
    [[nodiscard]] long total_degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree());
        return d;
    }
    [[nodiscard]] bool is_homogeneous() const {
        if (terms_.empty()) return true;
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }
    // Coefficient of a given monomial, zero if absent.
    [[nodiscard]] value_type coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coef;
        return field_.zero();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !a.field_.equal(a.terms_[i].coef, b.terms_[i].coef))
                return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& t : out.terms_) t.coef = field_.neg(t.coef);
        return out;
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

    [[nodiscard]] Polynomial scaled(const value_type& c) const {
        if (field_.is_zero(c)) return Polynomial(field_, nvars_);
        Polynomial out = *this;
        for (auto& t : out.terms_) t.coef = field_.mul(t.coef, c);
        return out;
    }

    // Multiplication by a monomial keeps the term order.
    [[nodiscard]] Polynomial times_monomial(const Monomial& m, const value_type& c) const {
        Polynomial out(field_, nvars_);
        if (field_.is_zero(c)) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.mono * m, field_.mul(t.coef, c)});
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_);
        if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coef);
        if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coef);
        const F& f = a.field_;
        std::unordered_map<Monomial, value_type, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) {
                auto prod = f.mul(s.coef, t.coef);
                auto [it, inserted] = acc.try_emplace(s.mono * t.mono, prod);
                if (!inserted) f.add_to(it->second, prod);
            }
        std::vector<term_type> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!f.is_zero(c)) terms.push_back({m, std::move(c)});
        Polynomial out(f, a.nvars_);
        out.terms_ = std::move(terms);
        out.sort_terms();
        return out;
    }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    // Repeated squaring.
    [[nodiscard]] Polynomial pow(unsigned k) const {
        Polynomial result = constant(field_, nvars_, field_.one());
        Polynomial base = *this;
        while (k) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

    [[nodiscard]] value_type evaluate(std::span<const value_type> point) const {
        if (point.size() != nvars_) throw InputError("point length does not match variable count");
        value_type acc = field_.zero();
        for (const auto& t : terms_) {
            value_type v = t.coef;
            for (std::size_t i = 0; i < nvars_ && !field_.is_zero(v); ++i)
                for (unsigned e = 0; e < t.mono[i]; ++e) v = field_.mul(v, point[i]);
            field_.add_to(acc, v);
        }
        return acc;
    }

    /// Ring map sending variable i to images[i]; the result lives in the ring
    /// of the images.
    [[nodiscard]] Polynomial substitute(std::span<const Polynomial> images) const {
        if (images.size() != nvars_) throw InputError("substitution needs one image per variable");
        if (images.empty()) return *this;
        const std::size_t target = images[0].nvars_;
        std::vector<std::map<unsigned, Polynomial>> powers(nvars_);
        auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
            auto it = powers[var].find(e);
            if (it == powers[var].end()) it = powers[var].emplace(e, images[var].pow(e)).first;
            return it->second;
        };
        Polynomial out(field_, target);
        for (const auto& t : terms_) {
            Polynomial term = constant(field_, target, t.coef);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (t.mono[i]) term *= power_of(i, t.mono[i]);
            out += term;
        }
        return out;
    }

    /// Moves variable i to position mapping[i] of a ring with new_nvars variables.
    [[nodiscard]] Polynomial remap(std::size_t new_nvars, std::span<const std::size_t> mapping) const {
        if (mapping.size() != nvars_) throw InputError("variable mapping size mismatch");
        Polynomial out(field_, new_nvars);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (t.mono[i]) {
                    if (mapping[i] >= new_nvars) throw InputError("variable mapping out of range");
                    m.set(mapping[i], t.mono[i]);
                }
            out.terms_.push_back({m, t.coef});
        }
        out.normalize();
        return out;
    }

    /// Same polynomial in a ring with extra trailing variables.
    [[nodiscard]] Polynomial extend(std::size_t new_nvars) const {
        if (new_nvars < nvars_) throw InputError("cannot shrink a ring");
        Polynomial out = *this;
        out.nvars_ = new_nvars;
        return out;
    }

    [[nodiscard]] Polynomial derivative(std::size_t var) const {
        Polynomial out(field_, nvars_);
        for (const auto& t : terms_) {
            const unsigned e = t.mono[var];
            if (e == 0) continue;
            auto c = field_.mul(t.coef, field_.from_int(e));
            if (field_.is_zero(c)) continue;
            Monomial m = t.mono;
            m.set(var, e - 1);
            out.terms_.push_back({m, c});
        }
        out.normalize();
        return out;
    }

    [[nodiscard]] std::string to_string(std::span<const std::string> names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string coef = field_.to_string(t.coef);
            bool negative = false;
            if constexpr (std::is_same_v<F, RationalField>) {
                if (sgn(t.coef) < 0) {
                    negative = true;
                    coef = field_.to_string(-t.coef);
                }
            }
            if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (!t.mono[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
                if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
            }
            if (mono.empty())
                out += coef;
            else if (coef == "1")
                out += mono;
            else
                out += coef + "*" + mono;
        }
        return out;
    }
    [[nodiscard]] std::string to_string() const { return to_string(default_names(nvars_)); }

private:
    static void check_same_ring(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_)
            throw InputError("polynomials from rings of different sizes: " + std::to_string(a.nvars_) + " vs " +
                             std::to_string(b.nvars_));
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        check_same_ring(a, b);
        const F& f = a.field_;
        const auto order = MonomialOrder::grevlex();
        Polynomial out(f, a.nvars_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c = 0;
            if (i == a.terms_.size())
                c = -1;
            else if (j == b.terms_.size())
                c = 1;
            else
                c = order.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                out.terms_.push_back({t.mono, subtract ? f.neg(t.coef) : t.coef});
            } else {
                auto v = subtract ? f.sub(a.terms_[i].coef, b.terms_[j].coef) : f.add(a.terms_[i].coef, b.terms_[j].coef);
                if (!f.is_zero(v)) out.terms_.push_back({a.terms_[i].mono, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void sort_terms() {
        const auto order = MonomialOrder::grevlex();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const term_type& x, const term_type& y) { return order.greater(x.mono, y.mono); });
    }

    void normalize() {
        sort_terms();
        std::vector<term_type> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().mono == t.mono)
                field_.add_to(merged.back().coef, t.coef);
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [&](const term_type& t) { return field_.is_zero(t.coef); });
        terms_ = std::move(merged);
    }

    F field_{};
    std::size_t nvars_ = 0;
    std::vector<term_type> terms_;
};

/// f(x_1..x_n) - f(y_1..y_n) in the ring on 2n variables (x block first).
template <CoefficientField F>
Polynomial<F> delta(const Polynomial<F>& f) {
    const std::size_t n = f.nvars();
    std::vector<std::size_t> to_x(n), to_y(n);
    for (std::size_t i = 0; i < n; ++i) {
        to_x[i] = i;
        to_y[i] = n + i;
    }
    return f.remap(2 * n, to_x) - f.remap(2 * n, to_y);
}

/// The copy of f in the x-block (first = true) or y-block of the doubled ring.
template <CoefficientField F>
Polynomial<F> to_doubled(const Polynomial<F>& f, bool first) {
    const std::size_t n = f.nvars();
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) map[i] = first ? i : n + i;
    return f.remap(2 * n, map);
}

}  // namespace sepinv
