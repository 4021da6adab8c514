#pragma once

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace sepinv {

/// Integer matrix, row-major. Used for lattice automorphisms.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<long long> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw InputError("integer matrix entry count mismatch");
    }
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        if (rows.empty()) return {};
        IntMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw InputError("ragged integer matrix");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    long long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    long long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw InputError("integer matrix dimension mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    long long prod = 0;
                    if (__builtin_mul_overflow(a(i, k), b(k, j), &prod) ||
                        __builtin_add_overflow(out(i, j), prod, &out(i, j)))
                        throw InputError("integer matrix overflow");
                }
        return out;
    }

    [[nodiscard]] std::vector<long long> apply(const std::vector<long long>& v) const {
        std::vector<long long> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    [[nodiscard]] Matrix<RationalField> to_rational() const {
        RationalField q;
        Matrix<RationalField> m(q, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = q.from_int((*this)(i, j));
        return m;
    }

    [[nodiscard]] mpq_class determinant() const {
        if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
        auto ech = to_rational();
        // Determinant via elimination over Q.
        mpq_class det = 1;
        const std::size_t n = rows_;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && sgn(ech(piv, c)) == 0) ++piv;
            if (piv == n) return 0;
            if (piv != c) {
                for (std::size_t j = 0; j < n; ++j) std::swap(ech(piv, j), ech(c, j));
                det = -det;
            }
            det *= ech(c, c);
            for (std::size_t r = c + 1; r < n; ++r) {
                if (sgn(ech(r, c)) == 0) continue;
                mpq_class factor = ech(r, c) / ech(c, c);
                for (std::size_t j = c; j < n; ++j) ech(r, j) -= factor * ech(c, j);
            }
        }
        return det;
    }

    [[nodiscard]] bool is_unimodular() const {
        if (rows_ != cols_) return false;
        auto d = determinant();
        return d == 1 || d == -1;
    }

    [[nodiscard]] IntMatrix inverse() const {
        auto inv = invert(to_rational());
        IntMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (inv(i, j).get_den() != 1) throw InputError("integer matrix is not unimodular");
                out(i, j) = inv(i, j).get_num().get_si();
            }
        return out;
    }

    [[nodiscard]] std::string key() const {
        std::string out;
        for (auto v : data_) out += std::to_string(v) + ",";
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<long long> data_;
};

enum class ActionKind { linear, affine, monomial };

inline std::string to_string(ActionKind k) {
    switch (k) {
        case ActionKind::linear: return "linear";
        case ActionKind::affine: return "affine";
        case ActionKind::monomial: return "monomial";
    }
    return "?";
}

/// Monomial x^v in the paired ring on x_1..x_r, y_1..y_r, with negative
/// entries of v realized through the y-variables.
inline Monomial laurent_monomial(const std::vector<long long>& v) {
    const std::size_t r = v.size();
    Monomial m;
    for (std::size_t j = 0; j < r; ++j) {
        if (v[j] > 0) m.set(j, static_cast<unsigned>(v[j]));
        if (v[j] < 0) m.set(r + j, static_cast<unsigned>(-v[j]));
    }
    return m;
}

/// Cancels every x_j y_j pair, i.e. reduces modulo (x_j y_j - 1).
template <CoefficientField F>
Polynomial<F> laurent_reduce(const Polynomial<F>& f) {
    const std::size_t r = f.nvars() / 2;
    std::vector<Term<F>> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        for (std::size_t j = 0; j < r; ++j) {
            const unsigned c = std::min(m[j], m[r + j]);
            if (c) {
                m.set(j, m[j] - c);
                m.set(r + j, m[r + j] - c);
            }
        }
        terms.push_back({m, t.coef});
    }
    return Polynomial<F>::from_terms(f.field(), f.nvars(), std::move(terms));
}

/// A group element acting on points of affine space:
///   linear   x -> A x
///   affine   x -> A x + b
///   monomial on the torus in the paired ring (x, y) with x_j y_j = 1,
///            where the integer matrix M acts on functions by x^l -> x^(M l).
/// The induced action on functions is f -> f o g^-1; `coordinate_images`
/// holds the images of the coordinate functions under it.
template <CoefficientField F>
class ActionElement {
public:
    using value_type = typename F::value_type;

    ActionElement() = default;

    static ActionElement linear(Matrix<F> a) {
        const std::size_t n = a.rows();
        std::vector<value_type> zero(n, a.field().zero());
        ActionElement g(ActionKind::linear, std::move(a), std::move(zero), {});
        return g;
    }

    static ActionElement affine(Matrix<F> a, std::vector<value_type> b) {
        if (b.size() != a.rows()) throw InputError("translation length does not match matrix size");
        return ActionElement(ActionKind::affine, std::move(a), std::move(b), {});
    }

    static ActionElement monomial(const F& field, IntMatrix m) {
        if (!m.is_unimodular()) throw InputError("lattice matrix is not unimodular");
        return ActionElement(field, std::move(m));
    }

    static ActionElement identity_like(const ActionElement& g) {
        switch (g.kind_) {
            case ActionKind::monomial: return monomial(g.field_, IntMatrix::identity(g.lattice_.rows()));
            case ActionKind::linear: return linear(Matrix<F>::identity(g.field_, g.matrix_.rows()));
            case ActionKind::affine:
                return affine(Matrix<F>::identity(g.field_, g.matrix_.rows()),
                              std::vector<value_type>(g.matrix_.rows(), g.field_.zero()));
        }
        return g;
    }

    [[nodiscard]] ActionKind kind() const { return kind_; }
    [[nodiscard]] const F& field() const { return field_; }
    // Number of coordinates of the ambient space the element acts on.
    [[nodiscard]] std::size_t dimension() const { return images_.size(); }
    [[nodiscard]] const Matrix<F>& matrix() const { return matrix_; }
    [[nodiscard]] const std::vector<value_type>& translation() const { return translation_; }
    [[nodiscard]] const IntMatrix& lattice_matrix() const { return lattice_; }
    [[nodiscard]] const std::vector<Polynomial<F>>& coordinate_images() const { return images_; }

    [[nodiscard]] bool is_linear_like() const { return kind_ != ActionKind::monomial; }

    // Composition as maps: (g * h)(x) = g(h(x)).
    friend ActionElement operator*(const ActionElement& g, const ActionElement& h) {
        if (g.kind_ != h.kind_ && !(g.is_linear_like() && h.is_linear_like()))
            throw InputError("cannot compose group elements of different kinds");
        if (g.dimension() != h.dimension()) throw InputError("cannot compose elements of different dimensions");
        if (g.kind_ == ActionKind::monomial) return monomial(g.field_, g.lattice_ * h.lattice_);
        auto a = g.matrix_ * h.matrix_;
        auto b = g.matrix_.apply(h.translation_);
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = g.field_.add(b[i], g.translation_[i]);
        if (g.kind_ == ActionKind::linear && h.kind_ == ActionKind::linear) return linear(std::move(a));
        return affine(std::move(a), std::move(b));
    }

    [[nodiscard]] ActionElement inverse() const {
        if (kind_ == ActionKind::monomial) return monomial(field_, lattice_.inverse());
        auto ainv = invert(matrix_);
        if (kind_ == ActionKind::linear) return linear(ainv);
        auto b = ainv.apply(translation_);
        for (auto& v : b) v = field_.neg(v);
        return affine(std::move(ainv), std::move(b));
    }

    // Canonical row-major serialization of the defining data.
    [[nodiscard]] std::string key() const {
        if (kind_ == ActionKind::monomial) return "M:" + lattice_.key();
        std::string k = matrix_.key();
        if (kind_ == ActionKind::affine) {
            k += "|";
            for (const auto& v : translation_) k += field_.to_string(v) + ",";
        }
        return k;
    }

    [[nodiscard]] bool is_identity() const {
        for (std::size_t l = 0; l < images_.size(); ++l)
            if (!(images_[l] == Polynomial<F>::variable(field_, images_.size(), l))) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        std::string out = "[";
        if (kind_ == ActionKind::monomial) {
            for (std::size_t i = 0; i < lattice_.rows(); ++i) {
                out += i ? "; " : "";
                for (std::size_t j = 0; j < lattice_.cols(); ++j) out += (j ? " " : "") + std::to_string(lattice_(i, j));
            }
            return out + "]";
        }
        for (std::size_t i = 0; i < matrix_.rows(); ++i) {
            out += i ? "; " : "";
            for (std::size_t j = 0; j < matrix_.cols(); ++j) out += (j ? " " : "") + field_.to_string(matrix_(i, j));
        }
        out += "]";
        if (kind_ == ActionKind::affine) {
            out += " + (";
            for (std::size_t i = 0; i < translation_.size(); ++i)
                out += (i ? " " : "") + field_.to_string(translation_[i]);
            out += ")";
        }
        return out;
    }

private:
    ActionElement(ActionKind kind, Matrix<F> a, std::vector<value_type> b, IntMatrix)
        : kind_(kind), field_(a.field()), matrix_(std::move(a)), translation_(std::move(b)) {
        if (!matrix_.square()) throw InputError("group matrix must be square");
        const std::size_t n = matrix_.rows();
        // f o g^-1 with g^-1(x) = A^-1 x - A^-1 b
        const auto ainv = invert(matrix_);
        auto shift = ainv.apply(translation_);
        for (std::size_t l = 0; l < n; ++l) {
            std::vector<Term<F>> terms;
            for (std::size_t j = 0; j < n; ++j)
                if (!field_.is_zero(ainv(l, j))) terms.push_back({Monomial::variable(j), ainv(l, j)});
            if (!field_.is_zero(shift[l])) terms.push_back({Monomial{}, field_.neg(shift[l])});
            images_.push_back(Polynomial<F>::from_terms(field_, n, std::move(terms)));
        }
    }

    ActionElement(const F& field, IntMatrix m) : kind_(ActionKind::monomial), field_(field), lattice_(std::move(m)) {
        const std::size_t r = lattice_.rows();
        for (int block = 0; block < 2; ++block)
            for (std::size_t j = 0; j < r; ++j) {
                std::vector<long long> col(r);
                for (std::size_t i = 0; i < r; ++i) col[i] = block == 0 ? lattice_(i, j) : -lattice_(i, j);
                images_.push_back(Polynomial<F>::monomial(field_, 2 * r, laurent_monomial(col), field_.one()));
            }
    }

    ActionKind kind_ = ActionKind::linear;
    F field_{};
    Matrix<F> matrix_;
    std::vector<value_type> translation_;
    IntMatrix lattice_;
    std::vector<Polynomial<F>> images_;
};

/// The induced action on functions: (g . f) = f o g^-1. Monomial elements
/// return Laurent-reduced results.
template <CoefficientField F>
Polynomial<F> act(const ActionElement<F>& g, const Polynomial<F>& f) {
    if (f.nvars() != g.dimension())
        throw InputError("dimension mismatch: polynomial in " + std::to_string(f.nvars()) +
                         " variables, group element on " + std::to_string(g.dimension()));
    auto out = f.substitute(g.coordinate_images());
    if (g.kind() == ActionKind::monomial) return laurent_reduce(out);
    return out;
}

/// Breadth-first closure of generators under right multiplication; elements
/// are numbered in discovery order with the identity first.
template <class Element, class Multiply, class Key>
std::vector<Element> bfs_closure(Element identity, const std::vector<Element>& generators, Multiply mul, Key key,
                                 std::size_t cap) {
    std::vector<Element> elements{std::move(identity)};
    std::unordered_map<std::string, std::size_t> seen{{key(elements[0]), 0}};
    for (std::size_t head = 0; head < elements.size(); ++head)
        for (const auto& g : generators) {
            Element prod = mul(elements[head], g);
            auto k = key(prod);
            if (seen.contains(k)) continue;
            if (elements.size() + 1 > cap)
                throw ResourceCapError("group order exceeds cap of " + std::to_string(cap));
            seen.emplace(std::move(k), elements.size());
            elements.push_back(std::move(prod));
        }
    return elements;
}

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// A finite group of action elements, closed under composition.
template <CoefficientField F>
class FiniteGroup {
public:
    FiniteGroup() = default;

    /// Closes the generators. `identity` fixes the kind and dimension when the
    /// generator list is empty.
    static FiniteGroup close(const ActionElement<F>& identity, std::vector<ActionElement<F>> generators,
                             std::size_t cap = kDefaultGroupCap) {
        for (const auto& g : generators) {
            if (g.kind() != identity.kind() && !(g.is_linear_like() && identity.is_linear_like()))
                throw InputError("group generators mix element kinds");
            if (g.dimension() != identity.dimension()) throw InputError("group generators differ in dimension");
        }
        FiniteGroup grp;
        grp.generators_ = std::move(generators);
        grp.elements_ = bfs_closure(
            identity, grp.generators_, [](const auto& a, const auto& b) { return a * b; },
            [](const auto& a) { return a.key(); }, cap);
        for (std::size_t i = 0; i < grp.elements_.size(); ++i) grp.index_.emplace(grp.elements_[i].key(), i);
        grp.inverse_.resize(grp.elements_.size());
        for (std::size_t i = 0; i < grp.elements_.size(); ++i) {
            auto idx = grp.index_of(grp.elements_[i].inverse());
            if (!idx) throw InputError("group closure is missing an inverse");
            grp.inverse_[i] = *idx;
        }
        return grp;
    }

    [[nodiscard]] std::size_t order() const { return elements_.size(); }
    [[nodiscard]] const std::vector<ActionElement<F>>& elements() const { return elements_; }
    [[nodiscard]] const ActionElement<F>& element(std::size_t i) const { return elements_[i]; }
    [[nodiscard]] const std::vector<ActionElement<F>>& generators() const { return generators_; }
    [[nodiscard]] std::size_t identity_index() const { return 0; }
    [[nodiscard]] std::size_t dimension() const { return elements_.empty() ? 0 : elements_[0].dimension(); }
    [[nodiscard]] ActionKind kind() const { return elements_[0].kind(); }
    [[nodiscard]] const F& field() const { return elements_[0].field(); }

    [[nodiscard]] std::optional<std::size_t> index_of(const ActionElement<F>& g) const {
        if (auto it = index_.find(g.key()); it != index_.end()) return it->second;
        return std::nullopt;
    }
    [[nodiscard]] std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
    [[nodiscard]] std::size_t product_index(std::size_t i, std::size_t j) const {
        auto idx = index_of(elements_[i] * elements_[j]);
        if (!idx) throw InputError("group is not closed");
        return *idx;
    }

    // Indices of the generators inside the element list.
    [[nodiscard]] std::vector<std::size_t> generator_indices() const {
        std::vector<std::size_t> out;
        for (const auto& g : generators_) out.push_back(*index_of(g));
        return out;
    }

private:
    std::vector<ActionElement<F>> generators_;
    std::vector<ActionElement<F>> elements_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> inverse_;
};

template <CoefficientField F>
FiniteGroup<F> close_group(const ActionElement<F>& identity, std::vector<ActionElement<F>> generators,
                           std::size_t cap = kDefaultGroupCap) {
    return FiniteGroup<F>::close(identity, std::move(generators), cap);
}

/// Linear group on n coordinates from matrices.
template <CoefficientField F>
FiniteGroup<F> linear_group(const F& field, std::size_t n, const std::vector<Matrix<F>>& mats,
                            std::size_t cap = kDefaultGroupCap) {
    std::vector<ActionElement<F>> gens;
    for (const auto& m : mats) gens.push_back(ActionElement<F>::linear(m));
    return close_group(ActionElement<F>::linear(Matrix<F>::identity(field, n)), std::move(gens), cap);
}

/// True iff g . f = f for every generator g.
template <CoefficientField F>
bool is_invariant(const FiniteGroup<F>& group, const Polynomial<F>& f) {
    for (const auto& g : group.generators())
        if (!(act(g, f) == f)) return false;
    if (group.generators().empty() && f.nvars() != group.dimension())
        throw InputError("dimension mismatch between polynomial and group");
    return true;
}

/// (1/|G|) sum of g . f over the group; refuses when char K divides |G|.
template <CoefficientField F>
Polynomial<F> reynolds(const FiniteGroup<F>& group, const Polynomial<F>& f) {
    const auto& field = f.field();
    const std::uint32_t p = field.characteristic();
    if (p != 0 && group.order() % p == 0)
        throw ModularCharacteristicError("characteristic " + std::to_string(p) + " divides the group order " +
                                         std::to_string(group.order()));
    Polynomial<F> acc(field, f.nvars());
    for (const auto& g : group.elements()) acc += act(g, f);
    return acc.scaled(field.inv(field.from_int(static_cast<long long>(group.order()))));
}

}  // namespace sepinv
