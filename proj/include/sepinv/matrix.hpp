#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace sepinv {

/// Dense rectangular matrix over a coefficient field, row-major.
template <CoefficientField F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    [[nodiscard]] const F& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool square() const { return rows_ == cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] const std::vector<value_type>& entries() const { return data_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : data_)
            if (!field_.is_zero(v)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch in product");
        const F& f = a.field_;
        Matrix out(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& aik = a(i, k);
                if (f.is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) f.add_to(out(i, j), f.mul(aik, b(k, j)));
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) { return a.combine(b, false); }
    friend Matrix operator-(const Matrix& a, const Matrix& b) { return a.combine(b, true); }

    [[nodiscard]] std::vector<value_type> apply(std::span<const value_type> v) const {
        if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
        std::vector<value_type> out(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) field_.add_to(out[i], field_.mul((*this)(i, j), v[j]));
        return out;
    }

    // Canonical row-major serialization; used as the hashing key for group elements.
    [[nodiscard]] std::string key() const {
        std::string out;
        for (const auto& v : data_) {
            out += field_.to_string(v);
            out += ',';
        }
        return out;
    }

private:
    Matrix combine(const Matrix& b, bool subtract) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix dimension mismatch");
        Matrix out(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] = subtract ? field_.sub(data_[i], b.data_[i]) : field_.add(data_[i], b.data_[i]);
        return out;
    }

    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

/// Result of Gauss-Jordan elimination: the reduced row echelon form and the
/// pivot column of each nonzero row.
template <CoefficientField F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
};

// Pivot rule: for each column, the first row at or below the current rank
// with a nonzero entry.
template <CoefficientField F>
RowEchelon<F> row_echelon(Matrix<F> m) {
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
        const auto scale = f.inv(m(rank, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(rank, j) = f.mul(m(rank, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || f.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(rank, j)));
        }
        pivots.push_back(c);
        ++rank;
    }
    return {std::move(m), std::move(pivots)};
}

template <CoefficientField F>
std::size_t rank(const Matrix<F>& m) {
    return row_echelon(m).pivots.size();
}

template <CoefficientField F>
Matrix<F> invert(const Matrix<F>& m) {
    if (!m.square()) throw InputError("cannot invert a non-square matrix");
    const std::size_t n = m.rows();
    const F& f = m.field();
    Matrix<F> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    auto ech = row_echelon(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw SingularMatrixError();
    Matrix<F> out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
    return out;
}

/// Basis of the right null space {v : m v = 0}, returned in reduced echelon
/// form (one vector per free column, free coordinate equal to one).
template <CoefficientField F>
std::vector<std::vector<typename F::value_type>> nullspace(const Matrix<F>& m) {
    const F& f = m.field();
    auto ech = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::value_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::value_type> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = f.neg(ech.reduced(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m x = b. Returns nothing when inconsistent; otherwise the solution
/// with every free variable set to zero.
template <CoefficientField F>
std::optional<std::vector<typename F::value_type>> solve(const Matrix<F>& m, std::span<const typename F::value_type> b) {
    const F& f = m.field();
    if (b.size() != m.rows()) throw InputError("right-hand side length mismatch");
    Matrix<F> aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto ech = row_echelon(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
    std::vector<typename F::value_type> x(m.cols(), f.zero());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
    return x;
}

}  // namespace sepinv
