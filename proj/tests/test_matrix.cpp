#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sepinv/matrix.hpp"

using namespace sepinv;

namespace {

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix<F> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
    return m;
}

template <class F>
Matrix<F> random_invertible(const F& f, std::size_t n, std::mt19937& rng) {
    while (true) {
        auto m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

// Unipotent generator over F2 with parameters (a, b, c).
Matrix<FiniteField> unipotent(const FiniteField& f, int a, int b, int c) {
    Matrix<FiniteField> m = Matrix<FiniteField>::identity(f, 4);
    m(1, 0) = f.from_int(b);
    m(1, 2) = f.from_int(c);
    m(3, 0) = f.from_int(c);
    m(3, 2) = f.from_int(a);
    return m;
}

}  // namespace

TEST(Rank, Examples) {
    FiniteField f2(FieldSpec::prime(2));
    EXPECT_EQ(rank(Matrix<FiniteField>(f2, 4, 4)), 0u);
    auto id = Matrix<FiniteField>::identity(f2, 4);
    EXPECT_EQ(rank(unipotent(f2, 0, 1, 0) - id), 1u);
    EXPECT_EQ(rank(unipotent(f2, 0, 0, 1) - id), 2u);
}

TEST(Rank, MatchesImageSizeOracle) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        FiniteField f(FieldSpec::prime(p));
        std::mt19937 rng(p);
        for (int t = 0; t < 40; ++t) {
            auto m = random_matrix(f, 3, 4, rng);
            oracle::ModMatrix om(3, std::vector<std::uint32_t>(4));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 4; ++j) om[i][j] = m(i, j);
            EXPECT_EQ(rank(m), oracle::rank_by_image(om, p));
        }
    }
}

TEST(Rank, InvariantUnderInvertibleFactors) {
    RationalField q;
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto a = random_matrix(q, 4, 4, rng, -1, 1);
        auto p = random_invertible(q, 4, rng);
        auto r = random_invertible(q, 4, rng);
        EXPECT_EQ(rank(p * a * r), rank(a));
    }
}

TEST(Invert, Examples) {
    FiniteField f7(FieldSpec::prime(7));
    auto d = Matrix<FiniteField>::identity(f7, 4);
    d(2, 2) = 2;
    d(3, 3) = 2;
    auto inv = invert(d);
    auto expected = Matrix<FiniteField>::identity(f7, 4);
    expected(2, 2) = 4;
    expected(3, 3) = 4;
    EXPECT_EQ(inv, expected);
    EXPECT_EQ(invert(Matrix<FiniteField>::identity(f7, 3)), Matrix<FiniteField>::identity(f7, 3));
    Matrix<FiniteField> sing(f7, 2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    EXPECT_THROW(invert(sing), SingularMatrixError);
}

TEST(Invert, RandomRoundTrip) {
    std::mt19937 rng(5);
    RationalField q;
    FiniteField f5(FieldSpec::prime(5));
    FiniteField f9(FieldSpec::parse("F9"));
    for (int t = 0; t < 100; ++t) {
        auto a = random_invertible(q, 4, rng);
        EXPECT_EQ(invert(a) * a, Matrix<RationalField>::identity(q, 4));
        auto b = random_invertible(f5, 4, rng);
        EXPECT_EQ(invert(b) * b, Matrix<FiniteField>::identity(f5, 4));
        Matrix<FiniteField> c(f9, 3, 3);
        std::uniform_int_distribution<std::uint32_t> d(0, 8);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) c(i, j) = d(rng);
        } while (rank(c) < 3);
        EXPECT_EQ(invert(c) * c, Matrix<FiniteField>::identity(f9, 3));
    }
}

TEST(Solve, ConsistentAndInconsistent) {
    RationalField q;
    Matrix<RationalField> m(q, 2, 2);
    m(0, 0) = 1;
    m(1, 0) = 2;
    std::vector<mpq_class> ok{1, 2}, bad{1, 3};
    auto x = solve(m, std::span<const mpq_class>(ok));
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], 1);
    EXPECT_FALSE(solve(m, std::span<const mpq_class>(bad)));
}

TEST(Nullspace, VectorsAreInKernel) {
    std::mt19937 rng(9);
    FiniteField f3(FieldSpec::prime(3));
    for (int t = 0; t < 30; ++t) {
        auto m = random_matrix(f3, 3, 5, rng);
        auto ns = nullspace(m);
        EXPECT_EQ(ns.size() + rank(m), 5u);
        for (const auto& v : ns)
            for (auto x : m.apply(v)) EXPECT_EQ(x, 0u);
    }
}
