#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sepinv/groebner.hpp"
#include "sepinv/parse.hpp"

using namespace sepinv;

namespace {

template <class F>
Ideal<F> ideal_of(const F& f, std::size_t n, std::initializer_list<const char*> gens) {
    Ideal<F> I{f, n, {}};
    for (auto g : gens) I.generators.push_back(parse_polynomial(f, n, g));
    return I;
}

template <class F>
Polynomial<F> spoly(const Polynomial<F>& a, const Polynomial<F>& b, const MonomialOrder& ord) {
    auto lead = [&](const Polynomial<F>& p) {
        auto best = p.terms().front();
        for (const auto& t : p.terms())
            if (ord.greater(t.mono, best.mono)) best = t;
        return best;
    };
    const auto ta = lead(a), tb = lead(b);
    const auto l = Monomial::lcm(ta.mono, tb.mono);
    const auto& f = a.field();
    return a.times_monomial(l / ta.mono, f.inv(ta.coef)) - b.times_monomial(l / tb.mono, f.inv(tb.coef));
}

// Buchberger criterion checked from outside the engine.
template <class F>
void expect_groebner(const GroebnerBasis<F>& gb) {
    const auto basis = gb.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            EXPECT_TRUE(gb.normal_form(spoly(basis[i], basis[j], gb.order())).is_zero());
    const auto lms = gb.leading_monomials();
    for (std::size_t i = 0; i < lms.size(); ++i)
        for (std::size_t j = 0; j < lms.size(); ++j)
            if (i != j) {
                EXPECT_FALSE(lms[i].divides(lms[j]));
            }
}

Polynomial<RationalField> monomial_poly(const std::vector<unsigned>& e) {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
    return Polynomial<RationalField>::monomial(RationalField{}, e.size(), m, 1);
}

}  // namespace

TEST(Buchberger, Examples) {
    RationalField q;
    auto gb = buchberger(ideal_of(q, 2, {"x1", "x2"}));
    EXPECT_EQ(gb.size(), 2u);
    auto lex = buchberger(ideal_of(q, 1, {"x1^2 - 1", "x1 - 1"}), MonomialOrder::lex());
    ASSERT_EQ(lex.size(), 1u);
    EXPECT_EQ(lex.basis()[0], parse_polynomial(q, 1, "x1 - 1"));

    FiniteField f7(FieldSpec::prime(7));
    auto planes = buchberger(ideal_of(f7, 4, {"x1^2 - x3^2", "x2^2 - x4^2", "x1*x2 - x3*x4", "x1*x4 - x2*x3"}));
    expect_groebner(planes);
    EXPECT_EQ(dimension(planes), 2u);
}

TEST(Buchberger, CriterionHoldsOnRandomIdeals) {
    std::mt19937 rng(1);
    FiniteField f5(FieldSpec::prime(5));
    std::uniform_int_distribution<int> c(0, 4), e(0, 1);
    for (int t = 0; t < 40; ++t) {
        Ideal<FiniteField> I{f5, 3, {}};
        for (int g = 0; g < 3; ++g) {
            std::vector<Term<FiniteField>> ts;
            for (int k = 0; k < 3; ++k) {
                Monomial m;
                for (int i = 0; i < 3; ++i) m.set(i, e(rng));
                ts.push_back({m, f5.from_int(c(rng))});
            }
            I.generators.push_back(Polynomial<FiniteField>::from_terms(f5, 3, ts));
        }
        for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
            auto gb = buchberger(I, ord);
            expect_groebner(gb);
            for (const auto& g : I.generators) EXPECT_TRUE(gb.contains(g));
        }
    }
}

TEST(Buchberger, CriterionHoldsOnHigherDegreeGrevlex) {
    std::mt19937 rng(4);
    FiniteField f7(FieldSpec::prime(7));
    std::uniform_int_distribution<int> c(1, 6), e(0, 2);
    for (int t = 0; t < 40; ++t) {
        Ideal<FiniteField> I{f7, 3, {}};
        for (int g = 0; g < 3; ++g) {
            std::vector<Term<FiniteField>> ts;
            for (int k = 0; k < 3; ++k) {
                Monomial m;
                for (int i = 0; i < 3; ++i) m.set(i, e(rng));
                ts.push_back({m, f7.from_int(c(rng))});
            }
            I.generators.push_back(Polynomial<FiniteField>::from_terms(f7, 3, ts));
        }
        auto gb = buchberger(I, MonomialOrder::grevlex());
        expect_groebner(gb);
        for (const auto& g : I.generators) EXPECT_TRUE(gb.contains(g));
    }
}

TEST(Buchberger, CapsRaiseRecoverableError) {
    RationalField q;
    GroebnerCaps caps;
    caps.max_basis = 2;
    EXPECT_THROW(buchberger(ideal_of(q, 3, {"x1*x2 - x3^2", "x2*x3 - x1^2", "x1*x3 - x2^2", "x1^3 - x2^3 + x3"}),
                            MonomialOrder::grevlex(), caps),
                 ResourceCapError);
}

TEST(NormalForm, Examples) {
    FiniteField f7(FieldSpec::prime(7));
    auto I = ideal_of(f7, 4, {"x1^2 - x3^2", "x2^2 - x4^2", "x1*x2 - x3*x4", "x1*x4 - x2*x3"});
    auto gb = buchberger(I);
    for (const auto& g : gb.basis()) EXPECT_TRUE(normal_form(g, gb).is_zero());
    EXPECT_TRUE(normal_form(parse_polynomial(f7, 4, "x3^2 - x1^2"), gb).is_zero());
    RationalField q;
    auto gx = buchberger(ideal_of(q, 1, {"x1"}));
    EXPECT_EQ(normal_form(parse_polynomial(q, 1, "1"), gx), parse_polynomial(q, 1, "1"));
}

TEST(NormalForm, IdempotentAndAdditive) {
    std::mt19937 rng(4);
    RationalField q;
    auto gb = buchberger(ideal_of(q, 3, {"x1^2 - x2*x3", "x2^2 - x1*x3 + 1"}));
    std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
    for (int t = 0; t < 30; ++t) {
        auto rnd = [&] {
            std::vector<Term<RationalField>> ts;
            for (int k = 0; k < 4; ++k) {
                Monomial m;
                for (int i = 0; i < 3; ++i) m.set(i, e(rng));
                ts.push_back({m, q.from_int(c(rng))});
            }
            return Polynomial<RationalField>::from_terms(q, 3, ts);
        };
        auto f = rnd(), g = rnd();
        EXPECT_EQ(normal_form(normal_form(f, gb), gb), normal_form(f, gb));
        EXPECT_EQ(normal_form(f + g, gb), normal_form(normal_form(f, gb) + normal_form(g, gb), gb));
    }
}

TEST(Dimension, Examples) {
    RationalField q;
    auto seg = ideal_of(q, 6, {"x1*x5 - x2*x4", "x1*x6 - x3*x4", "x2*x6 - x3*x5"});
    EXPECT_EQ(dimension(seg), 4u);
    FiniteField f7(FieldSpec::prime(7));
    EXPECT_EQ(dimension(ideal_of(f7, 4, {"x1^3 + x2*x3 + x3*x4 + x4^2", "x2", "x3", "x4"})), 0u);
    EXPECT_FALSE(dimension(ideal_of(q, 2, {"1"})).has_value());
    EXPECT_EQ(dimension(Ideal<RationalField>{q, 3, {}}), 3u);
}

TEST(Dimension, MonomialIdealsMatchStaircaseOracle) {
    std::mt19937 rng(8);
    std::uniform_int_distribution<unsigned> e(0, 2), ng(1, 4), nv(1, 5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = nv(rng);
        std::vector<oracle::Exponents> gens;
        Ideal<RationalField> I{RationalField{}, n, {}};
        for (unsigned g = ng(rng); g-- > 0;) {
            oracle::Exponents ex(n);
            for (auto& v : ex) v = e(rng) * (e(rng) > 0);
            gens.push_back(ex);
            I.generators.push_back(monomial_poly(ex));
        }
        const auto d = dimension(I);
        const int expected = oracle::monomial_dimension(gens, n);
        if (expected < 0)
            EXPECT_FALSE(d.has_value());
        else
            EXPECT_EQ(d, static_cast<unsigned>(expected));
        EXPECT_EQ(dimension(I, MonomialOrder::lex()), d);
    }
}

TEST(Dimension, OrderIndependent) {
    FiniteField f7(FieldSpec::prime(7));
    for (auto I : {ideal_of(f7, 4, {"x1^2 - x3^2", "x2^2 - x4^2", "x1*x2 - x3*x4", "x1*x4 - x2*x3"}),
                   ideal_of(f7, 4, {"x1^3 + x2*x3 + x3*x4 + x4^2"}),
                   ideal_of(f7, 3, {"x1*x2 - x3", "x2^2 - x1"})}) {
        EXPECT_EQ(dimension(I), dimension(I, MonomialOrder::lex()));
    }
}

TEST(RadicalMember, Examples) {
    RationalField q;
    EXPECT_TRUE(radical_member(parse_polynomial(q, 1, "x1"), ideal_of(q, 1, {"x1^2"})));
    EXPECT_FALSE(radical_member(parse_polynomial(q, 1, "x1 + 1"), ideal_of(q, 1, {"x1^2"})));
    EXPECT_TRUE(radical_member(parse_polynomial(q, 2, "x1*x2"), ideal_of(q, 2, {"x1^2*x2^3"})));
    // Needs the Rabinowitsch step: x1 x2 has no power below the cube in I.
    EXPECT_TRUE(radical_member(parse_polynomial(q, 2, "x1 + x2"), ideal_of(q, 2, {"x1^3", "x2^3"})));
    EXPECT_FALSE(radical_member(parse_polynomial(q, 2, "x1"), ideal_of(q, 2, {"x1*x2"})));
}

TEST(RadicalMember, MonomialIdealsMatchSquarefreeOracle) {
    std::mt19937 rng(12);
    std::uniform_int_distribution<unsigned> e(0, 3), nv(1, 4), ng(1, 3), nt(1, 2);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = nv(rng);
        std::vector<oracle::Exponents> gens, terms;
        Ideal<RationalField> I{RationalField{}, n, {}};
        for (unsigned g = ng(rng); g-- > 0;) {
            oracle::Exponents ex(n);
            for (auto& v : ex) v = e(rng);
            if (std::all_of(ex.begin(), ex.end(), [](unsigned v) { return v == 0; })) ex[0] = 1;
            gens.push_back(ex);
            I.generators.push_back(monomial_poly(ex));
        }
        Polynomial<RationalField> f(RationalField{}, n);
        for (unsigned k = nt(rng); k-- > 0;) {
            oracle::Exponents ex(n);
            for (auto& v : ex) v = e(rng) / 2;
            terms.push_back(ex);
            f += monomial_poly(ex);
        }
        terms.clear();
        for (const auto& tm : f.terms()) {
            oracle::Exponents ex(n);
            for (std::size_t i = 0; i < n; ++i) ex[i] = tm.mono[i];
            terms.push_back(ex);
        }
        EXPECT_EQ(radical_member(f, I), oracle::in_monomial_radical(gens, terms)) << f.to_string(default_names(n));
    }
}

TEST(SingularLocus, Examples) {
    RationalField q;
    auto seg = ideal_of(q, 6, {"x1*x5 - x2*x4", "x1*x6 - x3*x4", "x2*x6 - x3*x5"});
    EXPECT_EQ(dimension(singular_locus_ideal(seg, 2)), 0u);

    FiniteField f7(FieldSpec::prime(7));
    auto hyp = ideal_of(f7, 4, {"x1^3 + x2*x3 + x3*x4 + x4^2"});
    auto sing = singular_locus_ideal(hyp, 1);
    ASSERT_EQ(sing.generators.size(), 5u);
    const auto names = default_names(4);
    EXPECT_EQ(sing.generators[1].to_string(names), "3*x1^2");
    EXPECT_EQ(sing.generators[2].to_string(names), "x3");
    EXPECT_EQ(sing.generators[3].to_string(names), "x2 + x4");
    EXPECT_EQ(sing.generators[4].to_string(names), "x3 + 2*x4");
    EXPECT_EQ(dimension(sing), 0u);

    EXPECT_FALSE(dimension(singular_locus_ideal(ideal_of(q, 3, {"x1"}), 1)).has_value());
}

TEST(Determinant, MatchesExpansion) {
    RationalField q;
    const std::size_t n = 2;
    std::vector<std::vector<Polynomial<RationalField>>> m{
        {parse_polynomial(q, n, "x1"), parse_polynomial(q, n, "x2")},
        {parse_polynomial(q, n, "x2"), parse_polynomial(q, n, "x1 + 1")}};
    EXPECT_EQ(determinant(m, q, n), parse_polynomial(q, n, "x1^2 + x1 - x2^2"));
}
