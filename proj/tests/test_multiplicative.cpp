#include <gtest/gtest.h>

#include "scene_files.hpp"
#include "sepinv/multiplicative.hpp"
#include "sepinv/separating.hpp"

using namespace sepinv;

namespace {

IntMatrix im(const std::vector<std::vector<long long>>& rows) { return IntMatrix::from_rows(rows); }

}  // namespace

TEST(ReflectionRank, Examples) {
    EXPECT_EQ(reflection_rank_lattice(IntMatrix::identity(3)), 0u);
    EXPECT_EQ(reflection_rank_lattice(im({{-1, 0}, {0, -1}})), 2u);
    EXPECT_EQ(reflection_rank_lattice(im({{0, 1}, {1, 0}})), 1u);
    EXPECT_EQ(reflection_rank_lattice(im({{0, -1}, {1, -1}})), 2u);
    EXPECT_THROW(reflection_rank_lattice(im({{2, 0}, {0, 1}})), InputError);
}

TEST(LatticeAction, Orders) {
    EXPECT_EQ(LatticeAction(1, {im({{-1}})}).order(), 2u);
    EXPECT_EQ(LatticeAction(2, {im({{0, -1}, {1, -1}})}).order(), 3u);
    EXPECT_EQ(LatticeAction(2, {im({{0, 1}, {1, 0}}), im({{-1, 0}, {0, 1}})}).order(), 8u);
    EXPECT_THROW(LatticeAction(2, {im({{1, 1}, {0, 1}})}, 50), ResourceCapError);
}

TEST(TorusScene, SignActionSwapsCoordinates) {
    FiniteField f5(FieldSpec::prime(5));
    LatticeAction sign(1, {im({{-1}})});
    auto s = torus_scene(sign, f5);
    ASSERT_EQ(s.group().order(), 2u);
    EXPECT_EQ(s.dimension(), 1u);
    const auto& g = s.group().element(1);
    EXPECT_EQ(act(g, s.parse("x1")), s.parse("y1"));
    EXPECT_EQ(act(g, s.parse("y1")), s.parse("x1"));
    std::vector<std::uint32_t> one{1, 1};
    for (const auto& c : g.coordinate_images()) EXPECT_EQ(c.evaluate(one), 1u);
    EXPECT_EQ(fixed_codim(g, s), 1u);
}

TEST(TorusScene, OrbitSums) {
    RationalField q;
    LatticeAction sign(1, {im({{-1}})});
    EXPECT_EQ(orbit_sum(sign, q, {1}), parse_polynomial(q, 2, "x1 + x2"));
    EXPECT_EQ(orbit_sum(sign, q, {0}), parse_polynomial(q, 2, "1"));
    LatticeAction swap(2, {im({{0, 1}, {1, 0}})});
    EXPECT_EQ(orbit_sum(swap, q, {2, 0}), parse_polynomial(q, 4, "x1^2 + x2^2"));
    EXPECT_EQ(orbit_sum(swap, q, {1, -1}), parse_polynomial(q, 4, "x1*x4 + x2*x3"));
    EXPECT_THROW(orbit_sum(swap, q, {1}), InputError);
}

TEST(TorusScene, OrbitSumsAreInvariant) {
    FiniteField f7(FieldSpec::prime(7));
    LatticeAction a(2, {im({{0, -1}, {1, -1}})});
    auto s = torus_scene(a, f7);
    for (const auto& e : std::vector<std::vector<long long>>{{1, 0}, {2, 1}, {-1, 3}}) {
        auto f = laurent_reduce(orbit_sum(a, f7, e));
        EXPECT_TRUE(s.is_invariant_on_x(f));
    }
}

TEST(LatticeCrosscheck, Examples) {
    FiniteField f5(FieldSpec::prime(5));
    FiniteField f7(FieldSpec::prime(7));
    LatticeAction sign(1, {im({{-1}})});
    auto id = lattice_height_crosscheck(sign, IntMatrix::identity(1), f5);
    EXPECT_EQ(id.lattice_rank, 0u);
    EXPECT_TRUE(id.agree());
    auto neg = lattice_height_crosscheck(sign, im({{-1}}), f5);
    EXPECT_EQ(neg.lattice_rank, 1u);
    EXPECT_EQ(neg.torus_codim, 1u);
    EXPECT_TRUE(neg.agree());
    LatticeAction swap(2, {im({{0, 1}, {1, 0}})});
    auto sw = lattice_height_crosscheck(swap, im({{0, 1}, {1, 0}}), f7);
    EXPECT_EQ(sw.lattice_rank, 1u);
    EXPECT_TRUE(sw.agree());
}

TEST(LatticeCrosscheck, AllElementsOfSmallGroups) {
    FiniteField f7(FieldSpec::prime(7));
    const std::vector<LatticeAction> actions{
        LatticeAction(2, {im({{0, -1}, {1, -1}})}),
        LatticeAction(2, {im({{0, 1}, {1, 0}}), im({{-1, 0}, {0, 1}})}),
        LatticeAction(3, {im({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})}),
        LatticeAction(3, {im({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), im({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})}),
    };
    for (const auto& a : actions)
        for (const auto& sigma : a.elements()) {
            auto r = lattice_height_crosscheck(a, sigma, f7);
            EXPECT_TRUE(r.agree()) << sigma.key() << " rank " << r.lattice_rank << " codim "
                                   << to_string(r.torus_codim);
        }
}

TEST(LatticeCrosscheck, ConjugationInvariantRank) {
    const std::vector<IntMatrix> sigmas{im({{0, -1}, {1, -1}}), im({{0, 1}, {1, 0}}), im({{-1, 0}, {0, 1}})};
    const std::vector<IntMatrix> conj{im({{1, 1}, {0, 1}}), im({{2, 1}, {1, 1}}), im({{1, 0}, {3, 1}})};
    for (const auto& s : sigmas)
        for (const auto& p : conj) EXPECT_EQ(reflection_rank_lattice(p * s * p.inverse()), reflection_rank_lattice(s));
}

TEST(TorusScene, SignSceneFile) {
    auto s = finite_scene("torus_sign_f5.json");
    EXPECT_EQ(min_reflection_k(s), 1u);
    EXPECT_EQ(verify_separating_groebner(s, s.candidates()).verdict, SeparatingVerdict::separating);
    auto pts = verify_separating_points(s, s.candidates(), {1, 2});
    EXPECT_EQ(pts.verdict, PointsVerdict::no_violation_found);
    ASSERT_EQ(pts.points_per_field.size(), 2u);
    EXPECT_EQ(pts.points_per_field[0].second, 4u);
    EXPECT_EQ(pts.points_per_field[1].second, 24u);
}
