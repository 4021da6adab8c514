#include <gtest/gtest.h>

#include <random>

#include "random_scenes.hpp"
#include "scene_files.hpp"
#include "sepinv/sepvariety.hpp"

using namespace sepinv;

TEST(ComponentGraph, TwoPlanes) {
    auto s = finite_scene("two_planes_f7.json");
    auto g = build_component_graph(s);
    ASSERT_EQ(g.nodes.size(), 4u);
    ASSERT_EQ(g.edges.size(), 6u);
    for (const auto& e : g.edges) EXPECT_EQ(e.weight, 2u);
    EXPECT_FALSE(connected_in_codim(g, 1));
    EXPECT_TRUE(connected_in_codim(g, 2));

    auto r1 = crosscheck_connectedness(s, 1u);
    EXPECT_FALSE(r1.vsep_connected);
    EXPECT_FALSE(r1.rhs());
    auto r2 = crosscheck_connectedness(s, 2u);
    EXPECT_TRUE(r2.vsep_connected);
    EXPECT_TRUE(r2.x_connected);
    EXPECT_TRUE(r2.generated);
}

TEST(ComponentGraph, HypersurfaceSingleEdge) {
    auto s = finite_scene("hypersurface_f7.json");
    auto g = build_component_graph(s);
    ASSERT_EQ(g.nodes.size(), 2u);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0].weight, 3u);
    for (unsigned k = 0; k <= 3; ++k) {
        auto rep = crosscheck_connectedness(s, k);
        EXPECT_EQ(rep.vsep_connected, k >= 3);
        EXPECT_TRUE(rep.agree());
    }
}

TEST(ComponentGraph, TranslationHasNoEdges) {
    auto s = finite_scene("translation_f3.json");
    auto g = build_component_graph(s);
    EXPECT_EQ(g.nodes.size(), 3u);
    for (const auto& e : g.edges) EXPECT_FALSE(e.weight.has_value());
    EXPECT_FALSE(connected_in_codim(g, 1));
    EXPECT_FALSE(generators_have_fixed_points(s));
    const auto dot = to_dot(g);
    EXPECT_EQ(dot.find("--"), std::string::npos);
}

TEST(ToDot, LabelsAndWeights) {
    auto s = finite_scene("two_planes_f7.json");
    const auto dot = to_dot(build_component_graph(s));
    EXPECT_EQ(dot.rfind("graph vsep {\n", 0), 0u);
    EXPECT_NE(dot.find("\"sigma0_X0\";"), std::string::npos);
    EXPECT_NE(dot.find("\"sigma1_X1\";"), std::string::npos);
    EXPECT_NE(dot.find("\"sigma0_X0\" -- \"sigma0_X1\" [label=\"2\"];"), std::string::npos);
    EXPECT_EQ(dot.back(), '\n');
}

TEST(ConnectedInCodim, Basics) {
    ComponentGraph single;
    single.nodes.push_back({0, 0});
    EXPECT_TRUE(connected_in_codim(single, 0));
    ComponentGraph two;
    two.nodes = {{0, 0}, {1, 0}};
    two.edges = {{0, 1, std::nullopt}};
    EXPECT_FALSE(connected_in_codim(two, 100));
    two.edges = {{0, 1, 2u}};
    EXPECT_FALSE(connected_in_codim(two, 1));
    EXPECT_TRUE(connected_in_codim(two, 2));
}

TEST(ComponentGraph, TrivialGroupGivesComponentIntersections) {
    auto s = finite_scene("two_planes_f7.json");
    auto t = s.with_group(close_group(ActionElement<FiniteField>::identity_like(s.group().element(0)), {}));
    auto g = build_component_graph(t);
    ASSERT_EQ(g.nodes.size(), 2u);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0].weight, 2u);
}

class RandomScenes : public ::testing::TestWithParam<unsigned> {};

TEST_P(RandomScenes, CrosscheckAgreesAndIsMonotone) {
    std::mt19937 rng(GetParam());
    int checked = 0;
    while (checked < 10) {
        auto gen = randscene::random_linear_scene(rng, 12);
        if (!gen) continue;
        const auto& s = gen->scene;
        std::vector<unsigned> ks;
        for (unsigned k = 0; k <= s.dimension(); ++k) ks.push_back(k);
        const auto reps = crosscheck_connectedness(s, ks);
        bool prev = false;
        for (const auto& rep : reps) {
            EXPECT_TRUE(rep.agree()) << gen->description << " k=" << rep.k;
            if (prev) {
                EXPECT_TRUE(rep.vsep_connected) << gen->description;
            }
            prev = rep.vsep_connected;
        }
        // In top codimension: X connected and G generated by elements with fixed points.
        const auto codims = classify_reflections(s);
        std::vector<std::size_t> with_fixed;
        for (std::size_t i = 0; i < codims.size(); ++i)
            if (codims[i]) with_fixed.push_back(i);
        EXPECT_EQ(reps.back().vsep_connected, reps.back().x_connected && is_generated_by(s.group(), with_fixed))
            << gen->description;
        ++checked;
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomScenes, ::testing::Values(101u, 202u, 303u, 404u));

TEST(ComponentGraph, TopCodimNeedsFixedPoints) {
    auto s = finite_scene("translation_f3.json");
    auto rep = crosscheck_connectedness(s, s.dimension());
    EXPECT_FALSE(rep.vsep_connected);
    EXPECT_TRUE(rep.x_connected);
}
