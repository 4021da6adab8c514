#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "reflections.hpp"
#include "scene.hpp"

namespace sepinv {

/// Node (sigma, i) stands for H_{sigma,i} = {(x, sigma x) : x in X_i}.
struct GraphNode {
    std::size_t element;
    std::size_t component;
};

/// Weight is the codimension in X of the intersection; nullopt when empty.
struct GraphEdge {
    std::size_t a, b;
    FixedCodim weight;
};

struct ComponentGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;  // every unordered pair a < b, in lexicographic order

    [[nodiscard]] std::size_t node_index(std::size_t element, std::size_t component, std::size_t ncomp) const {
        return element * ncomp + component;
    }
};

/// Nodes are ordered element-major. The weight of (sigma, i) -- (tau, j) is
/// dim X - dim(X_i cap X_j)^rho with rho = tau^-1 sigma; each distinct
/// (rho, {i, j}) is computed once.
template <CoefficientField F>
ComponentGraph build_component_graph(const Scene<F>& scene) {
    const auto& comps = scene.components();
    const auto& group = scene.group();
    const std::size_t r = comps.size();
    ComponentGraph graph;
    for (std::size_t s = 0; s < group.order(); ++s)
        for (std::size_t i = 0; i < r; ++i) graph.nodes.push_back({s, i});

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, FixedCodim> memo;
    auto weight = [&](std::size_t rho, std::size_t i, std::size_t j) -> FixedCodim {
        // X^rho = X^(rho^-1), and the intersection is symmetric in i, j.
        const std::size_t key_rho = std::min(rho, group.inverse_index(rho));
        auto key = std::make_tuple(key_rho, std::min(i, j), std::max(i, j));
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Ideal<F> ideal = comps[i];
        if (j != i)
            for (const auto& f : comps[j].generators) ideal.generators.push_back(f);
        for (auto& f : fixed_locus_generators(group.element(key_rho))) ideal.generators.push_back(std::move(f));
        auto w = detail::codim_in(scene.dimension(), ideal, scene.caps());
        memo.emplace(key, w);
        return w;
    };

    for (std::size_t a = 0; a < graph.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < graph.nodes.size(); ++b) {
            const auto [s, i] = graph.nodes[a];
            const auto [t, j] = graph.nodes[b];
            const std::size_t rho = group.product_index(group.inverse_index(t), s);
            graph.edges.push_back({a, b, weight(rho, i, j)});
        }
    return graph;
}

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

/// True iff the edges of weight at most k connect all nodes.
inline bool connected_in_codim(const ComponentGraph& graph, unsigned k) {
    if (graph.nodes.size() <= 1) return true;
    detail::UnionFind uf(graph.nodes.size());
    std::size_t merges = 0;
    for (const auto& e : graph.edges)
        if (e.weight && *e.weight <= k && uf.unite(e.a, e.b)) ++merges;
    return merges + 1 == graph.nodes.size();
}

/// Graphviz rendering; pairs with empty intersection are left out.
inline std::string to_dot(const ComponentGraph& graph, const std::string& name = "vsep") {
    std::ostringstream out;
    auto label = [&](std::size_t v) {
        return "\"sigma" + std::to_string(graph.nodes[v].element) + "_X" + std::to_string(graph.nodes[v].component) +
               "\"";
    };
    out << "graph " << name << " {\n";
    for (std::size_t v = 0; v < graph.nodes.size(); ++v) out << "  " << label(v) << ";\n";
    for (const auto& e : graph.edges)
        if (e.weight) out << "  " << label(e.a) << " -- " << label(e.b) << " [label=\"" << *e.weight << "\"];\n";
    out << "}\n";
    return out.str();
}

struct CrosscheckReport {
    unsigned k = 0;
    bool vsep_connected = false;  // graph side
    bool x_connected = false;     // X-component graph with the trivial group
    bool generated = false;       // k-reflections generate G
    [[nodiscard]] bool rhs() const { return x_connected && generated; }
    [[nodiscard]] bool agree() const { return vsep_connected == rhs(); }
};

/// Evaluates both sides of the connectedness criterion for each k in ks.
/// The two sides share no intermediate results beyond the scene itself.
template <CoefficientField F>
std::vector<CrosscheckReport> crosscheck_connectedness(const Scene<F>& scene, const std::vector<unsigned>& ks) {
    const auto vsep = build_component_graph(scene);
    const auto trivial = scene.with_group(
        close_group(ActionElement<F>::identity_like(scene.group().element(0)), {}));
    const auto xgraph = build_component_graph(trivial);
    const auto codims = classify_reflections(scene);
    std::vector<CrosscheckReport> out;
    for (auto k : ks) {
        CrosscheckReport rep;
        rep.k = k;
        rep.vsep_connected = connected_in_codim(vsep, k);
        rep.x_connected = connected_in_codim(xgraph, k);
        rep.generated = is_generated_by(scene.group(), k_reflections(codims, k));
        out.push_back(rep);
    }
    return out;
}

template <CoefficientField F>
CrosscheckReport crosscheck_connectedness(const Scene<F>& scene, unsigned k) {
    return crosscheck_connectedness(scene, std::vector<unsigned>{k}).front();
}

/// True iff every group generator has a nonempty fixed locus on X.
template <CoefficientField F>
bool generators_have_fixed_points(const Scene<F>& scene) {
    for (const auto& g : scene.group().generators())
        if (!fixed_codim(g, scene)) return false;
    return true;
}

}  // namespace sepinv
