#pragma once

// Random small linear scenes over prime fields, used by property tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "sepinv/scene.hpp"

namespace randscene {

using sepinv::FiniteField;
using Mat = sepinv::Matrix<FiniteField>;

inline Mat random_invertible(const FiniteField& f, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.size() - 1);
    while (true) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        if (sepinv::rank(m) == n) return m;
    }
}

// A generator of small order: signed permutation, diagonal, transvection or
// pseudo-reflection.
inline Mat small_order_element(const FiniteField& f, std::size_t n, std::mt19937& rng, bool monomial_only) {
    std::uniform_int_distribution<int> kind(0, monomial_only ? 1 : 3);
    std::uniform_int_distribution<std::uint32_t> unit(1, f.size() - 1);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    Mat m = Mat::identity(f, n);
    switch (kind(rng)) {
        case 0: {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            Mat p(f, n, n);
            for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = std::bernoulli_distribution(0.3)(rng) ? f.neg(1) : 1;
            return p;
        }
        case 1:
            for (std::size_t i = 0; i < n; ++i)
                if (std::bernoulli_distribution(0.5)(rng)) m(i, i) = unit(rng);
            return m;
        case 2: {
            std::size_t i = idx(rng), j = idx(rng);
            if (i == j) j = (j + 1) % n;
            if (n > 1) m(i, j) = unit(rng);
            return m;
        }
        default:
            m(idx(rng), idx(rng)) = unit(rng);
            return m;
    }
}

struct Generated {
    sepinv::Scene<FiniteField> scene;
    std::string description;
};

/// A scene with |G| <= max_order on A^n, or (sometimes) on a union of
/// coordinate subspaces permuted by a monomial group.
inline std::optional<Generated> random_linear_scene(std::mt19937& rng, std::size_t max_order = 24) {
    const std::uint32_t p = std::bernoulli_distribution(0.5)(rng) ? 3 : 5;
    const FiniteField f(sepinv::FieldSpec::prime(p));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const bool reducible = n >= 2 && std::bernoulli_distribution(0.3)(rng);
    const std::size_t ngens = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const bool conjugate = !reducible && std::bernoulli_distribution(0.5)(rng);
    const Mat pc = conjugate ? random_invertible(f, n, rng) : Mat::identity(f, n);
    const Mat pinv = sepinv::invert(pc);
    std::vector<sepinv::ActionElement<FiniteField>> gens;
    std::vector<Mat> raw;
    for (std::size_t g = 0; g < ngens; ++g) {
        raw.push_back(small_order_element(f, n, rng, reducible));
        gens.push_back(sepinv::ActionElement<FiniteField>::linear(pc * raw.back() * pinv));
    }
    sepinv::FiniteGroup<FiniteField> group;
    try {
        group = sepinv::close_group(sepinv::ActionElement<FiniteField>::linear(Mat::identity(f, n)), gens, max_order);
    } catch (const sepinv::ResourceCapError&) {
        return std::nullopt;
    }
    sepinv::SceneData<FiniteField> d;
    d.field = f;
    d.ambient = n;
    d.group = group;
    std::string desc = "F" + std::to_string(p) + " n=" + std::to_string(n) + " |G|=" + std::to_string(group.order());
    if (reducible) {
        // Orbit of the coordinate subspace {x_i = 0 for i in S} under the
        // permutation part of the group.
        const std::size_t s = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        std::vector<std::size_t> base(n);
        std::iota(base.begin(), base.end(), std::size_t{0});
        std::shuffle(base.begin(), base.end(), rng);
        std::set<std::size_t> start(base.begin(), base.begin() + static_cast<long>(s));
        std::set<std::set<std::size_t>> orbit{start};
        std::vector<std::set<std::size_t>> todo{start};
        while (!todo.empty()) {
            auto cur = todo.back();
            todo.pop_back();
            for (const auto& m : raw) {
                std::set<std::size_t> img;
                for (std::size_t i = 0; i < n; ++i)
                    for (auto c : cur)
                        if (m(i, c) != 0) img.insert(i);
                if (orbit.insert(img).second) todo.push_back(img);
            }
        }
        std::vector<std::vector<sepinv::Polynomial<FiniteField>>> comps;
        std::vector<sepinv::Polynomial<FiniteField>> product{sepinv::Polynomial<FiniteField>::constant(f, n, 1)};
        for (const auto& zero_set : orbit) {
            std::vector<sepinv::Polynomial<FiniteField>> comp;
            for (auto i : zero_set) comp.push_back(sepinv::Polynomial<FiniteField>::variable(f, n, i));
            std::vector<sepinv::Polynomial<FiniteField>> next;
            for (const auto& a : product)
                for (const auto& b : comp) next.push_back(a * b);
            product = std::move(next);
            comps.push_back(std::move(comp));
        }
        d.variety = product;
        d.components = comps;
        desc += " components=" + std::to_string(comps.size());
    }
    return Generated{sepinv::Scene<FiniteField>(std::move(d)), desc};
}

}  // namespace randscene
