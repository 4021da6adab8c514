#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "action.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "parse.hpp"

namespace sepinv {

/// User assertions about X; recorded, never machine-checked.
enum class Hypothesis { connected, cohen_macaulay, normal, irreducible };

inline std::string to_string(Hypothesis h) {
    switch (h) {
        case Hypothesis::connected: return "connected";
        case Hypothesis::cohen_macaulay: return "cohen_macaulay";
        case Hypothesis::normal: return "normal";
        case Hypothesis::irreducible: return "irreducible";
    }
    return "?";
}

inline Hypothesis parse_hypothesis(const std::string& s) {
    if (s == "connected") return Hypothesis::connected;
    if (s == "cohen_macaulay" || s == "cohen-macaulay") return Hypothesis::cohen_macaulay;
    if (s == "normal") return Hypothesis::normal;
    if (s == "irreducible") return Hypothesis::irreducible;
    throw InputError("unknown hypothesis flag '" + s + "'");
}

template <CoefficientField F>
struct SceneData {
    F field{};
    std::size_t ambient = 0;
    std::vector<std::string> names;               // defaults to x1..xn
    std::vector<Polynomial<F>> variety;           // empty: X is affine space
    std::optional<std::vector<std::vector<Polynomial<F>>>> components;
    FiniteGroup<F> group;
    std::vector<Polynomial<F>> invariants;
    std::vector<std::string> invariant_names;     // defaults to f1..fm
    std::vector<Polynomial<F>> candidates;
    std::set<Hypothesis> flags;
    GroebnerCaps caps{};
};

/// A finite group acting on an affine variety X in A^n, together with
/// generating invariants. Construction validates the input.
template <CoefficientField F>
class Scene {
public:
    explicit Scene(SceneData<F> data) : d_(std::move(data)) {
        if (d_.ambient == 0) throw InputError("scene needs at least one variable");
        if (d_.ambient > kMaxVariables / 2)
            throw InputError("ambient dimension " + std::to_string(d_.ambient) + " exceeds the supported " +
                             std::to_string(kMaxVariables / 2));
        if (d_.names.empty()) d_.names = default_names(d_.ambient);
        if (d_.names.size() != d_.ambient) throw InputError("variable name count differs from ambient dimension");
        if (d_.group.order() == 0) d_.group = trivial_group();
        if (d_.group.dimension() != d_.ambient)
            throw InputError("group acts on " + std::to_string(d_.group.dimension()) + " coordinates, scene has " +
                             std::to_string(d_.ambient));
        for (const auto* list : {&d_.variety, &d_.invariants, &d_.candidates})
            for (const auto& f : *list)
                if (f.nvars() != d_.ambient) throw InputError("polynomial ring size differs from ambient dimension");
        std::erase_if(d_.variety, [](const auto& f) { return f.is_zero(); });

        variety_gb_ = std::make_shared<GroebnerBasis<F>>(buchberger(variety(), MonomialOrder::grevlex(), d_.caps));
        auto dim = sepinv::dimension(*variety_gb_);
        if (!dim) throw InputError("the variety is empty");
        dim_ = *dim;

        for (const auto& f : d_.variety)
            for (const auto& g : d_.group.generators())
                if (!variety_gb_->contains(act(g, f)))
                    throw InputError("the variety ideal is not stable under the group");

        if (d_.invariant_names.empty())
            for (std::size_t i = 0; i < d_.invariants.size(); ++i) d_.invariant_names.push_back("f" + std::to_string(i + 1));
        if (d_.invariant_names.size() != d_.invariants.size())
            throw InputError("invariant name count differs from invariant count");
        for (std::size_t i = 0; i < d_.invariants.size(); ++i)
            if (!is_invariant_on_x(d_.invariants[i]))
                throw NonInvariantError("invariant " + d_.invariant_names[i] + " is not fixed by the group");
        for (const auto& f : d_.candidates)
            if (!is_invariant_on_x(f)) throw NonInvariantError("candidate " + f.to_string(d_.names) + " is not invariant");

        if (d_.components) {
            if (d_.components->empty()) throw InputError("component list is empty");
            for (const auto& comp : *d_.components) {
                Ideal<F> ci{d_.field, d_.ambient, comp};
                auto gb = buchberger(ci, MonomialOrder::grevlex(), d_.caps);
                for (const auto& f : d_.variety)
                    if (!gb.contains(f)) throw InputError("a component ideal does not contain the variety ideal");
                auto cd = sepinv::dimension(gb);
                if (!cd) throw InputError("a component is empty");
                if (*cd > dim_) throw InputError("a component has larger dimension than the variety");
                component_ideals_.push_back(std::move(ci));
            }
        } else if (d_.variety.empty() || d_.flags.contains(Hypothesis::irreducible)) {
            component_ideals_.push_back(variety());
        }
    }

    [[nodiscard]] const F& field() const { return d_.field; }
    [[nodiscard]] std::size_t ambient() const { return d_.ambient; }
    [[nodiscard]] const std::vector<std::string>& names() const { return d_.names; }
    [[nodiscard]] Ideal<F> variety() const { return Ideal<F>{d_.field, d_.ambient, d_.variety}; }
    [[nodiscard]] const std::vector<Polynomial<F>>& variety_generators() const { return d_.variety; }
    [[nodiscard]] const GroebnerBasis<F>& variety_basis() const { return *variety_gb_; }
    [[nodiscard]] unsigned dimension() const { return dim_; }
    [[nodiscard]] bool is_affine_space() const { return d_.variety.empty(); }
    [[nodiscard]] bool has_components() const { return !component_ideals_.empty(); }
    [[nodiscard]] const std::vector<Ideal<F>>& components() const {
        if (component_ideals_.empty())
            throw InputError("scene has no component decomposition; supply components or the irreducible flag");
        return component_ideals_;
    }
    [[nodiscard]] const FiniteGroup<F>& group() const { return d_.group; }
    [[nodiscard]] const std::vector<Polynomial<F>>& invariants() const { return d_.invariants; }
    [[nodiscard]] const std::vector<std::string>& invariant_names() const { return d_.invariant_names; }
    [[nodiscard]] const std::vector<Polynomial<F>>& candidates() const { return d_.candidates; }
    [[nodiscard]] const std::set<Hypothesis>& flags() const { return d_.flags; }
    [[nodiscard]] bool has_flag(Hypothesis h) const { return d_.flags.contains(h); }
    [[nodiscard]] const GroebnerCaps& caps() const { return d_.caps; }
    [[nodiscard]] const SceneData<F>& data() const { return d_; }

    /// Same X and group data with a different group.
    [[nodiscard]] Scene with_group(FiniteGroup<F> group) const {
        auto d = d_;
        d.group = std::move(group);
        d.invariants.clear();
        d.invariant_names.clear();
        d.candidates.clear();
        return Scene(std::move(d));
    }

    /// Invariance on X: g.f - f lies in I_X for every generator g.
    [[nodiscard]] bool is_invariant_on_x(const Polynomial<F>& f) const {
        for (const auto& g : d_.group.generators()) {
            auto diff = act(g, f) - f;
            if (diff.is_zero()) continue;
            if (d_.variety.empty() || !variety_gb_->contains(diff)) return false;
        }
        return true;
    }

    [[nodiscard]] Polynomial<F> parse(std::string_view text) const {
        return PolynomialParser<F>(d_.field, d_.names).parse(text);
    }

    [[nodiscard]] std::string format(const Polynomial<F>& f) const { return f.to_string(d_.names); }

private:
    FiniteGroup<F> trivial_group() const {
        return close_group(ActionElement<F>::linear(Matrix<F>::identity(d_.field, d_.ambient)), {});
    }

    SceneData<F> d_;
    std::shared_ptr<GroebnerBasis<F>> variety_gb_;
    unsigned dim_ = 0;
    std::vector<Ideal<F>> component_ideals_;
};

}  // namespace sepinv
