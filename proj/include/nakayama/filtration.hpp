#pragma once

#include <optional>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/ext_nat.hpp"
#include "nakayama/module.hpp"

namespace nakayama {

/// Socle data of a cyclic Nakayama algebra and the arcs cut out by it.
struct FiltrationData {
    std::vector<int> socles;    ///< S: socle vertices of the indecomposable projectives, ascending
    std::vector<int> shifted;   ///< S': socles + 1 (cyclically), ascending
    std::vector<Module> arcs;   ///< B: minimal modules with top in S' and socle in S, ordered by top
    std::vector<Module> nabla;  ///< the dual arcs, top = relation start + 1, socle = next relation start

    /// Index (0-based) of the arc whose top is `vertex`, or -1 if vertex is not in S'.
    int arc_with_top(int vertex) const;
};

FiltrationData filtration_data(const Algebra& algebra);

/// The syzygy filtered algebra: one vertex per arc. When some arcs are projective the
/// cycle breaks after each of them and the result is a product of linear algebras.
struct EpsilonResult {
    struct Component {
        Algebra algebra;
        std::vector<int> arcs;  ///< arc index (0-based) of each local vertex
    };

    FiltrationData source;
    std::vector<Component> components;
    std::vector<int> breaks;  ///< arc indices j with arc j projective

    bool is_cyclic() const { return components.size() == 1 && components.front().algebra.is_cyclic(); }
    int vertices() const;

    /// (component, local vertex) of arc j.
    std::pair<std::size_t, int> locate(int arc) const;
};

EpsilonResult epsilon(const Algebra& algebra);

enum class ChainEnd { self_injective, linear, truncated };

struct EpsilonChain {
    std::vector<EpsilonResult> levels;  ///< levels[k] = epsilon^{k+1}
    ChainEnd end = ChainEnd::self_injective;

    int depth() const { return static_cast<int>(levels.size()); }
};

/// Applies epsilon while the current algebra is cyclic and not self-injective.
EpsilonChain epsilon_chain(const Algebra& algebra, int max_steps = 64);

/// phi-dimension through the reduction: gldim when finite, otherwise twice the chain depth.
ExtNat phi_dim_fast(const Algebra& algebra);

/// A module over one component of an epsilon result.
struct EpsilonModule {
    std::size_t component = 0;
    Module module;
    bool operator==(const EpsilonModule&) const = default;
};

/// The epsilon-module of a B-filtered module (top in S', socle in S); nullopt otherwise.
std::optional<EpsilonModule> restrict_to_epsilon(const Algebra& algebra, Module m, const EpsilonResult& eps);

/// The cosyzygy filtered algebra, computed as opposite(epsilon(opposite(A))) componentwise.
/// Component arcs index into source.nabla.
EpsilonResult eta(const Algebra& algebra);

/// Invariant of a possibly disconnected result: the maximum over components.
template <class F>
ExtNat max_over_components(const EpsilonResult& eps, F&& invariant)
{
    ExtNat best = 0;
    for (const auto& comp : eps.components)
        best = max(best, invariant(comp.algebra));
    return best;
}

}  // namespace nakayama
