#include "nakayama/filtration.hpp"

#include <algorithm>
#include <stdexcept>

#include "nakayama/invariants.hpp"

namespace nakayama {

namespace {

int forward_distance(int from, int to, int n) { return ((to - from) % n + n) % n; }

/// Shortest module with top `top` whose socle lies in `targets` (ascending, nonempty).
Module cut_arc(int top, const std::vector<int>& targets, int n)
{
    int best = n;
    for (int s : targets)
        best = std::min(best, forward_distance(top, s, n));
    return {top, best + 1};
}

void require_cyclic(const Algebra& algebra, const char* what)
{
    if (!algebra.is_cyclic())
        throw std::invalid_argument(std::string(what) + ": cyclic algebra required");
}

}  // namespace

int FiltrationData::arc_with_top(int vertex) const
{
    for (std::size_t j = 0; j < arcs.size(); ++j)
        if (arcs[j].top == vertex)
            return static_cast<int>(j);
    return -1;
}

FiltrationData filtration_data(const Algebra& algebra)
{
    require_cyclic(algebra, "filtration_data");
    const int n = algebra.vertices();
    FiltrationData data;
    for (int i = 1; i <= n; ++i)
        data.socles.push_back(socle(algebra, projective(algebra, i)));
    std::sort(data.socles.begin(), data.socles.end());
    data.socles.erase(std::unique(data.socles.begin(), data.socles.end()), data.socles.end());

    for (int s : data.socles)
        data.shifted.push_back(algebra.wrap(s + 1));
    std::sort(data.shifted.begin(), data.shifted.end());

    for (int t : data.shifted)
        data.arcs.push_back(cut_arc(t, data.socles, n));

    std::vector<int> starts;
    for (const auto& rel : relations_from_kupisch(algebra).relations)
        starts.push_back(rel.start);
    std::vector<int> tops;
    for (int k : starts)
        tops.push_back(algebra.wrap(k + 1));
    std::sort(tops.begin(), tops.end());
    for (int t : tops)
        data.nabla.push_back(cut_arc(t, starts, n));
    return data;
}

int EpsilonResult::vertices() const
{
    int total = 0;
    for (const auto& comp : components)
        total += comp.algebra.vertices();
    return total;
}

std::pair<std::size_t, int> EpsilonResult::locate(int arc) const
{
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& arcs = components[c].arcs;
        auto it = std::find(arcs.begin(), arcs.end(), arc);
        if (it != arcs.end())
            return {c, static_cast<int>(it - arcs.begin()) + 1};
    }
    throw std::out_of_range("arc " + std::to_string(arc) + " not in epsilon result");
}

EpsilonResult epsilon(const Algebra& algebra)
{
    EpsilonResult result;
    result.source = filtration_data(algebra);
    const auto& arcs = result.source.arcs;
    const int r = static_cast<int>(arcs.size());

    // New Kupisch value at arc j: how many consecutive arcs P_{top(arc j)} spans.
    std::vector<int> series(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        int remaining = algebra.length(arcs[static_cast<std::size_t>(j)].top);
        int count = 0;
        for (int k = j; remaining > 0; k = (k + 1) % r) {
            remaining -= arcs[static_cast<std::size_t>(k)].length;
            ++count;
        }
        if (remaining != 0)
            throw std::logic_error("arc walk overshoots an arc boundary for " + kupisch_string(algebra));
        series[static_cast<std::size_t>(j)] = count;
        if (is_projective(algebra, arcs[static_cast<std::size_t>(j)]))
            result.breaks.push_back(j);
    }

    if (result.breaks.empty()) {
        std::vector<int> ids(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            ids[static_cast<std::size_t>(j)] = j;
        result.components.push_back({Algebra::cyclic(series), std::move(ids)});
    }
    else {
        // Each component runs from just after one break up to and including the next.
        const auto& breaks = result.breaks;
        for (std::size_t b = 0; b < breaks.size(); ++b) {
            const int last = breaks[b];
            int first = (b == 0 ? breaks.back() : breaks[b - 1]) + 1;
            first %= r;
            EpsilonResult::Component comp;
            comp.algebra.kind = Kind::linear;
            for (int k = first;; k = (k + 1) % r) {
                comp.arcs.push_back(k);
                comp.algebra.kupisch.push_back(series[static_cast<std::size_t>(k)]);
                if (k == last)
                    break;
            }
            result.components.push_back(std::move(comp));
        }
    }

    for (const auto& comp : result.components)
        if (!validate(comp.algebra).empty())
            throw std::logic_error("epsilon of " + kupisch_string(algebra) + " is not a Nakayama algebra");
    return result;
}

EpsilonChain epsilon_chain(const Algebra& algebra, int max_steps)
{
    require_cyclic(algebra, "epsilon_chain");
    EpsilonChain chain;
    Algebra current = algebra;
    for (;;) {
        if (is_self_injective(current)) {
            chain.end = ChainEnd::self_injective;
            break;
        }
        if (chain.depth() >= max_steps) {
            chain.end = ChainEnd::truncated;
            break;
        }
        chain.levels.push_back(epsilon(current));
        const auto& last = chain.levels.back();
        if (!last.is_cyclic()) {
            chain.end = ChainEnd::linear;
            break;
        }
        current = last.components.front().algebra;
    }
    return chain;
}

ExtNat phi_dim_fast(const Algebra& algebra)
{
    const ExtNat gl = gldim(algebra);
    if (gl.is_finite())
        return gl;
    const auto chain = epsilon_chain(algebra, algebra.vertices() + 1);
    if (chain.end != ChainEnd::self_injective)
        throw std::logic_error("infinite global dimension but the epsilon chain of " + kupisch_string(algebra) +
                               " does not reach a self-injective algebra");
    return 2 * chain.depth();
}

std::optional<EpsilonModule> restrict_to_epsilon(const Algebra& algebra, Module m, const EpsilonResult& eps)
{
    const auto& data = eps.source;
    const int first = data.arc_with_top(m.top);
    if (first < 0)
        return std::nullopt;
    if (!std::binary_search(data.socles.begin(), data.socles.end(), socle(algebra, m)))
        return std::nullopt;

    const int r = static_cast<int>(data.arcs.size());
    int remaining = m.length;
    int count = 0;
    for (int k = first; remaining > 0; k = (k + 1) % r) {
        remaining -= data.arcs[static_cast<std::size_t>(k)].length;
        ++count;
    }
    if (remaining != 0)
        return std::nullopt;

    const auto [component, vertex] = eps.locate(first);
    const EpsilonModule result{component, {vertex, count}};
    if (!is_valid(eps.components[component].algebra, result.module))
        throw std::logic_error("filtered module " + to_string(m) + " does not fit its epsilon projective");
    return result;
}

EpsilonResult eta(const Algebra& algebra)
{
    const Algebra op = opposite(algebra);
    const EpsilonResult dual_eps = epsilon(op);
    const int n = algebra.vertices();

    EpsilonResult result;
    result.source = filtration_data(algebra);
    const auto& nabla = result.source.nabla;

    // Arc k of B(A^op) is the dual of some nabla arc of A.
    auto nabla_index = [&](int k) {
        const Module arc = dual_eps.source.arcs[static_cast<std::size_t>(k)];
        const int soc = n + 1 - arc.top;
        const Module original{algebra.wrap(soc - arc.length + 1), arc.length};
        auto it = std::find(nabla.begin(), nabla.end(), original);
        if (it == nabla.end())
            throw std::logic_error("dual arc " + to_string(original) + " missing from nabla of " +
                                   kupisch_string(algebra));
        return static_cast<int>(it - nabla.begin());
    };

    for (auto it = dual_eps.components.rbegin(); it != dual_eps.components.rend(); ++it) {
        EpsilonResult::Component comp;
        comp.algebra = opposite(it->algebra);
        for (auto k = it->arcs.rbegin(); k != it->arcs.rend(); ++k)
            comp.arcs.push_back(nabla_index(*k));
        result.components.push_back(std::move(comp));
    }
    for (int k : dual_eps.breaks)
        result.breaks.push_back(nabla_index(k));
    std::sort(result.breaks.begin(), result.breaks.end());
    return result;
}

}  // namespace nakayama
