#include "nakayama/invariants.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace nakayama {

RankSequence phi(const Algebra& algebra, std::span<const Module> modules, Direction dir)
{
    const ModuleIndex index(algebra);
    std::vector<int> current;
    for (const Module& m : modules)
        if (!is_terminal(algebra, m, dir))
            current.push_back(index.id(m));
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());

    RankSequence seq;
    std::map<std::vector<int>, int> visited;
    for (int t = 0;; ++t) {
        seq.ranks.push_back(static_cast<int>(current.size()));
        auto [it, inserted] = visited.emplace(current, t);
        if (!inserted) {
            seq.cycle_start = it->second;
            break;
        }
        std::vector<int> next;
        next.reserve(current.size());
        for (int id : current) {
            auto image = step(algebra, index.module(id), dir);
            if (image && !is_terminal(algebra, *image, dir))
                next.push_back(index.id(*image));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }

    // Ranks never increase and are constant on the cycle, so the limit is the last entry.
    const int limit = seq.ranks.back();
    seq.phi = static_cast<int>(std::find(seq.ranks.begin(), seq.ranks.end(), limit) - seq.ranks.begin());
    return seq;
}

std::vector<ExtNat> resolution_dims(const Algebra& algebra, Direction dir)
{
    const ModuleIndex index(algebra);
    const auto n = static_cast<std::size_t>(index.size());
    std::vector<int> next(n, -1);
    for (std::size_t id = 0; id < n; ++id)
        if (auto image = step(algebra, index.module(static_cast<int>(id)), dir))
            next[id] = index.id(*image);

    enum : char { unvisited, on_path, done };
    std::vector<char> state(n, unvisited);
    std::vector<ExtNat> dims(n);
    std::vector<int> path;
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] == done)
            continue;
        path.clear();
        int cur = static_cast<int>(start);
        // Dimension of the successor of path.back(); nullopt is the zero module.
        std::optional<ExtNat> successor;
        for (;;) {
            if (cur < 0)
                break;
            const auto c = static_cast<std::size_t>(cur);
            if (state[c] == done) {
                successor = dims[c];
                break;
            }
            if (state[c] == on_path) {
                successor = ExtNat::infinity();
                break;
            }
            state[c] = on_path;
            path.push_back(cur);
            cur = next[c];
        }
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            const auto c = static_cast<std::size_t>(*it);
            dims[c] = successor ? *successor + 1 : ExtNat(0);
            successor = dims[c];
            state[c] = done;
        }
    }
    return dims;
}

ExtNat phi_dim(const Algebra& algebra)
{
    const auto all = indecomposables(algebra);
    return phi(algebra, all, Direction::projective).phi;
}

ExtNat phi_dim_op(const Algebra& algebra)
{
    const auto all = indecomposables(algebra);
    return phi(algebra, all, Direction::injective).phi;
}

namespace {

ExtNat max_finite(const std::vector<ExtNat>& dims)
{
    ExtNat best = 0;
    for (ExtNat d : dims)
        if (d.is_finite())
            best = max(best, d);
    return best;
}

}  // namespace

ExtNat findim(const Algebra& algebra) { return max_finite(resolution_dims(algebra, Direction::projective)); }

ExtNat findim_op(const Algebra& algebra) { return max_finite(resolution_dims(algebra, Direction::injective)); }

ExtNat gldim(const Algebra& algebra)
{
    const auto dims = resolution_dims(algebra, Direction::projective);
    const ModuleIndex index(algebra);
    ExtNat best = 0;
    for (int v = 1; v <= algebra.vertices(); ++v)
        best = max(best, dims[static_cast<std::size_t>(index.id({v, 1}))]);
    return best;
}

GorensteinResult gorenstein(const Algebra& algebra)
{
    const auto dims = resolution_dims(algebra, Direction::projective);
    const ModuleIndex index(algebra);
    ExtNat worst = 0;
    for (int s = 1; s <= algebra.vertices(); ++s)
        worst = max(worst, dims[static_cast<std::size_t>(index.id(injective(algebra, s)))]);
    return {worst.is_finite(), worst};
}

ExtNat dominant_dimension_from_run(int projective_terms)
{
    if (projective_terms == 0)
        return 0;
    const int last_projective_index = projective_terms - 1;
    return last_projective_index + 1;
}

ExtNat dominant_dimension(const Algebra& algebra, Module m)
{
    const ModuleIndex index(algebra);
    std::vector<char> seen(static_cast<std::size_t>(index.size()), 0);
    int run = 0;
    std::optional<Module> current = m;
    while (current) {
        auto& mark = seen[static_cast<std::size_t>(index.id(*current))];
        if (mark)
            return ExtNat::infinity();
        mark = 1;
        if (!is_projective(algebra, injective_envelope(algebra, *current)))
            return dominant_dimension_from_run(run);
        ++run;
        current = cosyzygy(algebra, *current);
    }
    // Every term of a finite coresolution is projective.
    return ExtNat::infinity();
}

ExtNat domdim(const Algebra& algebra)
{
    ExtNat best = ExtNat::infinity();
    for (int v = 1; v <= algebra.vertices(); ++v)
        best = min(best, dominant_dimension(algebra, projective(algebra, v)));
    return best;
}

ExtNat even_pdim_parameter(const Algebra& algebra)
{
    ExtNat best = ExtNat::infinity();
    for (int v = 1; v <= algebra.vertices(); ++v) {
        const ExtNat d = pdim(algebra, {v, 1});
        if (d.is_finite() && d.value() >= 2 && d.value() % 2 == 0)
            best = min(best, d.value() / 2);
    }
    return best;
}

InvariantReport compute_report(const Algebra& algebra)
{
    InvariantReport rep;
    rep.algebra = algebra;
    rep.r = relation_count(algebra);

    const auto all = indecomposables(algebra);
    rep.phi_dim = phi(algebra, all, Direction::projective).phi;
    rep.phi_dim_op = phi(algebra, all, Direction::injective).phi;

    const ModuleIndex index(algebra);
    const auto proj_dims = resolution_dims(algebra, Direction::projective);
    rep.findim = max_finite(proj_dims);
    rep.findim_op = findim_op(algebra);

    rep.gldim = 0;
    rep.m = ExtNat::infinity();
    for (int v = 1; v <= algebra.vertices(); ++v) {
        const ExtNat d = proj_dims[static_cast<std::size_t>(index.id({v, 1}))];
        rep.gldim = max(rep.gldim, d);
        if (d.is_finite() && d.value() >= 2 && d.value() % 2 == 0)
            rep.m = min(rep.m, d.value() / 2);
    }

    ExtNat worst = 0;
    for (int s = 1; s <= algebra.vertices(); ++s)
        worst = max(worst, proj_dims[static_cast<std::size_t>(index.id(injective(algebra, s)))]);
    rep.gorenstein = worst.is_finite();
    rep.gordim = worst;

    rep.domdim = domdim(algebra);
    rep.self_injective = is_self_injective(algebra);
    return rep;
}

}  // namespace nakayama
