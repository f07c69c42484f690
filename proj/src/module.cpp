#include "nakayama/module.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace nakayama {

std::string to_string(Module m) { return "M(" + std::to_string(m.top) + "," + std::to_string(m.length) + ")"; }

bool is_valid(const Algebra& algebra, Module m)
{
    return m.top >= 1 && m.top <= algebra.vertices() && m.length >= 1 && m.length <= algebra.length(m.top);
}

int socle(const Algebra& algebra, Module m) { return algebra.wrap(m.top + m.length - 1); }

Module projective(const Algebra& algebra, int vertex) { return {vertex, algebra.length(vertex)}; }

Module projective_cover(const Algebra& algebra, Module m) { return projective(algebra, m.top); }

int injective_length(const Algebra& algebra, int socle_vertex)
{
    // The admissible lengths form an interval; a linear algebra cannot reach past vertex 1.
    const int limit = algebra.is_cyclic() ? std::numeric_limits<int>::max() : socle_vertex;
    int len = 1;
    while (len < limit && algebra.length(algebra.wrap(socle_vertex - len)) >= len + 1)
        ++len;
    return len;
}

Module injective(const Algebra& algebra, int socle_vertex)
{
    const int len = injective_length(algebra, socle_vertex);
    return {algebra.wrap(socle_vertex - len + 1), len};
}

Module injective_envelope(const Algebra& algebra, Module m) { return injective(algebra, socle(algebra, m)); }

bool is_projective(const Algebra& algebra, Module m) { return m.length == algebra.length(m.top); }

bool is_injective(const Algebra& algebra, Module m)
{
    return m.length == injective_length(algebra, socle(algebra, m));
}

std::optional<Module> syzygy(const Algebra& algebra, Module m)
{
    assert(is_valid(algebra, m));
    const int cover = algebra.length(m.top);
    if (m.length == cover)
        return std::nullopt;
    return Module{algebra.wrap(m.top + m.length), cover - m.length};
}

std::optional<Module> cosyzygy(const Algebra& algebra, Module m)
{
    assert(is_valid(algebra, m));
    const Module envelope = injective_envelope(algebra, m);
    if (m.length == envelope.length)
        return std::nullopt;
    return Module{envelope.top, envelope.length - m.length};
}

std::optional<Module> step(const Algebra& algebra, Module m, Direction dir)
{
    return dir == Direction::projective ? syzygy(algebra, m) : cosyzygy(algebra, m);
}

bool is_terminal(const Algebra& algebra, Module m, Direction dir)
{
    return dir == Direction::projective ? is_projective(algebra, m) : is_injective(algebra, m);
}

ExtNat resolution_dim(const Algebra& algebra, Module m, Direction dir)
{
    const ModuleIndex index(algebra);
    std::vector<char> seen(static_cast<std::size_t>(index.size()), 0);
    int steps = 0;
    std::optional<Module> current = m;
    while (current) {
        auto& mark = seen[static_cast<std::size_t>(index.id(*current))];
        if (mark)
            return ExtNat::infinity();
        mark = 1;
        current = step(algebra, *current, dir);
        if (current)
            ++steps;
    }
    return steps;
}

ExtNat pdim(const Algebra& algebra, Module m) { return resolution_dim(algebra, m, Direction::projective); }

ExtNat injdim(const Algebra& algebra, Module m) { return resolution_dim(algebra, m, Direction::injective); }

ModuleSet indecomposables(const Algebra& algebra)
{
    ModuleSet all;
    for (int t = 1; t <= algebra.vertices(); ++t)
        for (int len = 1; len <= algebra.length(t); ++len)
            all.push_back({t, len});
    return all;
}

int hom_dim(const Algebra& algebra, Module a, Module b)
{
    const int target = socle(algebra, b);
    const int n = algebra.vertices();
    int count = 0;
    for (int j = 1; j <= std::min(a.length, b.length); ++j)
        if (((a.top + j - 1 - target) % n + n) % n == 0)
            ++count;
    return count;
}

Module dual(const Algebra& algebra, Module m) { return {algebra.vertices() + 1 - socle(algebra, m), m.length}; }

ModuleIndex::ModuleIndex(const Algebra& algebra)
{
    offsets_.reserve(algebra.kupisch.size());
    for (int c : algebra.kupisch) {
        offsets_.push_back(size_);
        size_ += c;
    }
}

Module ModuleIndex::module(int id) const
{
    int t = 0;
    while (t + 1 < static_cast<int>(offsets_.size()) && offsets_[static_cast<std::size_t>(t + 1)] <= id)
        ++t;
    return {t + 1, id - offsets_[static_cast<std::size_t>(t)] + 1};
}

}  // namespace nakayama
