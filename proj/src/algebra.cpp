#include "nakayama/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nakayama/module.hpp"

namespace nakayama {

std::string to_string(Kind kind) { return kind == Kind::cyclic ? "cyclic" : "linear"; }

namespace {

std::string describe(const std::vector<ValidationError>& errors)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (i)
            os << "; ";
        os << "index " << errors[i].index << ": " << errors[i].message;
    }
    return os.str();
}

int cyclic_distance(int from, int to, int n) { return ((to - from) % n + n) % n; }

}  // namespace

std::vector<ValidationError> validate(const Algebra& algebra)
{
    std::vector<ValidationError> errors;
    const int n = algebra.vertices();
    if (n < 1) {
        errors.push_back({0, "empty Kupisch series"});
        return errors;
    }
    auto c = [&](int i) { return algebra.length(i); };

    if (algebra.kind == Kind::cyclic) {
        for (int i = 1; i <= n; ++i)
            if (c(i) < 2)
                errors.push_back({i, "c_" + std::to_string(i) + " = " + std::to_string(c(i)) + " < 2"});
        for (int j = 1; j <= n; ++j) {
            const int prev = algebra.wrap(j - 1);
            if (c(j) < c(prev) - 1)
                errors.push_back({j, "c_" + std::to_string(j) + " = " + std::to_string(c(j)) + " < c_" +
                                         std::to_string(prev) + " - 1 = " + std::to_string(c(prev) - 1)});
        }
        return errors;
    }

    for (int i = 1; i <= n; ++i) {
        if (c(i) < 1)
            errors.push_back({i, "c_" + std::to_string(i) + " = " + std::to_string(c(i)) + " < 1"});
        else if (c(i) > n - i + 1)
            errors.push_back({i, "c_" + std::to_string(i) + " = " + std::to_string(c(i)) + " > N - i + 1 = " +
                                     std::to_string(n - i + 1)});
    }
    if (c(n) != 1)
        errors.push_back({n, "c_N = " + std::to_string(c(n)) + " != 1"});
    for (int j = 2; j <= n; ++j)
        if (c(j) < c(j - 1) - 1)
            errors.push_back({j, "c_" + std::to_string(j) + " = " + std::to_string(c(j)) + " < c_" +
                                     std::to_string(j - 1) + " - 1 = " + std::to_string(c(j - 1) - 1)});
    return errors;
}

void require_valid(const Algebra& algebra)
{
    auto errors = validate(algebra);
    if (!errors.empty())
        throw std::invalid_argument("invalid " + to_string(algebra.kind) + " Kupisch series (" +
                                    kupisch_string(algebra) + "): " + describe(errors));
}

std::vector<ValidationError> validate(const RelationSystem& system)
{
    std::vector<ValidationError> errors;
    const int n = system.vertices;
    if (n < 1) {
        errors.push_back({0, "vertex count must be positive"});
        return errors;
    }
    const int r = system.count();
    if (r < 1)
        errors.push_back({0, "a cyclic algebra needs at least one relation"});
    if (r > n)
        errors.push_back({0, "more relations (" + std::to_string(r) + ") than vertices"});

    std::set<int> starts;
    for (int j = 0; j < r; ++j) {
        const auto& rel = system.relations[static_cast<std::size_t>(j)];
        if (rel.start < 1 || rel.start > n)
            errors.push_back({j + 1, "start " + std::to_string(rel.start) + " out of range"});
        if (rel.arrows < 1)
            errors.push_back({j + 1, "arrow count must be positive"});
        if (!starts.insert(rel.start).second)
            errors.push_back({j + 1, "start " + std::to_string(rel.start) + " repeated"});
    }
    if (!errors.empty())
        return errors;

    // Block a = arrows start_a .. start_a + L_a - 1 (mod N). b sits inside a iff its
    // first arrow occurs early enough in a.
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            if (a == b)
                continue;
            const auto& ra = system.relations[static_cast<std::size_t>(a)];
            const auto& rb = system.relations[static_cast<std::size_t>(b)];
            if (cyclic_distance(ra.start, rb.start, n) + rb.arrows <= ra.arrows)
                errors.push_back({a + 1, "relation (" + std::to_string(ra.start) + "," + std::to_string(ra.arrows) +
                                             ") contains relation (" + std::to_string(rb.start) + "," +
                                             std::to_string(rb.arrows) + ")"});
        }
    return errors;
}

Algebra kupisch_from_relations(const RelationSystem& system)
{
    auto errors = validate(system);
    if (!errors.empty())
        throw std::invalid_argument("invalid relation system: " + describe(errors));
    const int n = system.vertices;
    Algebra algebra{Kind::cyclic, std::vector<int>(static_cast<std::size_t>(n))};
    for (int v = 1; v <= n; ++v) {
        int best = -1;
        for (const auto& rel : system.relations) {
            const int len = cyclic_distance(v, rel.start, n) + rel.arrows;
            if (best < 0 || len < best)
                best = len;
        }
        algebra.kupisch[static_cast<std::size_t>(v - 1)] = best;
    }
    require_valid(algebra);
    return algebra;
}

RelationSystem relations_from_kupisch(const Algebra& algebra)
{
    if (!algebra.is_cyclic())
        throw std::invalid_argument("relations_from_kupisch: cyclic algebra required");
    RelationSystem system{algebra.vertices(), {}};
    for (int i = 1; i <= algebra.vertices(); ++i)
        if (algebra.length(algebra.wrap(i + 1)) >= algebra.length(i))
            system.relations.push_back({i, algebra.length(i)});
    return system;
}

int relation_count(const Algebra& algebra)
{
    const int n = algebra.vertices();
    if (algebra.is_cyclic())
        return relations_from_kupisch(algebra).count();
    int r = 0;
    for (int i = 1; i < n; ++i)
        if (i + algebra.length(i) <= n && algebra.length(i + 1) >= algebra.length(i))
            ++r;
    return r;
}

bool is_self_injective(const Algebra& algebra)
{
    // A linear series is self-injective only when semisimple.
    if (!algebra.is_cyclic())
        return std::all_of(algebra.kupisch.begin(), algebra.kupisch.end(), [](int c) { return c == 1; });
    return std::adjacent_find(algebra.kupisch.begin(), algebra.kupisch.end(), std::not_equal_to<>()) ==
           algebra.kupisch.end();
}

Algebra opposite(const Algebra& algebra)
{
    const int n = algebra.vertices();
    Algebra op{algebra.kind, std::vector<int>(static_cast<std::size_t>(n))};
    for (int j = 1; j <= n; ++j)
        op.kupisch[static_cast<std::size_t>(j - 1)] = injective_length(algebra, n + 1 - j);
    return op;
}

Algebra canonical_rotation(const Algebra& algebra)
{
    if (!algebra.is_cyclic())
        return algebra;
    const auto& c = algebra.kupisch;
    std::vector<int> best = c;
    std::vector<int> candidate(c.size());
    for (std::size_t shift = 1; shift < c.size(); ++shift) {
        std::rotate_copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift), c.end(), candidate.begin());
        if (candidate < best)
            best = candidate;
    }
    return Algebra::cyclic(std::move(best));
}

bool is_canonical(const Algebra& algebra)
{
    if (!algebra.is_cyclic())
        return true;
    const auto& c = algebra.kupisch;
    const std::size_t n = c.size();
    for (std::size_t shift = 1; shift < n; ++shift)
        for (std::size_t i = 0; i < n; ++i) {
            const int rotated = c[(i + shift) % n];
            if (rotated != c[i]) {
                if (rotated < c[i])
                    return false;
                break;
            }
        }
    return true;
}

std::string kupisch_string(const Algebra& algebra)
{
    std::string s;
    for (std::size_t i = 0; i < algebra.kupisch.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(algebra.kupisch[i]);
    }
    return s;
}

}  // namespace nakayama
