#pragma once

#include <string>
#include <vector>

namespace nakayama {

enum class Kind { cyclic, linear };

std::string to_string(Kind kind);

/// A connected Nakayama algebra given by its Kupisch series.
///
/// Vertices are 1..N, arrow i points i -> i+1 (and N -> 1 when cyclic).
/// kupisch[i-1] is the composition length of the indecomposable projective P_i.
/// Operations taking an Algebra assume it passed validate().
struct Algebra {
    Kind kind = Kind::cyclic;
    std::vector<int> kupisch;

    static Algebra cyclic(std::vector<int> series) { return {Kind::cyclic, std::move(series)}; }
    static Algebra linear(std::vector<int> series) { return {Kind::linear, std::move(series)}; }

    int vertices() const { return static_cast<int>(kupisch.size()); }
    bool is_cyclic() const { return kind == Kind::cyclic; }

    /// c_v for a 1-based vertex.
    int length(int vertex) const { return kupisch[static_cast<std::size_t>(vertex - 1)]; }

    /// Reduces an arbitrary integer to a vertex in 1..N. Linear algebras never wrap,
    /// so the argument must already be in range there.
    int wrap(int vertex) const
    {
        if (kind == Kind::linear)
            return vertex;
        const int n = vertices();
        return ((vertex - 1) % n + n) % n + 1;
    }

    bool operator==(const Algebra&) const = default;
};

struct ValidationError {
    int index;  ///< 1-based vertex (or relation) index the violation refers to
    std::string message;
    bool operator==(const ValidationError&) const = default;
};

/// Empty result means the algebra is valid.
std::vector<ValidationError> validate(const Algebra& algebra);

/// Throws std::invalid_argument listing every violation.
void require_valid(const Algebra& algebra);

/// A zero relation: the path of `arrows` arrows starting at vertex `start` vanishes.
struct Relation {
    int start;
    int arrows;
    bool operator==(const Relation&) const = default;
    auto operator<=>(const Relation&) const = default;
};

/// An irredundant system of zero relations on the cyclic quiver with `vertices` vertices.
struct RelationSystem {
    int vertices = 0;
    std::vector<Relation> relations;  ///< sorted by start

    int count() const { return static_cast<int>(relations.size()); }
    bool operator==(const RelationSystem&) const = default;
};

std::vector<ValidationError> validate(const RelationSystem& system);

/// c_v is the length of the shortest path from v containing a relation block.
/// Throws std::invalid_argument for redundant or ill-formed systems.
Algebra kupisch_from_relations(const RelationSystem& system);

/// Cyclic algebras only: a relation starts at i iff c_{i+1} >= c_i, with c_i arrows.
RelationSystem relations_from_kupisch(const Algebra& algebra);

/// Number r of irredundant relations. Works for linear algebras too, where a
/// relation at i < N additionally needs the path to fit inside the quiver.
int relation_count(const Algebra& algebra);

bool is_self_injective(const Algebra& algebra);

/// The opposite algebra, vertices relabelled by j -> N+1-j.
Algebra opposite(const Algebra& algebra);

/// Lexicographically minimal rotation of a cyclic series; linear algebras are returned as is.
Algebra canonical_rotation(const Algebra& algebra);

bool is_canonical(const Algebra& algebra);

std::string kupisch_string(const Algebra& algebra);

}  // namespace nakayama
