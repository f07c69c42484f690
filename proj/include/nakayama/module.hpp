#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/ext_nat.hpp"

namespace nakayama {

/// Indecomposable module M(top, length): composition factors S_top, S_{top+1}, ...,
/// read from the top down. Exists iff 1 <= length <= c_top.
struct Module {
    int top = 1;
    int length = 1;

    bool operator==(const Module&) const = default;
    auto operator<=>(const Module&) const = default;
};

/// Duplicate-free, sorted.
using ModuleSet = std::vector<Module>;

/// Which resolution a computation follows: Omega with projectives, or Sigma with injectives.
enum class Direction { projective, injective };

std::string to_string(Module m);

bool is_valid(const Algebra& algebra, Module m);
int socle(const Algebra& algebra, Module m);

Module projective(const Algebra& algebra, int vertex);
Module projective_cover(const Algebra& algebra, Module m);

/// l(I_s): the longest module with socle S_s.
int injective_length(const Algebra& algebra, int socle_vertex);
Module injective(const Algebra& algebra, int socle_vertex);
Module injective_envelope(const Algebra& algebra, Module m);

bool is_projective(const Algebra& algebra, Module m);
bool is_injective(const Algebra& algebra, Module m);

/// Kernel of the projective cover; nullopt is the zero module.
std::optional<Module> syzygy(const Algebra& algebra, Module m);
/// Cokernel of the injective envelope; nullopt is the zero module.
std::optional<Module> cosyzygy(const Algebra& algebra, Module m);

std::optional<Module> step(const Algebra& algebra, Module m, Direction dir);
bool is_terminal(const Algebra& algebra, Module m, Direction dir);

ExtNat pdim(const Algebra& algebra, Module m);
ExtNat injdim(const Algebra& algebra, Module m);
ExtNat resolution_dim(const Algebra& algebra, Module m, Direction dir);

/// Every M(t, l) with 1 <= l <= c_t, ordered by (top, length).
ModuleSet indecomposables(const Algebra& algebra);

/// dim Hom(a, b): the number of common quotient-of-a / submodule-of-b images.
int hom_dim(const Algebra& algebra, Module a, Module b);

/// The module over opposite(algebra) corresponding to m under k-duality.
Module dual(const Algebra& algebra, Module m);

/// Dense numbering of the indecomposables of one algebra, for seen-sets and matrices.
class ModuleIndex {
public:
    explicit ModuleIndex(const Algebra& algebra);

    int size() const { return size_; }
    int id(Module m) const { return offsets_[static_cast<std::size_t>(m.top - 1)] + m.length - 1; }
    Module module(int id) const;

private:
    std::vector<int> offsets_;
    int size_ = 0;
};

}  // namespace nakayama
