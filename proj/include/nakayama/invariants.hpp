#pragma once

#include <span>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/ext_nat.hpp"
#include "nakayama/module.hpp"

namespace nakayama {

/// Evidence for an Igusa-Todorov phi value.
///
/// ranks[t] is the rank of L^t<add M>, recorded until the t-th set of syzygy
/// classes repeats an earlier one. phi is the first index whose rank equals the
/// value the sequence settles on.
struct RankSequence {
    std::vector<int> ranks;
    int phi = 0;
    int cycle_start = 0;  ///< index of the first set revisited at ranks.size() - 1
};

/// phi(M) for M the direct sum of `modules`. With Direction::injective this is the
/// dual function built from cosyzygies, with injectives vanishing.
RankSequence phi(const Algebra& algebra, std::span<const Module> modules, Direction dir = Direction::projective);

/// pdim (or injdim) of every indecomposable at once, indexed by ModuleIndex ids.
std::vector<ExtNat> resolution_dims(const Algebra& algebra, Direction dir);

ExtNat phi_dim(const Algebra& algebra);
ExtNat phi_dim_op(const Algebra& algebra);
ExtNat findim(const Algebra& algebra);
ExtNat findim_op(const Algebra& algebra);
ExtNat gldim(const Algebra& algebra);

struct GorensteinResult {
    bool is_gorenstein = false;
    ExtNat gordim = ExtNat::infinity();  ///< infinity when not Gorenstein
};

GorensteinResult gorenstein(const Algebra& algebra);

/// Turns the number of leading projective terms I_0, I_1, ... of a minimal injective
/// coresolution into a dominant dimension: sup{n : I_0..I_n projective} + 1, or 0
/// when I_0 is not projective. Both cases reduce to the count itself.
ExtNat dominant_dimension_from_run(int projective_terms);

/// Dominant dimension contributed by one module (normally an indecomposable projective).
ExtNat dominant_dimension(const Algebra& algebra, Module m);
ExtNat domdim(const Algebra& algebra);

/// Least m >= 1 such that some simple module has projective dimension 2m.
ExtNat even_pdim_parameter(const Algebra& algebra);

struct InvariantReport {
    Algebra algebra;
    int r = 0;
    ExtNat phi_dim;
    ExtNat phi_dim_op;
    ExtNat findim;
    ExtNat findim_op;
    ExtNat gldim;
    bool gorenstein = false;
    ExtNat gordim;
    ExtNat domdim;
    ExtNat m;
    bool self_injective = false;
};

InvariantReport compute_report(const Algebra& algebra);

}  // namespace nakayama
