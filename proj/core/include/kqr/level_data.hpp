#pragma once

#include "kqr/sset.hpp"

namespace kqr {

/// A simplicial set given levelwise: all simplices of each dimension up to
/// a bound, with explicit face and degeneracy functions. Used to reduce
/// level-set constructions (map spaces, products, quotients, limits) to
/// one Eilenberg-Zilber extraction pass.
struct LevelData {
    std::vector<int> sizes;  // sizes[d] for 0 <= d <= N
    // face[d][i][x]: level d -> level d-1, for 1 <= d <= N, 0 <= i <= d
    std::vector<std::vector<std::vector<int>>> face;
    // degen[d][j][x]: level d -> level d+1, for 0 <= d < N, 0 <= j <= d
    std::vector<std::vector<std::vector<int>>> degen;

    int max_dim() const { return (int)sizes.size() - 1; }
    void check_shape() const;
};

/// Result of normal-form extraction: the simplicial set of nondegenerate
/// simplices plus, per level, the normal form of every element.
struct Normalized {
    SimplicialSet sset;
    std::vector<std::vector<SimplexRef>> ref_of;  // [d][element] -> normal form
    std::vector<std::vector<int>> elem_of_nondeg; // [d][id] -> element index

    int element_of(const SimplexRef& r, const LevelData& levels) const;
};

/// Extract nondegenerate simplices and face data from a levelwise
/// presentation. Elements above max_dim are assumed (not checked) to be
/// degenerate; the caller chooses the bound accordingly.
Normalized normalize(const LevelData& levels);

}  // namespace kqr
