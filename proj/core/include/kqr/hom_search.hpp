#pragma once

#include <cstdint>
#include <functional>

#include "kqr/sset.hpp"

namespace kqr {

/// Extra constraints for constrained map search. Prescriptions pin the
/// image of selected nondegenerate source simplices (with a degeneracy
/// word to apply to the candidate before comparing), filters reject
/// candidate images outright.
struct MapConstraints {
    // pinned[d][x]: list of (epi word to apply, required value)
    std::vector<std::vector<std::vector<std::pair<EpiWord, SimplexRef>>>> pinned;
    // filter(d, x, candidate) -> acceptable?
    std::function<bool(int, int, const SimplexRef&)> filter;

    static MapConstraints none(const SimplicialSet& source);
};

/// All simplicial maps K -> L in canonical (lexicographic) order of their
/// assignment vectors. Exhaustive backtracking over nondegenerate
/// simplices in increasing dimension.
std::vector<SimplicialMap> enumerate_maps(SSetPtr k, SSetPtr l);
std::vector<SimplicialMap> enumerate_maps(SSetPtr k, SSetPtr l, const MapConstraints& c,
                                          std::int64_t limit = -1);

/// Count without materializing.
std::int64_t count_maps(SSetPtr k, SSetPtr l);

/// First map in canonical order, if any.
std::optional<SimplicialMap> first_map(SSetPtr k, SSetPtr l, const MapConstraints& c);

/// All maps h : B -> X with h ∘ g = t, for g : A -> B, t : A -> X.
std::vector<SimplicialMap> enumerate_extensions(const SimplicialMap& g, const SimplicialMap& t);

/// Constraint set expressing h ∘ g = t on the search for h : B -> X.
MapConstraints extension_constraints(const SimplicialMap& g, const SimplicialMap& t);

}  // namespace kqr
