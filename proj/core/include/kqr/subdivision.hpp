#pragma once

#include <map>

#include "kqr/sset.hpp"

namespace kqr {

/// A simplex of sd(K) in canonical form: a nondegenerate simplex z of K
/// together with a chain of nonempty subsets of its vertex positions,
/// weakly increasing under inclusion, whose top is the full set. Strict
/// chains are the nondegenerate simplices.
using Chain = std::vector<std::vector<int>>;

struct SdCell {
    int zdim = 0, zid = 0;
    Chain chain;
    friend auto operator<=>(const SdCell&, const SdCell&) = default;
};

/// Barycentric subdivision with its last-vertex map. For K = Δ^n this is
/// the nerve of the poset of nondegenerate simplices; general K is the
/// colimit of subdivided simplices over the simplex diagram of K, carried
/// out on canonical forms.
struct SdComplex {
    SSetPtr base;
    SSetPtr complex;
    SimplicialMap last_vertex;                 // sd(K) -> K
    std::vector<std::vector<SdCell>> cells;    // per level, nondegenerate
    std::vector<std::map<SdCell, int>> index;  // cell -> id

    /// Normal form of an arbitrary chain pair (top may be proper, chain
    /// may repeat), as a ref into the subdivision.
    SimplexRef canonical_ref(int zdim, int zid, const Chain& chain) const;
};

SdComplex sd(SSetPtr k);

/// Functorial action: sd(f) : sd(K) -> sd(L).
SimplicialMap sd_map(const SimplicialMap& f, const SdComplex& sd_k, const SdComplex& sd_l);

struct SdIter {
    SSetPtr complex;          // sd^i(K)
    SimplicialMap composite;  // sd^i(K) -> K via iterated last-vertex maps
};
SdIter sd_iter(SSetPtr k, int iterations);

/// Memoized sd(Δ^n) with the subdivided cosimplicial operators.
const SdComplex& shared_sd_simplex(int n);
SimplicialMap sd_of_delta(const DeltaMap& op);  // sd(Δ^dom) -> sd(Δ^cod)

}  // namespace kqr
