#pragma once

#include <map>

#include "kqr/level_data.hpp"
#include "kqr/sset.hpp"
#include "kqr/subdivision.hpp"

namespace kqr {

/// A finite window onto a simplicial set: simplices above trunc_dim are
/// not represented and not claimed. Consumers declare the dimensions they
/// inspect and must reject windows that are too shallow.
struct TruncatedSSet {
    SSetPtr underlying;
    int trunc_dim = 0;
};

struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExCaps {
    std::int64_t level_cap = 2000000;
};

/// Ex(K) up to trunc_dim: level n is the set of maps sd(Δ^n) -> K, with
/// structure maps by precomposition with the subdivided cosimplicial
/// operators. Keeps the level tables needed for transposition.
struct ExtensionComplex {
    SSetPtr base;
    int trunc_dim = 0;
    TruncatedSSet complex;
    std::vector<std::vector<SimplicialMap>> level_maps;
    LevelData levels;
    Normalized norm;
    std::vector<std::map<std::vector<std::vector<SimplexRef>>, int>> element_index;

    int element_of_map(const SimplicialMap& f) const;  // by assignment, -1 if absent
    const SimplicialMap& map_of_ref(const SimplexRef& r, SimplexRef* base_part = nullptr) const;
    SimplexRef ref_of_element(int level, int e) const { return norm.ref_of[level][e]; }
};

ExtensionComplex ex(SSetPtr k, int trunc_dim, const ExCaps& caps = {});
ExtensionComplex ex(const TruncatedSSet& k, int trunc_dim, const ExCaps& caps = {});

/// The unit K -> Ex(K), adjoint to the last-vertex map.
SimplicialMap unit_map(SSetPtr k, const ExtensionComplex& ex_k);

/// Functorial action Ex(f) : Ex(K) -> Ex(L) by postcomposition.
SimplicialMap ex_map(const SimplicialMap& f, const ExtensionComplex& ex_k,
                     const ExtensionComplex& ex_l);

struct TowerStage {
    int stage = 0;
    TruncatedSSet complex;
    SimplicialMap unit_trace;  // K -> stage complex
};
struct ExTower {
    std::vector<TowerStage> stages;
    /// The extension complexes behind stages 1..; stages[i].complex is
    /// towers[i-1].complex.
    std::vector<ExtensionComplex> extensions;
    bool capped = false;
    std::string cap_reason;
};
ExTower ex_tower(SSetPtr k, int stages, int trunc_dim, const ExCaps& caps = {});

/// Element-by-element verification of the transposition bijection between
/// maps sd(K) -> L and maps K -> Ex(L).
struct AdjunctionWitness {
    std::vector<SimplicialMap> sd_side;  // sd(K) -> L
    std::vector<SimplicialMap> ex_side;  // K -> Ex(L)
    std::vector<int> forward;            // transposition sd_side -> ex_side
    std::vector<int> backward;
    bool verified = false;
    std::string failure;
};
AdjunctionWitness check_adjunction(SSetPtr k, SSetPtr l, int trunc_dim);

/// Transpositions used by check_adjunction, exposed for reuse.
SimplicialMap transpose_to_ex(const SimplicialMap& f, const SdComplex& sd_k,
                              const ExtensionComplex& ex_l);
SimplicialMap transpose_to_sd(const SimplicialMap& g, const SdComplex& sd_k,
                              const ExtensionComplex& ex_l);

}  // namespace kqr
