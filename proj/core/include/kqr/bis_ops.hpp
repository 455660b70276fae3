#pragma once

#include "kqr/bisset.hpp"
#include "kqr/hom_search.hpp"
#include "kqr/oracles.hpp"

namespace kqr {

/// External product K □ L: nondegenerate bisimplices are pairs of
/// nondegenerate simplices, K horizontal, L vertical.
struct ExternalProduct {
    SSetPtr left, right;
    BiSSetPtr complex;
    int pair_id(int jb, int kb, int a, int b) const;  // nondeg pair index
    BiSimplexRef pair_ref(const SimplexRef& ra, const SimplexRef& rb) const;
};
ExternalProduct external_product(SSetPtr k, SSetPtr l);

/// The constant-horizontal bisimplicial set Δ^0 □ M: every horizontal
/// level is M, horizontal operators are identities.
ExternalProduct const_geo(SSetPtr m);

/// Restriction along the diagonal: level n is the set of (n,n)-bisimplices
/// with diagonal operators.
struct DiagonalRestriction {
    BiSSetPtr from;
    SSetPtr complex;
    LevelData lv;
    Normalized norm;
    std::vector<std::vector<BiSimplexRef>> elems;     // per level
    std::vector<std::map<BiSimplexRef, int>> index;   // biref -> element
    SimplexRef ref_of(const BiSimplexRef& r) const;
};
DiagonalRestriction diag_restrict(BiSSetPtr x);

/// Left Kan extension along the diagonal, presented by canonical triples
/// (z, α, β): a nondegenerate simplex of K with a jointly surjective pair
/// of monomorphisms into its vertex positions. For representables this is
/// the external square Δ^n □ Δ^n.
struct DiagTriple {
    int zdim = 0, zid = 0;
    DeltaMap alpha, beta;
    friend auto operator<=>(const DiagTriple&, const DiagTriple&) = default;
};
struct DiagonalExtension {
    SSetPtr base;
    BiSSetPtr complex;
    std::vector<std::vector<std::vector<DiagTriple>>> cells;  // [j][k]
    std::vector<std::vector<std::map<DiagTriple, int>>> index;
    BiSimplexRef canonical_triple(int zdim, int zid, const DeltaMap& a,
                                  const DeltaMap& b) const;
};
DiagonalExtension diag_extend(SSetPtr k);

/// Counit of diag_extend ⊣ diag_restrict at const_geo: collapses the
/// horizontal coordinate, keeping the vertical composite.
BiSimplicialMap counit_map(const DiagonalExtension& de, const ExternalProduct& cg);

/// Pointwise closed form for the diagonal extension of a horn: pairs
/// (α, β) of operators into [n] missing a common vertex other than i.
struct HornClosedForm {
    int n = 0, i = 0;
    BiSSetPtr complex;
    std::vector<std::vector<std::vector<std::pair<DeltaMap, DeltaMap>>>> cells;  // monos
    std::vector<std::vector<std::map<std::pair<DeltaMap, DeltaMap>, int>>> index;
    BiSimplexRef ref_of_pair(const DeltaMap& a, const DeltaMap& b) const;
};
HornClosedForm horn_closed_form(int n, int i);

/// Explicit comparison diag_extend(Λ^n_i) -> horn_closed_form(n, i);
/// an isomorphism, checked cell by cell by the caller.
BiSimplicialMap horn_comparison(const DiagonalExtension& de, const HornClosedForm& cf);

/// One-index slices with conversion tables.
struct LevelSlice {
    BiSSetPtr from;
    bool fixed_is_horizontal = true;
    int fixed = 0;
    SSetPtr complex;
    LevelData lv;
    Normalized norm;
    std::vector<std::vector<BiSimplexRef>> elems;
    std::vector<std::map<BiSimplexRef, int>> index;
    SimplexRef ref_of(const BiSimplexRef& r) const;
};
LevelSlice horizontal_level(BiSSetPtr x, int j);  // vertical sset at degree j
LevelSlice vertical_level(BiSSetPtr x, int k);    // horizontal sset at degree k

/// Induced map on matching slices (same fixed direction and degree).
SimplicialMap level_map(const BiSimplicialMap& f, const LevelSlice& src,
                        const LevelSlice& dst);

/// Map between slices of one object induced by an operator on the fixed
/// index (contravariant: op : [fixed'] -> [fixed]).
SimplicialMap slice_operator(const LevelSlice& src, const LevelSlice& dst, const DeltaMap& op);

/// The subcomplex of Δ^n of simplices whose vertex set does not contain
/// all of t_complement. Rejects an empty t_complement.
SimplicialSet fiber_subcomplex(int n, const std::vector<int>& t_complement);

/// Generalized matching object: the end of vertical levels weighted by a
/// finite simplicial set, computed as map sets into the vertical slices.
struct MatchObject {
    SSetPtr weight;
    BiSSetPtr target;
    std::vector<LevelSlice> slices;  // vertical slices of the target
    std::vector<std::vector<SimplicialMap>> level_elems;
    std::vector<std::map<std::vector<std::vector<SimplexRef>>, int>> index;
    LevelData lv;
    Normalized norm;
    SSetPtr complex;
    int element_of(const SimplicialMap& f, int level) const;
};
MatchObject match_object(SSetPtr weight, BiSSetPtr y, int min_levels = -1);

/// Restriction along a weight map (contravariant).
SimplicialMap match_restrict(const MatchObject& of_big, const MatchObject& of_small,
                             const SimplicialMap& weight_map);
/// Pushforward along a map of targets with a common weight.
SimplicialMap match_push(const MatchObject& src, const MatchObject& dst,
                         const BiSimplicialMap& f);

/// Strict pullback of simplicial sets along f : A -> C, g : B -> C.
struct SSetPullback {
    SSetPtr object;
    SimplicialMap to_left, to_right;
    LevelData lv;
    Normalized norm;
    std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> elems;
    std::vector<std::map<std::pair<SimplexRef, SimplexRef>, int>> index;
    SimplicialMap pair(const SimplicialMap& u, const SimplicialMap& v) const;
};
SSetPullback sset_pullback(const SimplicialMap& f, const SimplicialMap& g);

/// Levelwise π0 of the horizontal levels, as a simplicial set.
struct LevelwisePi0 {
    BiSSetPtr from;
    SSetPtr complex;
};
LevelwisePi0 levelwise_pi0(BiSSetPtr y);

/// The π0-level fibration probe: per horn inclusion up to max_n, checks
/// π0-surjectivity of Y_n -> Match_Λ(Y) ×_{Match_Λ(Z)} Z_n.
struct HornProbe {
    int n = 0, i = 0;
    bool pi0_surjective = false;
    int source_components = 0;
    int pullback_components = 0;
};
struct Pi0FibrationReport {
    int checked_up_to = 0;
    std::vector<HornProbe> horns;
    bool all_pass() const;
    // strict-limit caveat propagated into every report that embeds this
    static const char* caveat();
};
Pi0FibrationReport pi0_fibration_probe(const BiSimplicialMap& f, int max_n);

}  // namespace kqr
