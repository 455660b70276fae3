#pragma once

#include "kqr/level_data.hpp"
#include "kqr/sset.hpp"

namespace kqr {

struct Coproduct {
    SSetPtr sum;
    std::vector<SimplicialMap> legs;
};
Coproduct coproduct(const std::vector<SSetPtr>& parts);

/// Pushout of B <-f- A -g-> C, computed levelwise by congruence closure on
/// normal forms and re-normalized (identifications can create new
/// degeneracies). Class representatives are lexicographically least
/// members, B-side before C-side.
struct Pushout {
    SSetPtr object;
    SimplicialMap from_b;
    SimplicialMap from_c;
    /// Mediating map to t for a co-cone (u : B -> T, v : C -> T).
    SimplicialMap mediate(const SimplicialMap& u, const SimplicialMap& v) const;

    // internals kept for mediation/replay
    std::shared_ptr<const struct PushoutData> data;
};
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g);

struct ProductResult {
    SSetPtr object;
    SimplicialMap to_left, to_right;
    /// Pairing <u, v> : T -> K x L.
    SimplicialMap pair(const SimplicialMap& u, const SimplicialMap& v) const;
    std::shared_ptr<const struct ProductData> data;
};
ProductResult product(SSetPtr k, SSetPtr l);

/// K/A for a subcomplex inclusion: the pushout of A -> Δ^0 along A -> K.
struct QuotientResult {
    SSetPtr object;
    SimplicialMap projection;  // K -> K/A
    SimplexRef base_point;     // class of the collapsed subcomplex
};
QuotientResult quotient(const SimplicialMap& inclusion);
QuotientResult quotient(SSetPtr k, const std::vector<std::vector<int>>& sub_ids);

/// The minimal sphere model Δ^n/∂Δ^n.
SSetPtr sphere_model(int n);

/// (K x Δ^1)/(K x {1}) together with the end inclusion K ≅ K x {0}.
struct Cylinder {
    SSetPtr object;
    SimplicialMap inclusion;  // K -> M
};
Cylinder cylinder_quotient(SSetPtr k);

/// Skeletal cell decomposition of a monomorphism: attach the nondegenerate
/// simplices of B missing from A in increasing dimension.
struct CellAttachment {
    int dim = 0;
    SimplicialMap attach;  // ∂Δ^n -> current stage
};
struct CellPresentation {
    std::vector<CellAttachment> cells;
};
CellPresentation cell_presentation(const SimplicialMap& mono);

/// Replay a presentation by pushouts; returns the final stage and the
/// comparison with the original target (built alongside, cell by cell).
struct CellReplay {
    SSetPtr stage;
    SimplicialMap from_a;      // A -> stage
    SimplicialMap comparison;  // stage -> B, an isomorphism when faithful
    bool comparison_is_iso = false;
};
CellReplay replay_cells(const SimplicialMap& mono, const CellPresentation& pres);

}  // namespace kqr
