#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kqr/delta.hpp"

namespace kqr {

/// Eilenberg-Zilber normal form of a simplex: a nondegenerate simplex
/// (base_dim, id) together with the degeneracy word applied to it.
struct SimplexRef {
    int base_dim = 0;
    int id = 0;
    EpiWord epi;  // strictly increasing collapsed positions, each < dim()

    int dim() const { return base_dim + (int)epi.size(); }
    bool degenerate() const { return !epi.empty(); }

    friend auto operator<=>(const SimplexRef& a, const SimplexRef& b) {
        if (auto c = a.dim() <=> b.dim(); c != 0) return c;
        if (auto c = a.base_dim <=> b.base_dim; c != 0) return c;
        if (auto c = a.id <=> b.id; c != 0) return c;
        return a.epi <=> b.epi;
    }
    bool operator==(const SimplexRef&) const = default;
};

/// A finite simplicial set presented by its nondegenerate simplices.
/// counts[d] is the number of nondegenerate d-simplices; face(d,x,i) is
/// the i-th face of the x-th nondegenerate d-simplex, already in normal
/// form. Values are immutable after construction.
class SimplicialSet {
  public:
    SimplicialSet() = default;
    SimplicialSet(std::vector<int> counts,
                  std::vector<std::vector<std::vector<SimplexRef>>> faces);

    int top_dim() const { return (int)counts_.size() - 1; }  // -1 if empty
    bool empty() const { return counts_.empty(); }
    int count(int d) const {
        return (d >= 0 && d <= top_dim()) ? counts_[d] : 0;
    }
    int total_nondeg() const;
    const SimplexRef& face(int d, int x, int i) const { return faces_[d][x][i]; }

    /// Apply a simplicial operator: the simplex (base nondeg x at dim d)
    /// precomposed with f : [q] -> [d], in normal form.
    SimplexRef act(int d, int x, const DeltaMap& f) const;
    SimplexRef act(const SimplexRef& r, const DeltaMap& f) const;
    SimplexRef face_of(const SimplexRef& r, int i) const;
    SimplexRef degeneracy_of(const SimplexRef& r, int j) const;

    /// All simplices of dimension d (nondegenerate and degenerate), in
    /// canonical order: (base_dim asc, id asc, epi lex).
    std::vector<SimplexRef> refs(int d) const;
    bool has_ref(const SimplexRef& r) const;

    /// Structural validity plus the full simplicial-identities audit
    /// (d_i d_j = d_{j-1} d_i for i < j, on every simplex up to
    /// top_dim()+1, evaluated through normal-form arithmetic).
    void validate() const;

  private:
    std::vector<int> counts_;
    std::vector<std::vector<std::vector<SimplexRef>>> faces_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

inline SSetPtr share(SimplicialSet s) {
    return std::make_shared<const SimplicialSet>(std::move(s));
}

/// A simplicial map, given on nondegenerate simplices of the source.
struct SimplicialMap {
    SSetPtr source;
    SSetPtr target;
    std::vector<std::vector<SimplexRef>> assign;  // [d][x] -> ref in target

    const SimplexRef& at(int d, int x) const { return assign[d][x]; }
    SimplexRef apply(const SimplexRef& r) const;
    void validate() const;  // commutation with all face maps
    bool is_mono() const;   // injective on nondegenerate simplices
    bool operator==(const SimplicialMap& o) const {
        return assign == o.assign && source.get() == o.source.get() &&
               target.get() == o.target.get();
    }
};

SimplicialMap identity_map(SSetPtr k);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
bool same_map(const SimplicialMap& f, const SimplicialMap& g);  // pointwise

/// ---- standard complexes ----------------------------------------------

/// Nerve of [n]: nondegenerate k-simplices are the (k+1)-subsets of
/// {0..n}, ordered lexicographically.
SimplicialSet standard_simplex(int n);
SimplicialSet boundary(int n);       // drop the top cell (empty for n = 0)
SimplicialSet horn(int n, int i);    // also drop the i-th face; n >= 1
SimplicialSet empty_sset();

SSetPtr shared_simplex(int n);  // memoized standard simplices

SimplicialMap boundary_inclusion(int n);       // ∂Δ^n -> Δ^n
SimplicialMap horn_inclusion(int n, int i);    // Λ^n_i -> Δ^n

/// Subset-indexed simplex lookup inside standard_simplex / boundary / horn:
/// the id of the face with the given vertex set.
int face_id_of_subset(int n, const std::vector<int>& subset);
std::vector<int> subset_of_face_id(int n, int k, int id);

/// Vertex subsets of each cell, aligned with the cell ids.
std::vector<std::vector<std::vector<int>>> simplex_cell_subsets(int n);
std::vector<std::vector<std::vector<int>>> horn_cell_subsets(int n, int i);

/// The map Δ^m -> Δ^n induced by a monotone map on vertices.
SimplicialMap delta_as_map(const DeltaMap& f);

/// The map Δ^d -> K classifying a simplex of K.
SimplicialMap simplex_as_map(SSetPtr k, const SimplexRef& r);

/// The unique map K -> Δ^0.
SimplicialMap terminal_map(SSetPtr k);

/// The subcomplex spanned by listed nondegenerate simplices (which must be
/// face-closed; throws otherwise), with its inclusion. keep[d] lists ids.
SimplicialMap subcomplex_inclusion(SSetPtr k, const std::vector<std::vector<int>>& keep);

/// Image of a mono as a subcomplex selector on the target.
std::vector<std::vector<int>> mono_image(const SimplicialMap& f);

}  // namespace kqr
