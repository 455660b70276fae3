#pragma once

#include <map>

#include "kqr/level_data.hpp"
#include "kqr/sset.hpp"

namespace kqr {

/// Normal form of a bisimplex: a nondegenerate cell at bidegree (jb, kb)
/// with one degeneracy word per direction. The first index is horizontal,
/// the second vertical.
struct BiSimplexRef {
    int jb = 0, kb = 0;
    int id = 0;
    EpiWord epi_h, epi_v;

    int jdim() const { return jb + (int)epi_h.size(); }
    int kdim() const { return kb + (int)epi_v.size(); }
    friend auto operator<=>(const BiSimplexRef&, const BiSimplexRef&) = default;
};

/// A finite bisimplicial set presented by nondegenerate bisimplices with
/// two face families in normal form. Horizontal and vertical operators
/// commute; validate() audits the identities in both directions and the
/// interchange law.
class BiSimplicialSet {
  public:
    BiSimplicialSet() = default;
    BiSimplicialSet(std::vector<std::vector<int>> counts,
                    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> faces_h,
                    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> faces_v);

    int top_h() const { return (int)counts_.size() - 1; }
    int top_v() const { return counts_.empty() ? -1 : (int)counts_[0].size() - 1; }
    bool empty() const { return counts_.empty(); }
    int count(int j, int k) const;
    int total_nondeg() const;

    const BiSimplexRef& face_h(int j, int k, int x, int i) const { return faces_h_[j][k][x][i]; }
    const BiSimplexRef& face_v(int j, int k, int x, int i) const { return faces_v_[j][k][x][i]; }

    /// Apply a pair of simplicial operators in normal form.
    BiSimplexRef act(int j, int k, int x, const DeltaMap& fh, const DeltaMap& fv) const;
    BiSimplexRef act(const BiSimplexRef& r, const DeltaMap& fh, const DeltaMap& fv) const;
    BiSimplexRef face_h_of(const BiSimplexRef& r, int i) const;
    BiSimplexRef face_v_of(const BiSimplexRef& r, int i) const;

    /// All bisimplices at bidegree (j, k), canonical order.
    std::vector<BiSimplexRef> refs(int j, int k) const;
    bool has_ref(const BiSimplexRef& r) const;

    void validate() const;

  private:
    // counts_[j][k]; faces indexed [j][k][x][i]
    std::vector<std::vector<int>> counts_;
    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> faces_h_;
    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> faces_v_;
};

using BiSSetPtr = std::shared_ptr<const BiSimplicialSet>;

inline BiSSetPtr share(BiSimplicialSet s) {
    return std::make_shared<const BiSimplicialSet>(std::move(s));
}

struct BiSimplicialMap {
    BiSSetPtr source, target;
    // assign[j][k][x]
    std::vector<std::vector<std::vector<BiSimplexRef>>> assign;

    const BiSimplexRef& at(int j, int k, int x) const { return assign[j][k][x]; }
    BiSimplexRef apply(const BiSimplexRef& r) const;
    void validate() const;
};

BiSimplicialMap identity_bimap(BiSSetPtr x);
BiSimplicialMap compose(const BiSimplicialMap& g, const BiSimplicialMap& f);
bool same_bimap(const BiSimplicialMap& f, const BiSimplicialMap& g);

/// All bisimplicial maps X -> W (exhaustive backtracking).
std::vector<BiSimplicialMap> enumerate_bimaps(BiSSetPtr x, BiSSetPtr w);

}  // namespace kqr
