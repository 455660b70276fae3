#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "kqr/sset.hpp"

namespace kqr {

using Int = boost::multiprecision::cpp_int;

/// Normalized chain complex: free integer modules on nondegenerate
/// simplices, boundaries with alternating signs, degenerate faces dropped.
struct ChainComplex {
    std::vector<int> ranks;  // ranks[d]
    // bnd[d]: per column, the nonzero (row, coefficient) entries of the
    // boundary of the corresponding d-simplex
    std::vector<std::vector<std::vector<std::pair<int, Int>>>> bnd;

    void check_dd_zero() const;  // ∂∂ = 0, throws on failure
};

ChainComplex normalized_chains(const SimplicialSet& k);

struct SmithResult {
    std::vector<Int> diagonal;  // invariant factors, dividing in sequence
    int rank = 0;
};
/// Smith normal form by unimodular row/column operations over a sparse
/// representation, smallest nonzero pivot first. Exact arithmetic.
SmithResult smith_normal_form(std::vector<std::vector<Int>> m);
SmithResult smith_normal_form_sparse(int rows, int cols,
                                     const std::vector<std::vector<std::pair<int, Int>>>& columns);

struct HomologyResult {
    std::vector<int> betti;                  // unreduced, per dimension
    std::vector<std::vector<Int>> torsion;   // invariant factors > 1, per dimension
    int reduced_betti(int d) const;
    bool reduced_trivial() const;            // all reduced homology zero
    std::string brief() const;
};

HomologyResult homology(const SimplicialSet& k);

/// Vertex partition by the coequalizer of the 1-simplex endpoint maps.
/// Deterministic: each class is represented by its least vertex id.
struct Pi0 {
    std::vector<int> class_of;        // per vertex
    std::vector<int> representative;  // per class, ascending
    int classes() const { return (int)representative.size(); }
};
Pi0 pi0(const SimplicialSet& k);

/// Weak-equivalence oracle: π0 bijection plus an integral homology
/// isomorphism in every degree, decided through the mapping cone of the
/// normalized chain map. Necessary for a weak equivalence, and conclusive
/// on the simply connected / cone-shaped inputs this suite works with.
struct EquivalenceVerdict {
    bool pi0_bijective = false;
    bool homology_iso = false;
    int failing_degree = -1;  // lowest degree with nonvanishing cone homology
    bool ok() const { return pi0_bijective && homology_iso; }
    std::string oracle_name() const { return "pi0-bijection+homology-iso(mapping-cone)"; }
};
EquivalenceVerdict is_homology_equivalence(const SimplicialMap& f);

/// Elementary collapse certificate: ordered (free face, coface) pairs
/// whose removal, replayed from the input, ends at a single vertex.
struct CollapseCertificate {
    struct Pair {
        int free_dim, free_id;  // the free face
        int coface_id;          // its unique coface at free_dim+1
    };
    std::vector<Pair> pairs;
};
std::optional<CollapseCertificate> collapse_search(const SimplicialSet& k, int budget);
bool replay_collapses(const SimplicialSet& k, const CollapseCertificate& cert);

/// Edge-path group presentation relative to a spanning tree. Generators
/// are off-tree nondegenerate edges; relators come from nondegenerate
/// 2-simplices. Free reduction only; no triviality claims.
struct GroupPresentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;  // words in ±(g+1)
    bool restricted_to_base_component = false;
    std::string brief() const;
};
GroupPresentation edge_path_presentation(const SimplicialSet& k, int base_vertex);

}  // namespace kqr
