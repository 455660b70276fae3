#pragma once

#include "kqr/hom_search.hpp"
#include "kqr/sset.hpp"

namespace kqr {

/// A named set of generating monomorphisms with a dimension cap.
struct GeneratingSet {
    enum class Name { I_KQ, J_KQ, Custom };
    Name name = Name::Custom;
    std::vector<SimplicialMap> members;
    int dim_cap = 0;

    std::string label() const;
};

GeneratingSet boundary_set(int dim_cap);  // ∂Δ^n -> Δ^n, 0 <= n <= cap
GeneratingSet horn_set(int dim_cap);      // Λ^n_i -> Δ^n, 1 <= n <= cap

/// A commutative square with a strict commutation check at construction.
struct LiftingProblem {
    SimplicialMap left;    // A -> B
    SimplicialMap right;   // X -> Y
    SimplicialMap top;     // A -> X
    SimplicialMap bottom;  // B -> Y

    LiftingProblem(SimplicialMap l, SimplicialMap r, SimplicialMap t, SimplicialMap b);
};

/// Exhaustive diagonal-filler search; returns the lexicographically least
/// lift if one exists, and a definitive absence otherwise.
std::optional<SimplicialMap> find_lift(const LiftingProblem& p);

/// Right-lifting-property certificate of f against every commuting square
/// from the generating set.
struct RlpSquare {
    int member = 0;
    SimplicialMap top, bottom;
    std::optional<SimplicialMap> lift;
};
struct RlpCertificate {
    bool holds = false;
    long long squares_checked = 0;
    std::vector<RlpSquare> squares;        // witnesses, in enumeration order
    std::optional<RlpSquare> first_failure;
};
RlpCertificate has_rlp(const SimplicialMap& f, const GeneratingSet& g,
                       bool keep_witnesses = true);

/// All commuting squares from member g to f, in canonical order.
std::vector<std::pair<SimplicialMap, SimplicialMap>> commuting_squares(
    const SimplicialMap& g, const SimplicialMap& f);

}  // namespace kqr
