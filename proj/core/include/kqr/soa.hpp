#pragma once

#include "kqr/colimits.hpp"
#include "kqr/lifting.hpp"

namespace kqr {

/// One attachment inside a small-object-argument round: the member of the
/// generating set and the attaching map of its source into the stage the
/// round started from.
struct SoaAttachment {
    int round = 0;
    int member = 0;
    SimplicialMap attach;  // src(member) -> stage before the round
};

struct UnsolvedSquare {
    int member = 0;
    SimplicialMap top, bottom;
};

/// Factorization produced by the bounded small object argument: a relative
/// cell map followed by a map whose lifting certificate is checked by
/// has_rlp. Residual squares are reported when the round cap is reached
/// before a fixed point.
struct Factorization {
    SSetPtr middle;
    SimplicialMap first;    // source(f) -> middle, relative cell map
    SimplicialMap second;   // middle -> target(f)
    std::vector<SoaAttachment> trace;
    int rounds_used = 0;
    bool fixed_point = false;
    std::vector<UnsolvedSquare> residual;
};

/// Bounded small object argument: per round, one simultaneous
/// coproduct-pushout over every strictly-enumerated unsolved square.
Factorization soa_factorize(const SimplicialMap& f, const GeneratingSet& g, int round_cap);

/// Re-run the trace through coproducts and pushouts; true when the result
/// equals the recorded middle object cell-for-cell.
bool replay_soa(const SimplicialMap& f, const GeneratingSet& g, const Factorization& fact);

}  // namespace kqr
