#pragma once

#include "kqr/extension.hpp"
#include "kqr/lifting.hpp"

namespace kqr {

/// Bounded Kan condition: every horn map in dimensions <= checked_up_to is
/// tested for a strict filler. Only "Kan up to N" is ever claimed.
struct HornReport {
    int n = 0, i = 0;
    long long total = 0;
    long long unfilled = 0;
};
struct KanReport {
    int checked_up_to = 0;
    std::vector<HornReport> horns;
    long long deficit() const;
    bool kan_up_to() const { return deficit() == 0; }
};

KanReport kan_check(SSetPtr k, int max_dim);
KanReport kan_check(const TruncatedSSet& k, int max_dim);

/// Filler for a single horn map, if any. The table form precomputes the
/// candidate simplices with their faces for repeated queries.
struct FillTable {
    std::vector<SimplexRef> refs;
    std::vector<std::vector<SimplexRef>> faces;
};
FillTable make_fill_table(const SimplicialSet& k, int n);
std::optional<SimplexRef> fill_horn(const SimplicialSet& k, int n, int i,
                                    const SimplicialMap& h);
std::optional<SimplexRef> fill_horn(const FillTable& t, int n, int i,
                                    const SimplicialMap& h);

/// Horn-extension engine behind the fibrancy of the extension tower: a map
/// Λ^n_i -> Ex(Y) always extends over Δ^n after one more application of
/// Ex, through the unit. Failure indicates an implementation bug and
/// aborts with diagnostics.
struct ExExtensionWitness {
    SimplexRef filler;         // n-simplex of Ex^2(Y)
    SimplicialMap extension;   // Δ^n -> Ex^2(Y)
};
ExExtensionWitness ex_extension_check(const ExtensionComplex& ex_y,
                                      const ExtensionComplex& ex2_y, int n, int i,
                                      const SimplicialMap& h);

}  // namespace kqr
