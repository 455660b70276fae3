#include "kqr/kan.hpp"

#include <sstream>

namespace kqr {

FillTable make_fill_table(const SimplicialSet& k, int n) {
    FillTable t;
    t.refs = k.refs(n);
    t.faces.resize(t.refs.size());
    for (size_t c = 0; c < t.refs.size(); ++c)
        for (int j = 0; j <= n; ++j) t.faces[c].push_back(k.face_of(t.refs[c], j));
    return t;
}

std::optional<SimplexRef> fill_horn(const FillTable& t, int n, int i,
                                    const SimplicialMap& h) {
    // Horn cells at dimension n-1 are the faces of the simplex in
    // lexicographic subset order, skipping the face opposite i;
    // lexicographic order of the subsets corresponds to decreasing j.
    std::vector<std::pair<int, int>> conditions;  // (face index j, horn cell id)
    int cell = 0;
    for (int j = n; j >= 0; --j) {
        if (j == i) continue;
        conditions.push_back({j, cell++});
    }
    for (size_t c = 0; c < t.refs.size(); ++c) {
        bool ok = true;
        for (const auto& [j, y] : conditions) {
            if (t.faces[c][j] != h.at(n - 1, y)) { ok = false; break; }
        }
        if (ok) return t.refs[c];
    }
    return std::nullopt;
}


long long KanReport::deficit() const {
    long long d = 0;
    for (const auto& h : horns) d += h.unfilled;
    return d;
}

std::optional<SimplexRef> fill_horn(const SimplicialSet& k, int n, int i,
                                    const SimplicialMap& h) {
    FillTable t = make_fill_table(k, n);
    return fill_horn(t, n, i, h);
}

namespace {

KanReport kan_check_impl(SSetPtr k, int max_dim) {
    KanReport rep;
    rep.checked_up_to = max_dim;
    for (int n = 1; n <= max_dim; ++n) {
        FillTable table = make_fill_table(*k, n);
        for (int i = 0; i <= n; ++i) {
            HornReport hr{n, i, 0, 0};
            auto hornc = share(horn(n, i));
            for (const auto& h : enumerate_maps(hornc, k)) {
                ++hr.total;
                if (!fill_horn(table, n, i, h)) ++hr.unfilled;
            }
            rep.horns.push_back(hr);
        }
    }
    return rep;
}

}  // namespace

KanReport kan_check(SSetPtr k, int max_dim) { return kan_check_impl(k, max_dim); }

KanReport kan_check(const TruncatedSSet& k, int max_dim) {
    if (max_dim > k.trunc_dim)
        throw ResourceCapError("kan_check: truncation too shallow for requested depth");
    return kan_check_impl(k.underlying, max_dim);
}

ExExtensionWitness ex_extension_check(const ExtensionComplex& ex_y,
                                      const ExtensionComplex& ex2_y, int n, int i,
                                      const SimplicialMap& h) {
    SimplicialMap u = unit_map(ex_y.complex.underlying, ex2_y);
    SimplicialMap uh = compose(u, h);
    auto filler = fill_horn(*ex2_y.complex.underlying, n, i, uh);
    if (!filler) {
        std::ostringstream os;
        os << "ex_extension_check: no extension for a horn (" << n << "," << i
           << ") map; this contradicts the horn-extension property of the "
              "extension tower and indicates an implementation bug";
        throw std::logic_error(os.str());
    }
    ExExtensionWitness w;
    w.filler = *filler;
    w.extension = simplex_as_map(ex2_y.complex.underlying, *filler);
    return w;
}

}  // namespace kqr
