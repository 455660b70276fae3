#include "kqr/hom_search.hpp"

#include <algorithm>

namespace kqr {

MapConstraints MapConstraints::none(const SimplicialSet& source) {
    MapConstraints c;
    c.pinned.resize(source.top_dim() + 1);
    for (int d = 0; d <= source.top_dim(); ++d) c.pinned[d].resize(source.count(d));
    return c;
}

namespace {

struct Searcher {
    const SimplicialSet& k;
    const SimplicialSet& l;
    SSetPtr kp, lp;
    const MapConstraints& cons;
    std::int64_t limit;
    std::vector<SimplicialMap>* out;

    std::vector<std::vector<SimplexRef>> assign;
    std::vector<std::vector<SimplexRef>> candidates;            // refs of L per dim
    std::vector<std::vector<std::vector<SimplexRef>>> cfaces;   // faces per candidate
    std::vector<std::pair<int, int>> order;                     // face-closure order
    std::int64_t found = 0;

    // Cells are visited in a face-closure order that interleaves low
    // dimensions with the cells they bound, so wrong partial assignments
    // prune early. The order is a fixed function of the source complex.
    void build_order() {
        std::vector<std::vector<bool>> seen(k.top_dim() + 1);
        for (int d = 0; d <= k.top_dim(); ++d) seen[d].assign(k.count(d), false);
        auto emit = [&](auto&& self, int d, int x) -> void {
            if (seen[d][x]) return;
            if (d > 0)
                for (int i = 0; i <= d; ++i) {
                    const SimplexRef& r = k.face(d, x, i);
                    self(self, r.base_dim, r.id);
                }
            seen[d][x] = true;
            order.push_back({d, x});
        };
        for (int d = k.top_dim(); d >= 0; --d)
            for (int x = 0; x < k.count(d); ++x) emit(emit, d, x);
    }

    bool prepare() {
        assign.resize(k.top_dim() + 1);
        candidates.resize(k.top_dim() + 1);
        cfaces.resize(k.top_dim() + 1);
        for (int d = 0; d <= k.top_dim(); ++d) {
            assign[d].resize(k.count(d));
            candidates[d] = l.refs(d);
            if (k.count(d) > 0 && candidates[d].empty()) return false;
            cfaces[d].resize(candidates[d].size());
            if (d > 0)
                for (size_t c = 0; c < candidates[d].size(); ++c)
                    for (int i = 0; i <= d; ++i)
                        cfaces[d][c].push_back(l.face_of(candidates[d][c], i));
        }
        build_order();
        return true;
    }

    SimplexRef image_of_face(const SimplexRef& fx) {
        const SimplexRef& base_img = assign[fx.base_dim][fx.id];
        if (fx.epi.empty()) return base_img;
        return l.act(base_img, epi_of_word(fx.dim(), fx.epi));
    }

    bool run(size_t t) {  // returns false to stop the whole search
        if (t == order.size()) {
            ++found;
            if (out) out->push_back(SimplicialMap{kp, lp, assign});
            return limit < 0 || found < limit;
        }
        auto [d, x] = order[t];
        std::vector<SimplexRef> want;
        if (d > 0)
            for (int i = 0; i <= d; ++i) want.push_back(image_of_face(k.face(d, x, i)));
        for (size_t c = 0; c < candidates[d].size(); ++c) {
            const SimplexRef& y = candidates[d][c];
            if (d > 0 && cfaces[d][c] != want) continue;
            if (!cons.pinned.empty()) {
                bool ok = true;
                for (const auto& [w, v] : cons.pinned[d][x]) {
                    SimplexRef got = w.empty() ? y : l.act(y, epi_of_word(d + (int)w.size(), w));
                    if (got != v) { ok = false; break; }
                }
                if (!ok) continue;
            }
            if (cons.filter && !cons.filter(d, x, y)) continue;
            assign[d][x] = y;
            if (!run(t + 1)) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<SimplicialMap> enumerate_maps(SSetPtr k, SSetPtr l, const MapConstraints& c,
                                          std::int64_t limit) {
    std::vector<SimplicialMap> out;
    Searcher s{*k, *l, k, l, c, limit, &out};
    if (!s.prepare()) return out;
    s.run(0);
    return out;
}

std::vector<SimplicialMap> enumerate_maps(SSetPtr k, SSetPtr l) {
    return enumerate_maps(k, l, MapConstraints::none(*k));
}

std::int64_t count_maps(SSetPtr k, SSetPtr l) {
    Searcher s{*k, *l, k, l, MapConstraints::none(*k), -1, nullptr};
    if (!s.prepare()) return 0;
    s.run(0);
    return s.found;
}

std::optional<SimplicialMap> first_map(SSetPtr k, SSetPtr l, const MapConstraints& c) {
    auto v = enumerate_maps(k, l, c, 1);
    if (v.empty()) return std::nullopt;
    return v.front();
}

MapConstraints extension_constraints(const SimplicialMap& g, const SimplicialMap& t) {
    // h : B -> X with h(g(a)) = t(a) for all nondegenerate a of A.
    // g(a) = (b, w): pin b with word w to value t(a).
    MapConstraints c = MapConstraints::none(*g.target);
    const SimplicialSet& a = *g.source;
    for (int d = 0; d <= a.top_dim(); ++d) {
        for (int x = 0; x < a.count(d); ++x) {
            const SimplexRef& img = g.at(d, x);
            c.pinned[img.base_dim][img.id].push_back({img.epi, t.at(d, x)});
        }
    }
    return c;
}

std::vector<SimplicialMap> enumerate_extensions(const SimplicialMap& g, const SimplicialMap& t) {
    return enumerate_maps(g.target, t.target, extension_constraints(g, t));
}

}  // namespace kqr
