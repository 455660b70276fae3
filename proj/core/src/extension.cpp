#include "kqr/extension.hpp"

#include <sstream>

#include "kqr/hom_search.hpp"

namespace kqr {

int ExtensionComplex::element_of_map(const SimplicialMap& f) const {
    int n = f.source->top_dim();
    const auto& idx = element_index[n];
    auto it = idx.find(f.assign);
    return it == idx.end() ? -1 : it->second;
}

const SimplicialMap& ExtensionComplex::map_of_ref(const SimplexRef& r, SimplexRef*) const {
    if (!r.epi.empty()) throw std::runtime_error("map_of_ref: ref must be nondegenerate");
    int e = norm.elem_of_nondeg[r.base_dim][r.id];
    return level_maps[r.base_dim][e];
}

namespace {

ExtensionComplex ex_impl(SSetPtr k, int input_trunc, int trunc_dim, const ExCaps& caps) {
    if (trunc_dim > input_trunc)
        throw ResourceCapError("ex: input truncation too shallow for requested depth");
    ExtensionComplex out;
    out.base = k;
    out.trunc_dim = trunc_dim;
    out.level_maps.resize(trunc_dim + 1);
    out.element_index.resize(trunc_dim + 1);
    LevelData& lv = out.levels;
    lv.sizes.resize(trunc_dim + 1);
    lv.face.resize(trunc_dim + 1);
    lv.degen.resize(trunc_dim + 1);
    for (int n = 0; n <= trunc_dim; ++n) {
        out.level_maps[n] = enumerate_maps(shared_sd_simplex(n).complex, k);
        lv.sizes[n] = (int)out.level_maps[n].size();
        if ((std::int64_t)lv.sizes[n] > caps.level_cap) {
            std::ostringstream os;
            os << "ex: level " << n << " has " << lv.sizes[n] << " elements, cap "
               << caps.level_cap;
            throw ResourceCapError(os.str());
        }
        for (int e = 0; e < lv.sizes[n]; ++e)
            out.element_index[n][out.level_maps[n][e].assign] = e;
    }
    for (int n = 0; n <= trunc_dim; ++n) {
        if (n >= 1) {
            lv.face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i) {
                SimplicialMap op = sd_of_delta(delta_face(n, i));
                lv.face[n][i].resize(lv.sizes[n]);
                for (int e = 0; e < lv.sizes[n]; ++e) {
                    SimplicialMap comp = compose(out.level_maps[n][e], op);
                    auto it = out.element_index[n - 1].find(comp.assign);
                    if (it == out.element_index[n - 1].end())
                        throw std::runtime_error("ex: face map left the level set");
                    lv.face[n][i][e] = it->second;
                }
            }
        }
        if (n < trunc_dim) {
            lv.degen[n].resize(n + 1);
            for (int j = 0; j <= n; ++j) {
                SimplicialMap op = sd_of_delta(delta_degeneracy(n, j));
                lv.degen[n][j].resize(lv.sizes[n]);
                for (int e = 0; e < lv.sizes[n]; ++e) {
                    SimplicialMap comp = compose(out.level_maps[n][e], op);
                    auto it = out.element_index[n + 1].find(comp.assign);
                    if (it == out.element_index[n + 1].end())
                        throw std::runtime_error("ex: degeneracy left the level set");
                    lv.degen[n][j][e] = it->second;
                }
            }
        }
    }
    out.norm = normalize(lv);
    out.complex = TruncatedSSet{share(out.norm.sset), trunc_dim};
    return out;
}

}  // namespace

ExtensionComplex ex(SSetPtr k, int trunc_dim, const ExCaps& caps) {
    return ex_impl(k, 1 << 28, trunc_dim, caps);
}

ExtensionComplex ex(const TruncatedSSet& k, int trunc_dim, const ExCaps& caps) {
    return ex_impl(k.underlying, k.trunc_dim, trunc_dim, caps);
}

SimplicialMap unit_map(SSetPtr k, const ExtensionComplex& ex_k) {
    if (k->top_dim() > ex_k.trunc_dim)
        throw ResourceCapError("unit_map: truncation too shallow for the source");
    SimplicialMap u;
    u.source = k;
    u.target = ex_k.complex.underlying;
    u.assign.resize(k->top_dim() + 1);
    for (int n = 0; n <= k->top_dim(); ++n) {
        for (int x = 0; x < k->count(n); ++x) {
            SimplicialMap m =
                compose(simplex_as_map(k, SimplexRef{n, x, {}}), shared_sd_simplex(n).last_vertex);
            int e = ex_k.element_of_map(m);
            if (e < 0) throw std::runtime_error("unit_map: transposed simplex not found");
            u.assign[n].push_back(ex_k.ref_of_element(n, e));
        }
    }
    return u;
}

SimplicialMap ex_map(const SimplicialMap& f, const ExtensionComplex& ex_k,
                     const ExtensionComplex& ex_l) {
    int trunc = std::min(ex_k.trunc_dim, ex_l.trunc_dim);
    if (ex_k.complex.underlying->top_dim() > trunc)
        throw ResourceCapError("ex_map: truncation too shallow");
    SimplicialMap out;
    out.source = ex_k.complex.underlying;
    out.target = ex_l.complex.underlying;
    out.assign.resize(ex_k.complex.underlying->top_dim() + 1);
    for (int n = 0; n <= ex_k.complex.underlying->top_dim(); ++n) {
        for (int id = 0; id < ex_k.complex.underlying->count(n); ++id) {
            int e = ex_k.norm.elem_of_nondeg[n][id];
            SimplicialMap comp = compose(f, ex_k.level_maps[n][e]);
            auto it = ex_l.element_index[n].find(comp.assign);
            if (it == ex_l.element_index[n].end())
                throw std::runtime_error("ex_map: image not found in target levels");
            out.assign[n].push_back(ex_l.ref_of_element(n, it->second));
        }
    }
    return out;
}

ExTower ex_tower(SSetPtr k, int stages, int trunc_dim, const ExCaps& caps) {
    ExTower t;
    TowerStage s0;
    s0.stage = 0;
    s0.complex = TruncatedSSet{k, trunc_dim};
    s0.unit_trace = identity_map(k);
    t.stages.push_back(s0);
    for (int i = 1; i <= stages; ++i) {
        const TowerStage& prev = t.stages.back();
        try {
            ExtensionComplex e = ex(prev.complex, trunc_dim, caps);
            SimplicialMap u = unit_map(prev.complex.underlying, e);
            TowerStage s;
            s.stage = i;
            s.complex = e.complex;
            s.unit_trace = compose(u, prev.unit_trace);
            t.extensions.push_back(std::move(e));
            t.stages.push_back(std::move(s));
        } catch (const ResourceCapError& err) {
            t.capped = true;
            t.cap_reason = err.what();
            break;
        }
    }
    return t;
}

SimplicialMap transpose_to_ex(const SimplicialMap& f, const SdComplex& sd_k,
                              const ExtensionComplex& ex_l) {
    SSetPtr k = sd_k.base;
    if (k->top_dim() > ex_l.trunc_dim)
        throw ResourceCapError("transpose: truncation too shallow");
    SimplicialMap out;
    out.source = k;
    out.target = ex_l.complex.underlying;
    out.assign.resize(k->top_dim() + 1);
    for (int n = 0; n <= k->top_dim(); ++n) {
        for (int x = 0; x < k->count(n); ++x) {
            SimplicialMap cell = simplex_as_map(k, SimplexRef{n, x, {}});
            SimplicialMap sd_cell = sd_map(cell, shared_sd_simplex(n), sd_k);
            SimplicialMap comp = compose(f, sd_cell);
            int e = ex_l.element_of_map(comp);
            if (e < 0) throw std::runtime_error("transpose_to_ex: element not found");
            out.assign[n].push_back(ex_l.ref_of_element(n, e));
        }
    }
    return out;
}

SimplicialMap transpose_to_sd(const SimplicialMap& g, const SdComplex& sd_k,
                              const ExtensionComplex& ex_l) {
    SimplicialMap out;
    out.source = sd_k.complex;
    out.target = ex_l.base;
    out.assign.resize(sd_k.complex->top_dim() + 1);
    for (int q = 0; q <= sd_k.complex->top_dim(); ++q) {
        for (const SdCell& cell : sd_k.cells[q]) {
            // g(z) is a level element of Ex(L), i.e. a map sd(Δ^p) -> L;
            // evaluate it on the chain, seen as a simplex of sd(Δ^p)
            SimplexRef gz = g.at(cell.zdim, cell.zid);
            int e = ex_l.norm.element_of(gz, ex_l.levels);
            const SimplicialMap& m = ex_l.level_maps[cell.zdim][e];
            SimplexRef chain_ref =
                shared_sd_simplex(cell.zdim).canonical_ref(cell.zdim, 0, cell.chain);
            out.assign[q].push_back(m.apply(chain_ref));
        }
    }
    return out;
}

AdjunctionWitness check_adjunction(SSetPtr k, SSetPtr l, int trunc_dim) {
    AdjunctionWitness w;
    if (k->top_dim() > trunc_dim) {
        w.failure = "truncation too shallow for the source";
        return w;
    }
    SdComplex sd_k = sd(k);
    ExtensionComplex ex_l = ex(l, std::max(0, trunc_dim));
    w.sd_side = enumerate_maps(sd_k.complex, l);
    w.ex_side = enumerate_maps(k, ex_l.complex.underlying);
    w.forward.assign(w.sd_side.size(), -1);
    w.backward.assign(w.ex_side.size(), -1);
    auto find_in = [](const std::vector<SimplicialMap>& v, const SimplicialMap& m) {
        for (size_t i = 0; i < v.size(); ++i)
            if (same_map(v[i], m)) return (int)i;
        return -1;
    };
    for (size_t i = 0; i < w.sd_side.size(); ++i) {
        SimplicialMap t = transpose_to_ex(w.sd_side[i], sd_k, ex_l);
        int j = find_in(w.ex_side, t);
        if (j < 0) {
            std::ostringstream os;
            os << "transpose of sd-side element " << i << " missing from ex-side";
            w.failure = os.str();
            return w;
        }
        w.forward[i] = j;
    }
    for (size_t j = 0; j < w.ex_side.size(); ++j) {
        SimplicialMap t = transpose_to_sd(w.ex_side[j], sd_k, ex_l);
        int i = find_in(w.sd_side, t);
        if (i < 0) {
            std::ostringstream os;
            os << "transpose of ex-side element " << j << " missing from sd-side";
            w.failure = os.str();
            return w;
        }
        w.backward[j] = i;
    }
    for (size_t i = 0; i < w.sd_side.size(); ++i) {
        if (w.backward[w.forward[i]] != (int)i) {
            w.failure = "transposition is not a two-sided inverse";
            return w;
        }
    }
    for (size_t j = 0; j < w.ex_side.size(); ++j) {
        if (w.forward[w.backward[j]] != (int)j) {
            w.failure = "transposition is not a two-sided inverse";
            return w;
        }
    }
    w.verified = w.sd_side.size() == w.ex_side.size();
    if (!w.verified) w.failure = "cardinality mismatch";
    return w;
}

}  // namespace kqr
