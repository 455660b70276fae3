#include "kqr/colimits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kqr {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // keep least index as root
        parent[b] = a;
    }
};

int ref_index(const std::vector<SimplexRef>& sorted_refs, const SimplexRef& r) {
    auto it = std::lower_bound(sorted_refs.begin(), sorted_refs.end(), r);
    if (it == sorted_refs.end() || *it != r)
        throw std::runtime_error("ref_index: ref not found");
    return (int)(it - sorted_refs.begin());
}

}  // namespace

Coproduct coproduct(const std::vector<SSetPtr>& parts) {
    int top = -1;
    for (auto& p : parts) top = std::max(top, p->top_dim());
    std::vector<int> counts(top + 1, 0);
    std::vector<std::vector<std::vector<SimplexRef>>> faces(top + 1);
    std::vector<std::vector<int>> offset(parts.size());
    for (size_t s = 0; s < parts.size(); ++s) {
        offset[s].resize(top + 1, 0);
        for (int d = 0; d <= parts[s]->top_dim(); ++d) {
            offset[s][d] = counts[d];
            counts[d] += parts[s]->count(d);
        }
    }
    for (size_t s = 0; s < parts.size(); ++s) {
        for (int d = 0; d <= parts[s]->top_dim(); ++d) {
            for (int x = 0; x < parts[s]->count(d); ++x) {
                std::vector<SimplexRef> fcs;
                for (int i = 0; i <= d && d > 0; ++i) {
                    SimplexRef r = parts[s]->face(d, x, i);
                    fcs.push_back(SimplexRef{r.base_dim, r.id + offset[s][r.base_dim], r.epi});
                }
                faces[d].push_back(std::move(fcs));
            }
        }
    }
    Coproduct out;
    out.sum = share(SimplicialSet(std::move(counts), std::move(faces)));
    for (size_t s = 0; s < parts.size(); ++s) {
        SimplicialMap leg;
        leg.source = parts[s];
        leg.target = out.sum;
        leg.assign.resize(parts[s]->top_dim() + 1);
        for (int d = 0; d <= parts[s]->top_dim(); ++d)
            for (int x = 0; x < parts[s]->count(d); ++x)
                leg.assign[d].push_back(SimplexRef{d, x + offset[s][d], {}});
        out.legs.push_back(std::move(leg));
    }
    return out;
}

struct PushoutData {
    SSetPtr b, c;
    std::vector<std::vector<SimplexRef>> refs_b, refs_c;  // canonical per level
    LevelData levels;
    Normalized norm;
    // element -> least member: (side, ref). side 0 = B, 1 = C.
    std::vector<std::vector<std::pair<int, SimplexRef>>> least;
    // (side, level, ref index) -> element
    std::vector<std::vector<int>> elem_b, elem_c;
};

Pushout pushout(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.source.get() != g.source.get() &&
        (f.source->top_dim() != g.source->top_dim() ||
         f.source->total_nondeg() != g.source->total_nondeg()))
        throw std::runtime_error("pushout: legs must share a source");
    auto data = std::make_shared<PushoutData>();
    data->b = f.target;
    data->c = g.target;
    const SimplicialSet& a = *f.source;
    const SimplicialSet& b = *f.target;
    const SimplicialSet& c = *g.target;
    int top = std::max(b.top_dim(), c.top_dim());

    data->refs_b.resize(top + 1);
    data->refs_c.resize(top + 1);
    data->elem_b.resize(top + 1);
    data->elem_c.resize(top + 1);
    data->least.resize(top + 1);
    LevelData& lv = data->levels;
    lv.sizes.resize(top + 1, 0);
    lv.face.resize(top + 1);
    lv.degen.resize(top + 1);

    std::vector<std::vector<int>> class_of(top + 1);  // raw index -> element
    std::vector<std::vector<int>> roots(top + 1);
    std::vector<UnionFind> ufs;
    ufs.reserve(top + 1);
    for (int d = 0; d <= top; ++d) {
        data->refs_b[d] = b.refs(d);
        data->refs_c[d] = c.refs(d);
        int nb = (int)data->refs_b[d].size();
        int nc = (int)data->refs_c[d].size();
        ufs.emplace_back(nb + nc);
        for (const auto& r : a.refs(d)) {
            int ib = ref_index(data->refs_b[d], f.apply(r));
            int ic = ref_index(data->refs_c[d], g.apply(r));
            ufs[d].unite(ib, nb + ic);
        }
        // classes ordered by least raw index
        class_of[d].assign(nb + nc, -1);
        for (int i = 0; i < nb + nc; ++i) {
            if (ufs[d].find(i) == i) {
                class_of[d][i] = (int)roots[d].size();
                roots[d].push_back(i);
            }
        }
        for (int i = 0; i < nb + nc; ++i)
            if (class_of[d][i] < 0) class_of[d][i] = class_of[d][ufs[d].find(i)];
        lv.sizes[d] = (int)roots[d].size();
        data->elem_b[d].resize(nb);
        data->elem_c[d].resize(nc);
        for (int i = 0; i < nb; ++i) data->elem_b[d][i] = class_of[d][i];
        for (int i = 0; i < nc; ++i) data->elem_c[d][i] = class_of[d][nb + i];
        for (int root : roots[d]) {
            int nb_d = nb;
            if (root < nb_d)
                data->least[d].push_back({0, data->refs_b[d][root]});
            else
                data->least[d].push_back({1, data->refs_c[d][root - nb_d]});
        }
    }
    // operators on classes via least members
    for (int d = 0; d <= top; ++d) {
        auto act_elem = [&](int e, const DeltaMap& op, int target_level) -> int {
            auto [side, r] = data->least[d][e];
            if (side == 0) {
                SimplexRef s = b.act(r, op);
                return data->elem_b[target_level][ref_index(data->refs_b[target_level], s)];
            }
            SimplexRef s = c.act(r, op);
            return data->elem_c[target_level][ref_index(data->refs_c[target_level], s)];
        };
        if (d >= 1) {
            lv.face[d].resize(d + 1);
            for (int i = 0; i <= d; ++i) {
                lv.face[d][i].resize(lv.sizes[d]);
                for (int e = 0; e < lv.sizes[d]; ++e)
                    lv.face[d][i][e] = act_elem(e, delta_face(d, i), d - 1);
            }
        }
        if (d < top) {
            lv.degen[d].resize(d + 1);
            for (int j = 0; j <= d; ++j) {
                lv.degen[d][j].resize(lv.sizes[d]);
                for (int e = 0; e < lv.sizes[d]; ++e)
                    lv.degen[d][j][e] = act_elem(e, delta_degeneracy(d, j), d + 1);
            }
        }
    }
    data->norm = normalize(lv);

    Pushout out;
    out.data = data;
    out.object = share(data->norm.sset);
    // rebuild the normalized sset behind a stable pointer
    auto obj = out.object;
    auto make_leg = [&](SSetPtr src, const std::vector<std::vector<SimplexRef>>& refs_side,
                        const std::vector<std::vector<int>>& elem_side) {
        SimplicialMap leg;
        leg.source = src;
        leg.target = obj;
        leg.assign.resize(src->top_dim() + 1);
        for (int d = 0; d <= src->top_dim(); ++d) {
            for (int x = 0; x < src->count(d); ++x) {
                int idx = ref_index(refs_side[d], SimplexRef{d, x, {}});
                leg.assign[d].push_back(data->norm.ref_of[d][elem_side[d][idx]]);
            }
        }
        return leg;
    };
    out.from_b = make_leg(data->b, data->refs_b, data->elem_b);
    out.from_c = make_leg(data->c, data->refs_c, data->elem_c);
    return out;
}

SimplicialMap Pushout::mediate(const SimplicialMap& u, const SimplicialMap& v) const {
    SimplicialMap m;
    m.source = object;
    m.target = u.target;
    m.assign.resize(object->top_dim() + 1);
    for (int d = 0; d <= object->top_dim(); ++d) {
        for (int id = 0; id < object->count(d); ++id) {
            int e = data->norm.elem_of_nondeg[d][id];
            auto [side, r] = data->least[d][e];
            m.assign[d].push_back(side == 0 ? u.apply(r) : v.apply(r));
        }
    }
    return m;
}

struct ProductData {
    SSetPtr k, l;
    std::vector<std::vector<SimplexRef>> refs_k, refs_l;
    LevelData levels;
    Normalized norm;
};

ProductResult product(SSetPtr k, SSetPtr l) {
    auto data = std::make_shared<ProductData>();
    data->k = k;
    data->l = l;
    int top = k->empty() || l->empty() ? -1 : k->top_dim() + l->top_dim();
    LevelData& lv = data->levels;
    lv.sizes.resize(top + 1);
    lv.face.resize(top + 1);
    lv.degen.resize(top + 1);
    data->refs_k.resize(top + 1);
    data->refs_l.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        data->refs_k[d] = k->refs(d);
        data->refs_l[d] = l->refs(d);
        lv.sizes[d] = (int)(data->refs_k[d].size() * data->refs_l[d].size());
    }
    auto act_pair = [&](int d, int e, const DeltaMap& op, int td) -> int {
        int nl = (int)data->refs_l[d].size();
        const SimplexRef& rk = data->refs_k[d][e / nl];
        const SimplexRef& rl = data->refs_l[d][e % nl];
        int ik = ref_index(data->refs_k[td], k->act(rk, op));
        int il = ref_index(data->refs_l[td], l->act(rl, op));
        return ik * (int)data->refs_l[td].size() + il;
    };
    for (int d = 0; d <= top; ++d) {
        if (d >= 1) {
            lv.face[d].resize(d + 1);
            for (int i = 0; i <= d; ++i) {
                lv.face[d][i].resize(lv.sizes[d]);
                for (int e = 0; e < lv.sizes[d]; ++e)
                    lv.face[d][i][e] = act_pair(d, e, delta_face(d, i), d - 1);
            }
        }
        if (d < top) {
            lv.degen[d].resize(d + 1);
            for (int j = 0; j <= d; ++j) {
                lv.degen[d][j].resize(lv.sizes[d]);
                for (int e = 0; e < lv.sizes[d]; ++e)
                    lv.degen[d][j][e] = act_pair(d, e, delta_degeneracy(d, j), d + 1);
            }
        }
    }
    data->norm = normalize(lv);

    ProductResult out;
    out.data = data;
    out.object = share(data->norm.sset);
    out.to_left.source = out.object;
    out.to_left.target = k;
    out.to_right.source = out.object;
    out.to_right.target = l;
    out.to_left.assign.resize(out.object->top_dim() + 1);
    out.to_right.assign.resize(out.object->top_dim() + 1);
    for (int d = 0; d <= out.object->top_dim(); ++d) {
        int nl = (int)data->refs_l[d].size();
        for (int id = 0; id < out.object->count(d); ++id) {
            int e = data->norm.elem_of_nondeg[d][id];
            out.to_left.assign[d].push_back(data->refs_k[d][e / nl]);
            out.to_right.assign[d].push_back(data->refs_l[d][e % nl]);
        }
    }
    return out;
}

SimplicialMap ProductResult::pair(const SimplicialMap& u, const SimplicialMap& v) const {
    SimplicialMap m;
    m.source = u.source;
    m.target = object;
    m.assign.resize(u.source->top_dim() + 1);
    for (int d = 0; d <= u.source->top_dim(); ++d) {
        int nl = (int)data->refs_l[d].size();
        for (int x = 0; x < u.source->count(d); ++x) {
            int ik = ref_index(data->refs_k[d], u.at(d, x));
            int il = ref_index(data->refs_l[d], v.at(d, x));
            int e = ik * nl + il;
            m.assign[d].push_back(data->norm.ref_of[d][e]);
        }
    }
    return m;
}

QuotientResult quotient(const SimplicialMap& inclusion) {
    if (!inclusion.is_mono())
        throw std::runtime_error("quotient: subcomplex inclusion must be a monomorphism");
    Pushout p = pushout(inclusion, terminal_map(inclusion.source));
    QuotientResult out;
    out.object = p.object;
    out.projection = p.from_b;
    out.base_point = p.from_c.at(0, 0);
    return out;
}

QuotientResult quotient(SSetPtr k, const std::vector<std::vector<int>>& sub_ids) {
    return quotient(subcomplex_inclusion(k, sub_ids));
}

SSetPtr sphere_model(int n) {
    return quotient(boundary_inclusion(n)).object;
}

Cylinder cylinder_quotient(SSetPtr k) {
    if (k->empty()) {
        Cylinder out;
        out.object = shared_simplex(0);
        out.inclusion.source = k;
        out.inclusion.target = out.object;
        return out;
    }
    auto prod = product(k, shared_simplex(1));
    auto vertex = [&](int v) {
        // constant map K -> Δ^1 at vertex v
        return compose(delta_as_map(DeltaMap{0, 1, {v}}), terminal_map(k));
    };
    SimplicialMap k0 = prod.pair(identity_map(k), vertex(0));
    SimplicialMap k1 = prod.pair(identity_map(k), vertex(1));
    QuotientResult q = quotient(prod.object, mono_image(k1));
    Cylinder out;
    out.object = q.object;
    out.inclusion = compose(q.projection, k0);
    return out;
}

CellPresentation cell_presentation(const SimplicialMap& mono) {
    // reject with the offending collision
    {
        std::map<SimplexRef, std::pair<int, int>> seen;
        for (int d = 0; d <= mono.source->top_dim(); ++d) {
            for (int x = 0; x < mono.source->count(d); ++x) {
                const SimplexRef& img = mono.at(d, x);
                if (img.degenerate()) {
                    std::ostringstream os;
                    os << "cell_presentation: not a mono, simplex (" << d << "," << x
                       << ") has degenerate image";
                    throw std::runtime_error(os.str());
                }
                auto [it, fresh] = seen.insert({img, {d, x}});
                if (!fresh) {
                    std::ostringstream os;
                    os << "cell_presentation: not a mono, simplices (" << it->second.first << ","
                       << it->second.second << ") and (" << d << "," << x << ") collide";
                    throw std::runtime_error(os.str());
                }
            }
        }
    }
    const SimplicialSet& b = *mono.target;
    std::vector<std::vector<bool>> in_stage(b.top_dim() + 1);
    for (int d = 0; d <= b.top_dim(); ++d) in_stage[d].assign(b.count(d), false);
    for (int d = 0; d <= mono.source->top_dim(); ++d)
        for (int x = 0; x < mono.source->count(d); ++x)
            in_stage[mono.at(d, x).base_dim][mono.at(d, x).id] = true;

    CellPresentation pres;
    for (int d = 0; d <= b.top_dim(); ++d) {
        for (int x = 0; x < b.count(d); ++x) {
            if (in_stage[d][x]) continue;
            // stage = face-closed subcomplex of everything added so far
            std::vector<std::vector<int>> keep(b.top_dim() + 1);
            for (int dd = 0; dd <= b.top_dim(); ++dd)
                for (int xx = 0; xx < b.count(dd); ++xx)
                    if (in_stage[dd][xx]) keep[dd].push_back(xx);
            SimplicialMap stage_inc = subcomplex_inclusion(mono.target, keep);
            // attaching map ∂Δ^d -> stage through the faces of the new cell
            SimplicialMap bd = boundary_inclusion(d);
            SimplicialMap cell = simplex_as_map(mono.target, SimplexRef{d, x, {}});
            SimplicialMap attach;
            attach.source = bd.source;
            attach.target = stage_inc.source;
            attach.assign.resize(bd.source->top_dim() + 1);
            // reindex through the stage subcomplex (its ids follow keep order)
            std::vector<std::vector<int>> new_id(b.top_dim() + 1);
            for (int dd = 0; dd <= b.top_dim(); ++dd) {
                new_id[dd].assign(b.count(dd), -1);
                for (size_t i = 0; i < keep[dd].size(); ++i) new_id[dd][keep[dd][i]] = (int)i;
            }
            for (int dd = 0; dd <= bd.source->top_dim(); ++dd) {
                for (int xx = 0; xx < bd.source->count(dd); ++xx) {
                    SimplexRef in_b = cell.apply(bd.at(dd, xx));
                    attach.assign[dd].push_back(
                        SimplexRef{in_b.base_dim, new_id[in_b.base_dim][in_b.id], in_b.epi});
                }
            }
            pres.cells.push_back(CellAttachment{d, std::move(attach)});
            in_stage[d][x] = true;
        }
    }
    return pres;
}

namespace {

SimplicialMap retarget(const SimplicialMap& f, const SimplicialMap& iso) {
    // compose f with an isomorphism given as a map out of f.target
    return compose(iso, f);
}

}  // namespace

CellReplay replay_cells(const SimplicialMap& mono, const CellPresentation& pres) {
    // canonical stages are subcomplexes of B; replayed stages are built by
    // pushouts. iso_t : canonical stage_t -> replayed stage.
    const SSetPtr b = mono.target;
    std::vector<std::vector<int>> keep(b->top_dim() + 1);
    for (int d = 0; d <= mono.source->top_dim(); ++d)
        for (int x = 0; x < mono.source->count(d); ++x)
            keep[mono.at(d, x).base_dim].push_back(mono.at(d, x).id);
    SimplicialMap stage_inc = subcomplex_inclusion(b, keep);
    SSetPtr replayed = stage_inc.source;
    SimplicialMap iso = identity_map(replayed);

    for (const auto& cell : pres.cells) {
        SimplicialMap attach_replayed = retarget(cell.attach, iso);
        Pushout p = pushout(attach_replayed, boundary_inclusion(cell.dim));
        // extend keep by this cell: recover its id from the attach target order
        // (cells are attached in canonical (dim, id) order).
        int d = cell.dim;
        int next_id = -1;
        {
            std::vector<bool> have(b->count(d), false);
            for (int x : keep[d]) have[x] = true;
            for (int x = 0; x < b->count(d); ++x)
                if (!have[x]) { next_id = x; break; }
        }
        keep[d].push_back(next_id);
        std::sort(keep[d].begin(), keep[d].end());
        SimplicialMap new_stage_inc = subcomplex_inclusion(b, keep);
        // iso from the new canonical stage: old cells via p.from_b ∘ iso,
        // the new cell via p.from_c's top simplex.
        SimplicialMap new_iso;
        new_iso.source = new_stage_inc.source;
        new_iso.target = p.object;
        new_iso.assign.resize(new_stage_inc.source->top_dim() + 1);
        std::vector<std::vector<int>> old_id(b->top_dim() + 1);
        for (int dd = 0; dd <= b->top_dim(); ++dd) old_id[dd].assign(b->count(dd), -1);
        for (int dd = 0; dd <= stage_inc.source->top_dim(); ++dd)
            for (int xx = 0; xx < stage_inc.source->count(dd); ++xx)
                old_id[stage_inc.at(dd, xx).base_dim][stage_inc.at(dd, xx).id] = xx;
        for (int dd = 0; dd <= new_stage_inc.source->top_dim(); ++dd) {
            for (int xx = 0; xx < new_stage_inc.source->count(dd); ++xx) {
                SimplexRef amb = new_stage_inc.at(dd, xx);
                if (amb.base_dim == d && amb.id == next_id) {
                    new_iso.assign[dd].push_back(p.from_c.at(d, 0 /*top cell*/));
                } else {
                    int ox = old_id[amb.base_dim][amb.id];
                    new_iso.assign[dd].push_back(p.from_b.apply(iso.at(amb.base_dim, ox)));
                }
            }
        }
        stage_inc = new_stage_inc;
        replayed = p.object;
        iso = new_iso;
    }

    CellReplay out;
    out.stage = replayed;
    // comparison: replayed -> B by inverting iso (a bijection on cells)
    SimplicialMap comp;
    comp.source = replayed;
    comp.target = b;
    comp.assign.resize(replayed->top_dim() + 1);
    bool iso_ok = true;
    for (int d = 0; d <= replayed->top_dim(); ++d) comp.assign[d].resize(replayed->count(d));
    std::vector<std::vector<bool>> hit(replayed->top_dim() + 1);
    for (int d = 0; d <= replayed->top_dim(); ++d) hit[d].assign(replayed->count(d), false);
    for (int d = 0; d <= stage_inc.source->top_dim(); ++d) {
        for (int x = 0; x < stage_inc.source->count(d); ++x) {
            SimplexRef r = iso.at(d, x);
            if (r.degenerate()) { iso_ok = false; continue; }
            if (hit[r.base_dim][r.id]) iso_ok = false;
            hit[r.base_dim][r.id] = true;
            comp.assign[r.base_dim][r.id] = stage_inc.at(d, x);
        }
    }
    for (auto& hd : hit)
        for (bool h : hd)
            if (!h) iso_ok = false;
    if (stage_inc.source->total_nondeg() != replayed->total_nondeg()) iso_ok = false;
    out.comparison = comp;
    out.comparison_is_iso = iso_ok;
    // A -> replayed: through the final iso (the canonical final stage is B
    // itself when every cell was attached)
    SimplicialMap a_to_stage;
    a_to_stage.source = mono.source;
    a_to_stage.target = stage_inc.source;
    a_to_stage.assign.resize(mono.source->top_dim() + 1);
    std::vector<std::vector<int>> stage_id(b->top_dim() + 1);
    for (int dd = 0; dd <= b->top_dim(); ++dd) stage_id[dd].assign(b->count(dd), -1);
    for (int dd = 0; dd <= stage_inc.source->top_dim(); ++dd)
        for (int xx = 0; xx < stage_inc.source->count(dd); ++xx)
            stage_id[stage_inc.at(dd, xx).base_dim][stage_inc.at(dd, xx).id] = xx;
    for (int d = 0; d <= mono.source->top_dim(); ++d) {
        for (int x = 0; x < mono.source->count(d); ++x) {
            const SimplexRef& img = mono.at(d, x);
            a_to_stage.assign[d].push_back(SimplexRef{d, stage_id[img.base_dim][img.id], img.epi});
        }
    }
    out.from_a = compose(iso, a_to_stage);
    return out;
}

}  // namespace kqr
