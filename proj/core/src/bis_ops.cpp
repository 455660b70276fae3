#include "kqr/bis_ops.hpp"

#include <algorithm>

namespace kqr {

namespace {

std::vector<std::vector<int>> subsets_of(int n, int sz) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == sz) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

EpiWord full_collapse(int j) {
    EpiWord w;
    for (int t = 0; t < j; ++t) w.push_back(t);
    return w;
}

}  // namespace

// ---------------- external product ----------------

int ExternalProduct::pair_id(int, int kb, int a, int b) const {
    return a * right->count(kb) + b;
}

BiSimplexRef ExternalProduct::pair_ref(const SimplexRef& ra, const SimplexRef& rb) const {
    return BiSimplexRef{ra.base_dim, rb.base_dim,
                        pair_id(ra.base_dim, rb.base_dim, ra.id, rb.id), ra.epi, rb.epi};
}

ExternalProduct external_product(SSetPtr k, SSetPtr l) {
    ExternalProduct out;
    out.left = k;
    out.right = l;
    int H = k->top_dim(), V = l->top_dim();
    if (H < 0 || V < 0) {
        out.complex = share(BiSimplicialSet());
        return out;
    }
    std::vector<std::vector<int>> counts(H + 1, std::vector<int>(V + 1));
    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> fh(H + 1), fv(H + 1);
    for (int j = 0; j <= H; ++j) {
        fh[j].resize(V + 1);
        fv[j].resize(V + 1);
        for (int kk = 0; kk <= V; ++kk) {
            counts[j][kk] = k->count(j) * l->count(kk);
            fh[j][kk].resize(counts[j][kk]);
            fv[j][kk].resize(counts[j][kk]);
            for (int a = 0; a < k->count(j); ++a) {
                for (int b = 0; b < l->count(kk); ++b) {
                    int x = a * l->count(kk) + b;
                    if (j > 0)
                        for (int i = 0; i <= j; ++i)
                            fh[j][kk][x].push_back(
                                out.pair_ref(k->face(j, a, i), SimplexRef{kk, b, {}}));
                    if (kk > 0)
                        for (int i = 0; i <= kk; ++i)
                            fv[j][kk][x].push_back(
                                out.pair_ref(SimplexRef{j, a, {}}, l->face(kk, b, i)));
                }
            }
        }
    }
    out.complex = share(BiSimplicialSet(std::move(counts), std::move(fh), std::move(fv)));
    return out;
}

ExternalProduct const_geo(SSetPtr m) { return external_product(shared_simplex(0), m); }

// ---------------- diagonal restriction ----------------

SimplexRef DiagonalRestriction::ref_of(const BiSimplexRef& r) const {
    int level = r.jdim();
    return norm.ref_of[level][index[level].at(r)];
}

DiagonalRestriction diag_restrict(BiSSetPtr x) {
    DiagonalRestriction out;
    out.from = x;
    int N = x->empty() ? -1 : x->top_h() + x->top_v();
    out.lv.sizes.resize(N + 1);
    out.lv.face.resize(N + 1);
    out.lv.degen.resize(N + 1);
    out.elems.resize(N + 1);
    out.index.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        out.elems[n] = x->refs(n, n);
        out.lv.sizes[n] = (int)out.elems[n].size();
        for (int e = 0; e < out.lv.sizes[n]; ++e) out.index[n][out.elems[n][e]] = e;
    }
    for (int n = 0; n <= N; ++n) {
        if (n >= 1) {
            out.lv.face[n].resize(n + 1);
            for (int i = 0; i <= n; ++i) {
                out.lv.face[n][i].resize(out.lv.sizes[n]);
                for (int e = 0; e < out.lv.sizes[n]; ++e)
                    out.lv.face[n][i][e] = out.index[n - 1].at(
                        x->act(out.elems[n][e], delta_face(n, i), delta_face(n, i)));
            }
        }
        if (n < N) {
            out.lv.degen[n].resize(n + 1);
            for (int j = 0; j <= n; ++j) {
                out.lv.degen[n][j].resize(out.lv.sizes[n]);
                for (int e = 0; e < out.lv.sizes[n]; ++e)
                    out.lv.degen[n][j][e] = out.index[n + 1].at(
                        x->act(out.elems[n][e], delta_degeneracy(n, j), delta_degeneracy(n, j)));
            }
        }
    }
    out.norm = normalize(out.lv);
    out.complex = share(out.norm.sset);
    return out;
}

// ---------------- diagonal extension ----------------

BiSimplexRef DiagonalExtension::canonical_triple(int zdim, int zid, const DeltaMap& a0,
                                                 const DeltaMap& b0) const {
    DeltaMap a = a0, b = b0;
    int p = zdim, id = zid;
    std::vector<int> s;
    {
        std::vector<bool> in(p + 1, false);
        for (int v : a.val) in[v] = true;
        for (int v : b.val) in[v] = true;
        for (int v = 0; v <= p; ++v)
            if (in[v]) s.push_back(v);
    }
    if ((int)s.size() < p + 1) {
        DeltaMap mu{(int)s.size() - 1, p, s};
        SimplexRef r = base->act(p, id, mu);
        std::vector<int> pos(p + 1, -1);
        for (size_t t = 0; t < s.size(); ++t) pos[s[t]] = (int)t;
        auto reindex = [&](const DeltaMap& f) {
            DeltaMap g{f.dom, (int)s.size() - 1, {}};
            for (int v : f.val) g.val.push_back(pos[v]);
            return g;
        };
        DeltaMap eta = epi_of_word(r.dim(), r.epi);
        a = compose(eta, reindex(a));
        b = compose(eta, reindex(b));
        p = r.base_dim;
        id = r.id;
    }
    DeltaMap ea, ma, eb, mb;
    epi_mono_factor(a, ea, ma);
    epi_mono_factor(b, eb, mb);
    auto it = index[ma.dom][mb.dom].find(DiagTriple{p, id, ma, mb});
    if (it == index[ma.dom][mb.dom].end())
        throw std::runtime_error("diag_extend: canonical triple not found");
    return BiSimplexRef{ma.dom, mb.dom, it->second, word_of_epi(ea), word_of_epi(eb)};
}

DiagonalExtension diag_extend(SSetPtr k) {
    DiagonalExtension out;
    out.base = k;
    int top = k->top_dim();
    if (top < 0) {
        out.complex = share(BiSimplicialSet());
        return out;
    }
    out.cells.assign(top + 1, std::vector<std::vector<DiagTriple>>(top + 1));
    out.index.assign(top + 1, std::vector<std::map<DiagTriple, int>>(top + 1));
    for (int j = 0; j <= top; ++j) {
        for (int kk = 0; kk <= top; ++kk) {
            for (int p = std::max(j, kk); p <= std::min(top, j + kk + 1); ++p) {
                if (k->count(p) == 0) continue;
                auto alphas = subsets_of(p, j + 1);
                auto betas = subsets_of(p, kk + 1);
                for (int z = 0; z < k->count(p); ++z) {
                    for (const auto& av : alphas) {
                        for (const auto& bv : betas) {
                            std::vector<bool> in(p + 1, false);
                            for (int v : av) in[v] = true;
                            for (int v : bv) in[v] = true;
                            bool full = true;
                            for (int v = 0; v <= p; ++v)
                                if (!in[v]) { full = false; break; }
                            if (!full) continue;
                            DiagTriple t{p, z, DeltaMap{j, p, av}, DeltaMap{kk, p, bv}};
                            out.index[j][kk][t] = (int)out.cells[j][kk].size();
                            out.cells[j][kk].push_back(std::move(t));
                        }
                    }
                }
            }
        }
    }
    std::vector<std::vector<int>> counts(top + 1, std::vector<int>(top + 1));
    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> fh(top + 1), fv(top + 1);
    for (int j = 0; j <= top; ++j) {
        fh[j].resize(top + 1);
        fv[j].resize(top + 1);
        for (int kk = 0; kk <= top; ++kk) {
            counts[j][kk] = (int)out.cells[j][kk].size();
            fh[j][kk].resize(counts[j][kk]);
            fv[j][kk].resize(counts[j][kk]);
            for (int x = 0; x < counts[j][kk]; ++x) {
                const DiagTriple& t = out.cells[j][kk][x];
                if (j > 0)
                    for (int i = 0; i <= j; ++i)
                        fh[j][kk][x].push_back(out.canonical_triple(
                            t.zdim, t.zid, compose(t.alpha, delta_face(j, i)), t.beta));
                if (kk > 0)
                    for (int i = 0; i <= kk; ++i)
                        fv[j][kk][x].push_back(out.canonical_triple(
                            t.zdim, t.zid, t.alpha, compose(t.beta, delta_face(kk, i))));
            }
        }
    }
    out.complex = share(BiSimplicialSet(std::move(counts), std::move(fh), std::move(fv)));
    return out;
}

BiSimplicialMap counit_map(const DiagonalExtension& de, const ExternalProduct& cg) {
    BiSimplicialMap f;
    f.source = de.complex;
    f.target = cg.complex;
    f.assign.resize(de.complex->top_h() + 1);
    for (int j = 0; j <= de.complex->top_h(); ++j) {
        f.assign[j].resize(de.complex->top_v() + 1);
        for (int kk = 0; kk <= de.complex->top_v(); ++kk) {
            for (int x = 0; x < de.complex->count(j, kk); ++x) {
                const DiagTriple& t = de.cells[j][kk][x];
                SimplexRef vert{0, 0, full_collapse(j)};
                SimplexRef kpart = de.base->act(t.zdim, t.zid, t.beta);
                f.assign[j][kk].push_back(cg.pair_ref(vert, kpart));
            }
        }
    }
    return f;
}

// ---------------- horn closed form ----------------

BiSimplexRef HornClosedForm::ref_of_pair(const DeltaMap& a, const DeltaMap& b) const {
    DeltaMap ea, ma, eb, mb;
    epi_mono_factor(a, ea, ma);
    epi_mono_factor(b, eb, mb);
    auto it = index[ma.dom][mb.dom].find({ma, mb});
    if (it == index[ma.dom][mb.dom].end())
        throw std::runtime_error("horn_closed_form: pair not found");
    return BiSimplexRef{ma.dom, mb.dom, it->second, word_of_epi(ea), word_of_epi(eb)};
}

HornClosedForm horn_closed_form(int n, int i) {
    if (n < 1) throw std::invalid_argument("horn_closed_form: n must be >= 1");
    HornClosedForm out;
    out.n = n;
    out.i = i;
    out.cells.assign(n + 1, std::vector<std::vector<std::pair<DeltaMap, DeltaMap>>>(n + 1));
    out.index.assign(n + 1, std::vector<std::map<std::pair<DeltaMap, DeltaMap>, int>>(n + 1));
    for (int j = 0; j <= n; ++j) {
        for (int kk = 0; kk <= n; ++kk) {
            auto alphas = subsets_of(n, j + 1);
            auto betas = subsets_of(n, kk + 1);
            for (const auto& av : alphas) {
                for (const auto& bv : betas) {
                    std::vector<bool> in(n + 1, false);
                    for (int v : av) in[v] = true;
                    for (int v : bv) in[v] = true;
                    bool missing = false;
                    for (int l = 0; l <= n; ++l)
                        if (l != i && !in[l]) { missing = true; break; }
                    if (!missing) continue;
                    std::pair<DeltaMap, DeltaMap> cell{DeltaMap{j, n, av}, DeltaMap{kk, n, bv}};
                    out.index[j][kk][cell] = (int)out.cells[j][kk].size();
                    out.cells[j][kk].push_back(std::move(cell));
                }
            }
        }
    }
    std::vector<std::vector<int>> counts(n + 1, std::vector<int>(n + 1));
    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> fh(n + 1), fv(n + 1);
    for (int j = 0; j <= n; ++j) {
        fh[j].resize(n + 1);
        fv[j].resize(n + 1);
        for (int kk = 0; kk <= n; ++kk) {
            counts[j][kk] = (int)out.cells[j][kk].size();
            fh[j][kk].resize(counts[j][kk]);
            fv[j][kk].resize(counts[j][kk]);
            for (int x = 0; x < counts[j][kk]; ++x) {
                const auto& [a, b] = out.cells[j][kk][x];
                if (j > 0)
                    for (int t = 0; t <= j; ++t)
                        fh[j][kk][x].push_back(out.ref_of_pair(compose(a, delta_face(j, t)), b));
                if (kk > 0)
                    for (int t = 0; t <= kk; ++t)
                        fv[j][kk][x].push_back(out.ref_of_pair(a, compose(b, delta_face(kk, t))));
            }
        }
    }
    out.complex = share(BiSimplicialSet(std::move(counts), std::move(fh), std::move(fv)));
    return out;
}

BiSimplicialMap horn_comparison(const DiagonalExtension& de, const HornClosedForm& cf) {
    auto subsets = horn_cell_subsets(cf.n, cf.i);
    BiSimplicialMap f;
    f.source = de.complex;
    f.target = cf.complex;
    f.assign.resize(de.complex->top_h() + 1);
    for (int j = 0; j <= de.complex->top_h(); ++j) {
        f.assign[j].resize(de.complex->top_v() + 1);
        for (int kk = 0; kk <= de.complex->top_v(); ++kk) {
            for (int x = 0; x < de.complex->count(j, kk); ++x) {
                const DiagTriple& t = de.cells[j][kk][x];
                DeltaMap mu{t.zdim, cf.n, subsets[t.zdim][t.zid]};
                f.assign[j][kk].push_back(
                    cf.ref_of_pair(compose(mu, t.alpha), compose(mu, t.beta)));
            }
        }
    }
    return f;
}

// ---------------- level slices ----------------

SimplexRef LevelSlice::ref_of(const BiSimplexRef& r) const {
    int level = fixed_is_horizontal ? r.kdim() : r.jdim();
    if (level < (int)index.size()) {
        auto it = index[level].find(r);
        if (it != index[level].end()) return norm.ref_of[level][it->second];
    }
    // beyond the tabulated levels everything is degenerate in the slice
    // direction: strip that word, normalize the base, recompose
    const EpiWord& w = fixed_is_horizontal ? r.epi_v : r.epi_h;
    int base_level = level - (int)w.size();
    BiSimplexRef r0 = r;
    (fixed_is_horizontal ? r0.epi_v : r0.epi_h).clear();
    SimplexRef s0 = norm.ref_of[base_level][index[base_level].at(r0)];
    DeltaMap comp = compose(epi_of_word(base_level, s0.epi), epi_of_word(level, w));
    return SimplexRef{s0.base_dim, s0.id, word_of_epi(comp)};
}

namespace {

LevelSlice build_slice(BiSSetPtr x, bool fixed_horizontal, int fixed) {
    LevelSlice s;
    s.from = x;
    s.fixed_is_horizontal = fixed_horizontal;
    s.fixed = fixed;
    int N = x->empty() ? -1 : (fixed_horizontal ? x->top_v() : x->top_h());
    s.lv.sizes.resize(N + 1);
    s.lv.face.resize(N + 1);
    s.lv.degen.resize(N + 1);
    s.elems.resize(N + 1);
    s.index.resize(N + 1);
    for (int d = 0; d <= N; ++d) {
        s.elems[d] = fixed_horizontal ? x->refs(fixed, d) : x->refs(d, fixed);
        s.lv.sizes[d] = (int)s.elems[d].size();
        for (int e = 0; e < s.lv.sizes[d]; ++e) s.index[d][s.elems[d][e]] = e;
    }
    auto act_at = [&](const BiSimplexRef& r, const DeltaMap& op) {
        return fixed_horizontal ? x->act(r, delta_identity(fixed), op)
                                : x->act(r, op, delta_identity(fixed));
    };
    for (int d = 0; d <= N; ++d) {
        if (d >= 1) {
            s.lv.face[d].resize(d + 1);
            for (int i = 0; i <= d; ++i) {
                s.lv.face[d][i].resize(s.lv.sizes[d]);
                for (int e = 0; e < s.lv.sizes[d]; ++e)
                    s.lv.face[d][i][e] =
                        s.index[d - 1].at(act_at(s.elems[d][e], delta_face(d, i)));
            }
        }
        if (d < N) {
            s.lv.degen[d].resize(d + 1);
            for (int j = 0; j <= d; ++j) {
                s.lv.degen[d][j].resize(s.lv.sizes[d]);
                for (int e = 0; e < s.lv.sizes[d]; ++e)
                    s.lv.degen[d][j][e] =
                        s.index[d + 1].at(act_at(s.elems[d][e], delta_degeneracy(d, j)));
            }
        }
    }
    s.norm = normalize(s.lv);
    s.complex = share(s.norm.sset);
    return s;
}

}  // namespace

LevelSlice horizontal_level(BiSSetPtr x, int j) { return build_slice(x, true, j); }
LevelSlice vertical_level(BiSSetPtr x, int k) { return build_slice(x, false, k); }

SimplicialMap level_map(const BiSimplicialMap& f, const LevelSlice& src,
                        const LevelSlice& dst) {
    SimplicialMap out;
    out.source = src.complex;
    out.target = dst.complex;
    out.assign.resize(src.complex->top_dim() + 1);
    for (int d = 0; d <= src.complex->top_dim(); ++d) {
        for (int id = 0; id < src.complex->count(d); ++id) {
            const BiSimplexRef& r = src.elems[d][src.norm.elem_of_nondeg[d][id]];
            out.assign[d].push_back(dst.ref_of(f.apply(r)));
        }
    }
    return out;
}

SimplicialMap slice_operator(const LevelSlice& src, const LevelSlice& dst, const DeltaMap& op) {
    SimplicialMap out;
    out.source = src.complex;
    out.target = dst.complex;
    out.assign.resize(src.complex->top_dim() + 1);
    const BiSimplicialSet& x = *src.from;
    for (int d = 0; d <= src.complex->top_dim(); ++d) {
        for (int id = 0; id < src.complex->count(d); ++id) {
            const BiSimplexRef& r = src.elems[d][src.norm.elem_of_nondeg[d][id]];
            BiSimplexRef moved = src.fixed_is_horizontal ? x.act(r, op, delta_identity(d))
                                                         : x.act(r, delta_identity(d), op);
            out.assign[d].push_back(dst.ref_of(moved));
        }
    }
    return out;
}

// ---------------- fiber subcomplex ----------------

SimplicialSet fiber_subcomplex(int n, const std::vector<int>& t_complement) {
    if (t_complement.empty())
        throw std::invalid_argument("fiber_subcomplex: empty complement");
    for (int v : t_complement)
        if (v < 0 || v > n) throw std::invalid_argument("fiber_subcomplex: vertex out of range");
    std::vector<bool> in_tc(n + 1, false);
    for (int v : t_complement) in_tc[v] = true;
    // keep faces whose vertex set does not contain all of t_complement
    auto subsets = simplex_cell_subsets(n);
    std::vector<std::vector<int>> keep(n + 1);
    auto full = share(standard_simplex(n));
    for (int d = 0; d <= n; ++d) {
        for (size_t x = 0; x < subsets[d].size(); ++x) {
            std::vector<bool> has(n + 1, false);
            for (int v : subsets[d][x]) has[v] = true;
            bool covers = true;
            for (int v = 0; v <= n; ++v)
                if (in_tc[v] && !has[v]) { covers = false; break; }
            if (!covers) keep[d].push_back((int)x);
        }
    }
    SimplicialMap inc = subcomplex_inclusion(full, keep);
    return *inc.source;
}

// ---------------- matching objects ----------------

int MatchObject::element_of(const SimplicialMap& f, int level) const {
    auto it = index[level].find(f.assign);
    if (it == index[level].end()) return -1;
    return it->second;
}

MatchObject match_object(SSetPtr weight, BiSSetPtr y, int min_levels) {
    MatchObject m;
    m.weight = weight;
    m.target = y;
    // The matching object embeds levelwise into the product of vertical
    // slices over the nondegenerate weight simplices, so its dimension is
    // bounded by (#nondegenerate weight cells) * (vertical top of y).
    int V = y->empty() ? -1 : weight->total_nondeg() * std::max(y->top_v(), 0);
    if (weight->empty()) V = 0;
    V = std::max(V, min_levels);
    m.lv.sizes.resize(V + 1);
    m.lv.face.resize(V + 1);
    m.lv.degen.resize(V + 1);
    m.level_elems.resize(V + 1);
    m.index.resize(V + 1);
    for (int v = 0; v <= V; ++v) m.slices.push_back(vertical_level(y, v));
    for (int v = 0; v <= V; ++v) {
        m.level_elems[v] = enumerate_maps(weight, m.slices[v].complex);
        m.lv.sizes[v] = (int)m.level_elems[v].size();
        for (int e = 0; e < m.lv.sizes[v]; ++e) m.index[v][m.level_elems[v][e].assign] = e;
    }
    for (int v = 0; v <= V; ++v) {
        if (v >= 1) {
            m.lv.face[v].resize(v + 1);
            for (int i = 0; i <= v; ++i) {
                SimplicialMap op = slice_operator(m.slices[v], m.slices[v - 1], delta_face(v, i));
                m.lv.face[v][i].resize(m.lv.sizes[v]);
                for (int e = 0; e < m.lv.sizes[v]; ++e) {
                    SimplicialMap comp = compose(op, m.level_elems[v][e]);
                    m.lv.face[v][i][e] = m.index[v - 1].at(comp.assign);
                }
            }
        }
        if (v < V) {
            m.lv.degen[v].resize(v + 1);
            for (int j = 0; j <= v; ++j) {
                SimplicialMap op =
                    slice_operator(m.slices[v], m.slices[v + 1], delta_degeneracy(v, j));
                m.lv.degen[v][j].resize(m.lv.sizes[v]);
                for (int e = 0; e < m.lv.sizes[v]; ++e) {
                    SimplicialMap comp = compose(op, m.level_elems[v][e]);
                    m.lv.degen[v][j][e] = m.index[v + 1].at(comp.assign);
                }
            }
        }
    }
    m.norm = normalize(m.lv);
    m.complex = share(m.norm.sset);
    return m;
}

SimplicialMap match_restrict(const MatchObject& of_big, const MatchObject& of_small,
                             const SimplicialMap& weight_map) {
    SimplicialMap out;
    out.source = of_big.complex;
    out.target = of_small.complex;
    out.assign.resize(of_big.complex->top_dim() + 1);
    for (int v = 0; v <= of_big.complex->top_dim(); ++v) {
        for (int id = 0; id < of_big.complex->count(v); ++id) {
            int e = of_big.norm.elem_of_nondeg[v][id];
            SimplicialMap comp = compose(of_big.level_elems[v][e], weight_map);
            int e2 = of_small.index[v].at(comp.assign);
            out.assign[v].push_back(of_small.norm.ref_of[v][e2]);
        }
    }
    return out;
}

SimplicialMap match_push(const MatchObject& src, const MatchObject& dst,
                         const BiSimplicialMap& f) {
    SimplicialMap out;
    out.source = src.complex;
    out.target = dst.complex;
    out.assign.resize(src.complex->top_dim() + 1);
    for (int v = 0; v <= src.complex->top_dim(); ++v) {
        SimplicialMap fv = level_map(f, src.slices[v], dst.slices[v]);
        for (int id = 0; id < src.complex->count(v); ++id) {
            int e = src.norm.elem_of_nondeg[v][id];
            SimplicialMap comp = compose(fv, src.level_elems[v][e]);
            int e2 = dst.index[v].at(comp.assign);
            out.assign[v].push_back(dst.norm.ref_of[v][e2]);
        }
    }
    return out;
}

// ---------------- pullback ----------------

SimplicialMap SSetPullback::pair(const SimplicialMap& u, const SimplicialMap& v) const {
    SimplicialMap out;
    out.source = u.source;
    out.target = object;
    out.assign.resize(u.source->top_dim() + 1);
    for (int d = 0; d <= u.source->top_dim(); ++d)
        for (int x = 0; x < u.source->count(d); ++x) {
            int e = index[d].at({u.at(d, x), v.at(d, x)});
            out.assign[d].push_back(norm.ref_of[d][e]);
        }
    return out;
}

SSetPullback sset_pullback(const SimplicialMap& f, const SimplicialMap& g) {
    SSetPullback out;
    const SimplicialSet& a = *f.source;
    const SimplicialSet& b = *g.source;
    int N = std::max(a.top_dim(), b.top_dim());
    out.lv.sizes.resize(N + 1);
    out.lv.face.resize(N + 1);
    out.lv.degen.resize(N + 1);
    out.elems.resize(N + 1);
    out.index.resize(N + 1);
    for (int d = 0; d <= N; ++d) {
        for (const auto& ra : a.refs(d))
            for (const auto& rb : b.refs(d))
                if (f.apply(ra) == g.apply(rb)) {
                    out.index[d][{ra, rb}] = (int)out.elems[d].size();
                    out.elems[d].push_back({ra, rb});
                }
        out.lv.sizes[d] = (int)out.elems[d].size();
    }
    for (int d = 0; d <= N; ++d) {
        if (d >= 1) {
            out.lv.face[d].resize(d + 1);
            for (int i = 0; i <= d; ++i) {
                out.lv.face[d][i].resize(out.lv.sizes[d]);
                for (int e = 0; e < out.lv.sizes[d]; ++e) {
                    const auto& [ra, rb] = out.elems[d][e];
                    out.lv.face[d][i][e] =
                        out.index[d - 1].at({a.face_of(ra, i), b.face_of(rb, i)});
                }
            }
        }
        if (d < N) {
            out.lv.degen[d].resize(d + 1);
            for (int j = 0; j <= d; ++j) {
                out.lv.degen[d][j].resize(out.lv.sizes[d]);
                for (int e = 0; e < out.lv.sizes[d]; ++e) {
                    const auto& [ra, rb] = out.elems[d][e];
                    out.lv.degen[d][j][e] =
                        out.index[d + 1].at({a.degeneracy_of(ra, j), b.degeneracy_of(rb, j)});
                }
            }
        }
    }
    out.norm = normalize(out.lv);
    out.object = share(out.norm.sset);
    out.to_left.source = out.object;
    out.to_left.target = f.source;
    out.to_right.source = out.object;
    out.to_right.target = g.source;
    out.to_left.assign.resize(out.object->top_dim() + 1);
    out.to_right.assign.resize(out.object->top_dim() + 1);
    for (int d = 0; d <= out.object->top_dim(); ++d)
        for (int id = 0; id < out.object->count(d); ++id) {
            const auto& [ra, rb] = out.elems[d][out.norm.elem_of_nondeg[d][id]];
            out.to_left.assign[d].push_back(ra);
            out.to_right.assign[d].push_back(rb);
        }
    return out;
}

// ---------------- levelwise pi0 and the probe ----------------

LevelwisePi0 levelwise_pi0(BiSSetPtr y) {
    LevelwisePi0 out;
    out.from = y;
    int H = y->empty() ? -1 : y->top_h();
    std::vector<LevelSlice> slices;
    std::vector<Pi0> comps;
    for (int j = 0; j <= H; ++j) {
        slices.push_back(horizontal_level(y, j));
        comps.push_back(pi0(*slices[j].complex));
    }
    LevelData lv;
    lv.sizes.resize(H + 1);
    lv.face.resize(H + 1);
    lv.degen.resize(H + 1);
    for (int j = 0; j <= H; ++j) lv.sizes[j] = comps[j].classes();
    // a class maps along a horizontal operator to the class of the image
    // of its representative vertex
    auto transport = [&](int j, int cls, const DeltaMap& op, int j2) {
        int vtx = comps[j].representative[cls];
        int e = slices[j].norm.elem_of_nondeg[0][vtx];
        const BiSimplexRef& r = slices[j].elems[0][e];
        BiSimplexRef moved = y->act(r, op, delta_identity(0));
        SimplexRef img = slices[j2].ref_of(moved);
        return comps[j2].class_of[img.id];
    };
    for (int j = 0; j <= H; ++j) {
        if (j >= 1) {
            lv.face[j].resize(j + 1);
            for (int i = 0; i <= j; ++i) {
                lv.face[j][i].resize(lv.sizes[j]);
                for (int c = 0; c < lv.sizes[j]; ++c)
                    lv.face[j][i][c] = transport(j, c, delta_face(j, i), j - 1);
            }
        }
        if (j < H) {
            lv.degen[j].resize(j + 1);
            for (int t = 0; t <= j; ++t) {
                lv.degen[j][t].resize(lv.sizes[j]);
                for (int c = 0; c < lv.sizes[j]; ++c)
                    lv.degen[j][t][c] = transport(j, c, delta_degeneracy(j, t), j + 1);
            }
        }
    }
    out.complex = share(normalize(lv).sset);
    return out;
}

bool Pi0FibrationReport::all_pass() const {
    for (const auto& h : horns)
        if (!h.pi0_surjective) return false;
    return true;
}

const char* Pi0FibrationReport::caveat() {
    return "matching objects computed as strict limits; homotopy-meaningful on "
           "constant or level-discrete directions only";
}

Pi0FibrationReport pi0_fibration_probe(const BiSimplicialMap& f, int max_n) {
    Pi0FibrationReport rep;
    rep.checked_up_to = max_n;
    int topv = std::max({f.source->top_v(), f.target->top_v(), 0});
    for (int n = 1; n <= max_n; ++n) {
        auto dn = shared_simplex(n);
        int levels = dn->total_nondeg() * topv;  // shared across all four corners
        MatchObject mdy = match_object(dn, f.source, levels);
        MatchObject mdz = match_object(dn, f.target, levels);
        SimplicialMap fd = match_push(mdy, mdz, f);
        for (int i = 0; i <= n; ++i) {
            auto lam = share(horn(n, i));
            MatchObject mly = match_object(lam, f.source, levels);
            MatchObject mlz = match_object(lam, f.target, levels);
            SimplicialMap incl = horn_inclusion(n, i);
            SimplicialMap ry = match_restrict(mdy, mly, incl);
            SimplicialMap rz = match_restrict(mdz, mlz, incl);
            SimplicialMap fl = match_push(mly, mlz, f);
            SSetPullback pb = sset_pullback(fl, rz);
            SimplicialMap c = pb.pair(ry, fd);
            c.validate();
            Pi0 pp = pi0(*pb.object);
            Pi0 ps = pi0(*mdy.complex);
            std::vector<bool> hit(pp.classes(), false);
            for (int v = 0; v < mdy.complex->count(0); ++v) hit[pp.class_of[c.at(0, v).id]] = true;
            HornProbe probe{n, i, true, ps.classes(), pp.classes()};
            for (bool h : hit)
                if (!h) probe.pi0_surjective = false;
            if (pp.classes() == 0) probe.pi0_surjective = true;
            rep.horns.push_back(probe);
        }
    }
    return rep;
}

}  // namespace kqr
