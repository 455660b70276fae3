#include "kqr/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kqr {

void ChainComplex::check_dd_zero() const {
    for (size_t d = 2; d < bnd.size(); ++d) {
        for (const auto& column : bnd[d]) {
            std::map<int, Int> acc;
            for (const auto& [mid, v] : column)
                for (const auto& [row, w] : bnd[d - 1][mid]) acc[row] += v * w;
            for (const auto& [row, v] : acc)
                if (v != 0) throw std::runtime_error("chain complex: dd != 0");
        }
    }
}

ChainComplex normalized_chains(const SimplicialSet& k) {
    ChainComplex c;
    int top = k.top_dim();
    c.ranks.resize(top + 1, 0);
    c.bnd.resize(top + 1);
    for (int d = 0; d <= top; ++d) c.ranks[d] = k.count(d);
    for (int d = 1; d <= top; ++d) {
        c.bnd[d].resize(c.ranks[d]);
        for (int x = 0; x < c.ranks[d]; ++x) {
            std::map<int, Int> acc;
            for (int i = 0; i <= d; ++i) {
                const SimplexRef& r = k.face(d, x, i);
                if (r.degenerate()) continue;
                acc[r.id] += (i % 2 == 0) ? 1 : -1;
            }
            for (const auto& [row, v] : acc)
                if (v != 0) c.bnd[d][x].push_back({row, v});
        }
    }
    c.check_dd_zero();
    return c;
}

namespace {

// Synchronized row/column sparse integer matrix for the normal form.
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::map<int, Int>> by_row;
    std::vector<std::map<int, Int>> by_col;

    void init(int r, int c) {
        rows = r;
        cols = c;
        by_row.assign(r, {});
        by_col.assign(c, {});
    }
    void set(int r, int c, const Int& v) {
        if (v == 0) {
            by_row[r].erase(c);
            by_col[c].erase(r);
        } else {
            by_row[r][c] = v;
            by_col[c][r] = v;
        }
    }
    void add(int r, int c, const Int& v) {
        if (v == 0) return;
        Int nv = v;
        auto it = by_row[r].find(c);
        if (it != by_row[r].end()) nv += it->second;
        set(r, c, nv);
    }
};

}  // namespace

SmithResult smith_normal_form_sparse(int rows, int cols,
                                     const std::vector<std::vector<std::pair<int, Int>>>& columns) {
    SparseMat m;
    m.init(rows, cols);
    for (int c = 0; c < (int)columns.size(); ++c)
        for (const auto& [r, v] : columns[c]) m.add(r, c, v);
    std::vector<char> row_done(rows, 0), col_done(cols, 0);
    SmithResult out;
    auto abs_ = [](const Int& v) { return v < 0 ? Int(-v) : v; };
    while (true) {
        // smallest-magnitude active pivot
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = 0; r < rows; ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : m.by_row[r]) {
                if (col_done[c]) continue;
                Int a = abs_(v);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                    if (best == 1) break;
                }
            }
            if (pr >= 0 && best == 1) break;
        }
        if (pr < 0) break;
        Int pivot = m.by_row[pr].at(pc);
        // clear the pivot column
        bool resume = false;
        std::vector<std::pair<int, Int>> col_entries(m.by_col[pc].begin(), m.by_col[pc].end());
        for (const auto& [r, v] : col_entries) {
            if (r == pr || row_done[r]) continue;
            Int q = v / pivot;
            if (q != 0) {
                std::vector<std::pair<int, Int>> prow(m.by_row[pr].begin(), m.by_row[pr].end());
                for (const auto& [c, w] : prow) m.add(r, c, -q * w);
            }
            if (m.by_row[r].count(pc)) resume = true;  // remainder smaller than pivot
        }
        if (resume) continue;
        // clear the pivot row
        std::vector<std::pair<int, Int>> row_entries(m.by_row[pr].begin(), m.by_row[pr].end());
        for (const auto& [c, v] : row_entries) {
            if (c == pc || col_done[c]) continue;
            Int q = v / pivot;
            if (q != 0) {
                std::vector<std::pair<int, Int>> pcol(m.by_col[pc].begin(), m.by_col[pc].end());
                for (const auto& [r, w] : pcol) m.add(r, c, -q * w);
            }
            if (m.by_row[pr].count(c)) resume = true;
        }
        if (resume) continue;
        // divisibility sweep: fold an offending row into the pivot row
        int bad_row = -1;
        for (int r = 0; r < rows && bad_row < 0; ++r) {
            if (row_done[r] || r == pr) continue;
            for (const auto& [c, v] : m.by_row[r]) {
                if (col_done[c] || c == pc) continue;
                if (v % pivot != 0) { bad_row = r; break; }
            }
        }
        if (bad_row >= 0) {
            std::vector<std::pair<int, Int>> brow(m.by_row[bad_row].begin(), m.by_row[bad_row].end());
            for (const auto& [c, v] : brow) m.add(pr, c, v);
            continue;
        }
        out.diagonal.push_back(abs_(pivot));
        row_done[pr] = 1;
        col_done[pc] = 1;
    }
    out.rank = (int)out.diagonal.size();
    return out;
}

SmithResult smith_normal_form(std::vector<std::vector<Int>> dense) {
    int rows = (int)dense.size();
    int cols = rows ? (int)dense[0].size() : 0;
    std::vector<std::vector<std::pair<int, Int>>> columns(cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (dense[r][c] != 0) columns[c].push_back({r, dense[r][c]});
    return smith_normal_form_sparse(rows, cols, columns);
}

namespace {

HomologyResult homology_of_chains(const ChainComplex& c) {
    HomologyResult h;
    int top = (int)c.ranks.size() - 1;
    h.betti.resize(top + 1, 0);
    h.torsion.resize(top + 1);
    std::vector<SmithResult> snf(top + 2);
    for (int d = 1; d <= top; ++d)
        snf[d] = smith_normal_form_sparse(c.ranks[d - 1], c.ranks[d], c.bnd[d]);
    for (int d = 0; d <= top; ++d) {
        int rank_d = d >= 1 ? snf[d].rank : 0;           // rank ∂_d
        int rank_d1 = d + 1 <= top ? snf[d + 1].rank : 0;  // rank ∂_{d+1}
        h.betti[d] = c.ranks[d] - rank_d - rank_d1;
        if (d + 1 <= top)
            for (const Int& v : snf[d + 1].diagonal)
                if (v > 1) h.torsion[d].push_back(v);
    }
    return h;
}

}  // namespace

HomologyResult homology(const SimplicialSet& k) {
    return homology_of_chains(normalized_chains(k));
}

int HomologyResult::reduced_betti(int d) const {
    if (d < 0 || d >= (int)betti.size()) return 0;
    if (d == 0) return std::max(0, betti[0] - 1);
    return betti[d];
}

bool HomologyResult::reduced_trivial() const {
    if (betti.empty()) return false;  // the empty complex is not acyclic
    if (betti[0] != 1) return false;
    for (size_t d = 1; d < betti.size(); ++d)
        if (betti[d] != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::string HomologyResult::brief() const {
    std::ostringstream os;
    for (size_t d = 0; d < betti.size(); ++d) {
        if (d) os << " ";
        os << "b" << d << "=" << betti[d];
        if (!torsion[d].empty()) {
            os << "+t(";
            for (size_t i = 0; i < torsion[d].size(); ++i)
                os << (i ? "," : "") << torsion[d][i];
            os << ")";
        }
    }
    return os.str();
}

Pi0 pi0(const SimplicialSet& k) {
    Pi0 out;
    int n = k.count(0);
    out.class_of.resize(n);
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int e = 0; e < k.count(1); ++e) {
        int u = find(k.face(1, e, 0).id);
        int v = find(k.face(1, e, 1).id);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        parent[v] = u;
    }
    std::map<int, int> root_to_class;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        auto [it, fresh] = root_to_class.insert({r, (int)out.representative.size()});
        if (fresh) out.representative.push_back(r);
        out.class_of[i] = it->second;
    }
    return out;
}

EquivalenceVerdict is_homology_equivalence(const SimplicialMap& f) {
    EquivalenceVerdict v;
    const SimplicialSet& x = *f.source;
    const SimplicialSet& y = *f.target;
    // π0 comparison
    Pi0 px = pi0(x), py = pi0(y);
    {
        std::set<int> image_classes;
        bool injective = true;
        std::map<int, int> send;
        for (int c = 0; c < px.classes(); ++c) {
            int img = py.class_of[f.at(0, px.representative[c]).id];
            if (!image_classes.insert(img).second) injective = false;
            send[c] = img;
        }
        v.pi0_bijective = injective && (int)image_classes.size() == py.classes();
    }
    // mapping cone of the normalized chain map: cone_d = X_{d-1} (+) Y_d,
    // boundary (a, b) -> (-da, f(a) + db); acyclic exactly when f induces
    // isomorphisms on integral homology in every degree
    ChainComplex cx = normalized_chains(x);
    ChainComplex cy = normalized_chains(y);
    int top = std::max(x.top_dim() + 1, y.top_dim());
    ChainComplex cone;
    cone.ranks.resize(top + 1, 0);
    cone.bnd.resize(top + 1);
    auto xr = [&](int d) { return (d >= 0 && d <= x.top_dim()) ? cx.ranks[d] : 0; };
    auto yr = [&](int d) { return (d >= 0 && d <= y.top_dim()) ? cy.ranks[d] : 0; };
    for (int d = 0; d <= top; ++d) cone.ranks[d] = xr(d - 1) + yr(d);
    for (int d = 1; d <= top; ++d) {
        cone.bnd[d].resize(cone.ranks[d]);
        for (int j = 0; j < xr(d - 1); ++j) {
            auto& column = cone.bnd[d][j];
            if (d - 1 >= 1)
                for (const auto& [row, v] : cx.bnd[d - 1][j]) column.push_back({row, -v});
            SimplexRef img = f.at(d - 1, j);
            if (!img.degenerate()) column.push_back({xr(d - 2) + img.id, 1});
        }
        for (int j = 0; j < yr(d); ++j) {
            auto& column = cone.bnd[d][xr(d - 1) + j];
            for (const auto& [row, v] : cy.bnd[d][j]) column.push_back({xr(d - 2) + row, v});
        }
    }
    cone.check_dd_zero();
    HomologyResult hc = homology_of_chains(cone);
    v.homology_iso = true;
    for (int d = 0; d <= top; ++d) {
        bool nonzero = hc.betti[d] != 0 || !hc.torsion[d].empty();
        // H_0 of the cone is never an obstruction when both sides are
        // nonempty with matching components; it is computed exactly anyway.
        if (nonzero) {
            v.homology_iso = false;
            v.failing_degree = d;
            break;
        }
    }
    return v;
}

namespace {

struct CollapseState {
    // live[d][x]: nondegenerate simplex still present
    std::vector<std::vector<bool>> live;
    int live_count = 0;
};

// incidence: for each nondegenerate (d-1)-simplex, the list of (coface id,
// multiplicity slots) among live d-simplices is recomputed on demand;
// complexes are small.
std::optional<CollapseCertificate> search_rec(const SimplicialSet& k, CollapseState st,
                                              CollapseCertificate cert, int& budget) {
    if (budget <= 0) return std::nullopt;
    --budget;
    if (st.live_count == 1 && st.live[0].end() != std::find(st.live[0].begin(), st.live[0].end(), true))
        return cert;
    // find free pairs: τ at dim d-1 appearing exactly once among faces of
    // live simplices, in a coface σ that is itself maximal
    std::vector<CollapseCertificate::Pair> options;
    int top = k.top_dim();
    std::vector<std::vector<int>> occurrences(top + 1);
    for (int d = 0; d <= top; ++d) occurrences[d].assign(k.count(d), 0);
    // count every reference to a nondegenerate base, including references
    // through degenerate face refs (their base is still an iterated face)
    for (int d = 1; d <= top; ++d)
        for (int x = 0; x < k.count(d); ++x) {
            if (!st.live[d][x]) continue;
            for (int i = 0; i <= d; ++i) {
                const SimplexRef& r = k.face(d, x, i);
                ++occurrences[r.base_dim][r.id];
            }
        }
    for (int d = 1; d <= top; ++d) {
        for (int x = 0; x < k.count(d); ++x) {
            if (!st.live[d][x] || occurrences[d][x] != 0) continue;  // σ must be maximal
            for (int i = 0; i <= d; ++i) {
                const SimplexRef& r = k.face(d, x, i);
                if (r.degenerate() || !st.live[r.base_dim][r.id]) continue;
                if (occurrences[d - 1][r.id] != 1) continue;  // free: the slot in σ
                options.push_back({d - 1, r.id, x});
            }
        }
    }
    if (options.empty()) return std::nullopt;
    // greedy with bounded backtracking: try options in order
    for (const auto& opt : options) {
        CollapseState st2 = st;
        st2.live[opt.free_dim][opt.free_id] = false;
        st2.live[opt.free_dim + 1][opt.coface_id] = false;
        st2.live_count -= 2;
        CollapseCertificate c2 = cert;
        c2.pairs.push_back(opt);
        auto res = search_rec(k, std::move(st2), std::move(c2), budget);
        if (res) return res;
        if (budget <= 0) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<CollapseCertificate> collapse_search(const SimplicialSet& k, int budget) {
    if (k.empty()) return std::nullopt;
    CollapseState st;
    st.live.resize(k.top_dim() + 1);
    for (int d = 0; d <= k.top_dim(); ++d) {
        st.live[d].assign(k.count(d), true);
        st.live_count += k.count(d);
    }
    if (st.live_count == 1) return CollapseCertificate{};
    int b = budget;
    return search_rec(k, std::move(st), CollapseCertificate{}, b);
}

bool replay_collapses(const SimplicialSet& k, const CollapseCertificate& cert) {
    std::vector<std::vector<bool>> live(k.top_dim() + 1);
    int count = 0;
    for (int d = 0; d <= k.top_dim(); ++d) {
        live[d].assign(k.count(d), true);
        count += k.count(d);
    }
    for (const auto& p : cert.pairs) {
        int d = p.free_dim;
        if (!live[d][p.free_id] || !live[d + 1][p.coface_id]) return false;
        // freeness audit at replay time (count bases of all face refs)
        int occ = 0, cof_occ = 0;
        for (int dd = 1; dd <= k.top_dim(); ++dd)
            for (int x = 0; x < k.count(dd); ++x) {
                if (!live[dd][x]) continue;
                for (int i = 0; i <= dd; ++i) {
                    const SimplexRef& r = k.face(dd, x, i);
                    if (r.base_dim == d && r.id == p.free_id) ++occ;
                    if (r.base_dim == d + 1 && r.id == p.coface_id) ++cof_occ;
                }
            }
        if (occ != 1 || cof_occ != 0) return false;
        live[d][p.free_id] = false;
        live[d + 1][p.coface_id] = false;
        count -= 2;
    }
    if (count != 1) return false;
    return live[0].end() != std::find(live[0].begin(), live[0].end(), true);
}

GroupPresentation edge_path_presentation(const SimplicialSet& k, int base_vertex) {
    GroupPresentation out;
    Pi0 comps = pi0(k);
    int base_class = comps.class_of[base_vertex];
    for (int c = 0; c < comps.classes(); ++c)
        if (c != base_class) out.restricted_to_base_component = true;

    // spanning tree on the base component by BFS over nondegenerate edges
    int nv = k.count(0);
    std::vector<int> tree_edge(nv, -1);  // edge id reaching this vertex
    std::vector<bool> visited(nv, false);
    std::vector<int> queue{base_vertex};
    visited[base_vertex] = true;
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge, other endpoint)
    for (int e = 0; e < k.count(1); ++e) {
        int u = k.face(1, e, 1).id;  // d_1 = source
        int v = k.face(1, e, 0).id;  // d_0 = target
        adj[u].push_back({e, v});
        adj[v].push_back({e, u});
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (auto [e, w] : adj[u]) {
            if (visited[w]) continue;
            visited[w] = true;
            tree_edge[w] = e;
            queue.push_back(w);
        }
    }
    std::vector<bool> in_tree(k.count(1), false);
    for (int v = 0; v < nv; ++v)
        if (tree_edge[v] >= 0) in_tree[tree_edge[v]] = true;
    // generators: off-tree edges within the base component
    std::vector<int> gen_of_edge(k.count(1), 0);  // 0 = none / tree
    for (int e = 0; e < k.count(1); ++e) {
        int u = k.face(1, e, 1).id;
        if (comps.class_of[u] != base_class) continue;
        if (!in_tree[e]) gen_of_edge[e] = ++out.generators;
    }
    // relators from nondegenerate 2-simplices within the component:
    // (d_2 σ)(d_0 σ)(d_1 σ)^{-1}, degenerate or tree edges contribute nothing
    auto letter = [&](const SimplexRef& r, bool inverse) -> int {
        if (r.degenerate()) return 0;
        int g = gen_of_edge[r.id];
        if (g == 0) return 0;
        return inverse ? -g : g;
    };
    for (int t = 0; t < k.count(2); ++t) {
        SimplexRef e01 = k.face(2, t, 2);
        SimplexRef e12 = k.face(2, t, 0);
        SimplexRef e02 = k.face(2, t, 1);
        // skip 2-simplices outside the base component
        SimplexRef v0 = k.act(SimplexRef{2, t, {}}, DeltaMap{0, 2, {0}});
        if (comps.class_of[v0.id] != base_class) continue;
        std::vector<int> word;
        for (int l : {letter(e01, false), letter(e12, false), letter(e02, true)})
            if (l != 0) word.push_back(l);
        // free reduction
        std::vector<int> red;
        for (int l : word) {
            if (!red.empty() && red.back() == -l) red.pop_back();
            else red.push_back(l);
        }
        if (!red.empty()) out.relators.push_back(std::move(red));
    }
    return out;
}

std::string GroupPresentation::brief() const {
    std::ostringstream os;
    os << "<" << generators << " generators | " << relators.size() << " relators>";
    return os.str();
}

}  // namespace kqr
