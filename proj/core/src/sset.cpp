#include "kqr/sset.hpp"

#include <algorithm>
#include <map>

namespace kqr {

std::vector<DeltaMap> all_delta_maps(int m, int n) {
    std::vector<DeltaMap> out;
    if (m < 0 || n < 0) return out;
    std::vector<int> v(m + 1, 0);
    while (true) {
        out.push_back(DeltaMap{m, n, v});
        int i = m;
        while (i >= 0 && v[i] == n) --i;
        if (i < 0) break;
        ++v[i];
        for (int j = i + 1; j <= m; ++j) v[j] = v[i];
    }
    return out;
}

std::vector<DeltaMap> all_delta_epis(int m, int p) {
    std::vector<DeltaMap> out;
    for (auto& f : all_delta_maps(m, p))
        if (is_surjective(f)) out.push_back(f);
    return out;
}

SimplicialSet::SimplicialSet(std::vector<int> counts,
                             std::vector<std::vector<std::vector<SimplexRef>>> faces)
    : counts_(std::move(counts)), faces_(std::move(faces)) {
    while (!counts_.empty() && counts_.back() == 0) {
        counts_.pop_back();
        faces_.pop_back();
    }
}

int SimplicialSet::total_nondeg() const {
    int t = 0;
    for (int c : counts_) t += c;
    return t;
}

SimplexRef SimplicialSet::act(int d, int x, const DeltaMap& f) const {
    // Peel mono part through stored faces, then fold the epi part.
    DeltaMap epi, mono;
    epi_mono_factor(f, epi, mono);
    // resolve z·mono by peeling missing indices from the top
    int cur_d = d;
    int cur_x = x;
    DeltaMap mu = mono;
    while (mu.dom < cur_d) {
        // largest index of [cur_d] missing from im(mu)
        int miss = -1;
        int k = mu.dom;
        for (int v = cur_d; v >= 0; --v) {
            if (k >= 0 && mu.val[k] == v) --k;
            else { miss = v; break; }
        }
        const SimplexRef& fr = faces_[cur_d][cur_x][miss];
        // reindex mu past miss: values > miss shift down
        for (auto& v : mu.val)
            if (v > miss) --v;
        mu.cod = cur_d - 1;
        // continue through fr = (z', eta'): need z'·(eta'∘mu)
        DeltaMap eta = epi_of_word(fr.dim(), fr.epi);
        DeltaMap comp = compose(eta, mu);
        DeltaMap e2, m2;
        epi_mono_factor(comp, e2, m2);
        epi = compose(e2, epi);
        mu = m2;
        cur_d = fr.base_dim;
        cur_x = fr.id;
    }
    return SimplexRef{cur_d, cur_x, word_of_epi(epi)};
}

SimplexRef SimplicialSet::act(const SimplexRef& r, const DeltaMap& f) const {
    DeltaMap eta = epi_of_word(r.dim(), r.epi);
    return act(r.base_dim, r.id, compose(eta, f));
}

SimplexRef SimplicialSet::face_of(const SimplexRef& r, int i) const {
    return act(r, delta_face(r.dim(), i));
}

SimplexRef SimplicialSet::degeneracy_of(const SimplexRef& r, int j) const {
    return act(r, delta_degeneracy(r.dim(), j));
}

std::vector<SimplexRef> SimplicialSet::refs(int d) const {
    std::vector<SimplexRef> out;
    for (int p = 0; p <= std::min(d, top_dim()); ++p) {
        if (counts_[p] == 0) continue;
        auto epis = all_delta_epis(d, p);
        for (int x = 0; x < counts_[p]; ++x)
            for (auto& e : epis) out.push_back(SimplexRef{p, x, word_of_epi(e)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialSet::has_ref(const SimplexRef& r) const {
    if (r.base_dim < 0 || r.base_dim > top_dim()) return false;
    if (r.id < 0 || r.id >= counts_[r.base_dim]) return false;
    return word_ok(r.dim(), r.epi);
}

void SimplicialSet::validate() const {
    if ((int)faces_.size() != (int)counts_.size())
        throw std::runtime_error("sset: ragged face table");
    for (int d = 0; d <= top_dim(); ++d) {
        if ((int)faces_[d].size() != counts_[d])
            throw std::runtime_error("sset: face table size mismatch");
        for (int x = 0; x < counts_[d]; ++x) {
            if (d == 0) {
                if (!faces_[d][x].empty())
                    throw std::runtime_error("sset: vertex with faces");
                continue;
            }
            if ((int)faces_[d][x].size() != d + 1)
                throw std::runtime_error("sset: wrong face count");
            for (int i = 0; i <= d; ++i) {
                const SimplexRef& r = faces_[d][x][i];
                if (r.dim() != d - 1 || !has_ref(r))
                    throw std::runtime_error("sset: invalid face ref");
            }
        }
    }
    // identities audit on all simplices up to top_dim()+1
    for (int d = 2; d <= top_dim() + 1; ++d) {
        for (const auto& r : refs(d)) {
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    SimplexRef a = face_of(face_of(r, j), i);
                    SimplexRef b = face_of(face_of(r, i), j - 1);
                    if (a != b) throw std::runtime_error("sset: d_i d_j audit failed");
                }
            }
        }
    }
}

SimplexRef SimplicialMap::apply(const SimplexRef& r) const {
    const SimplexRef& img = assign[r.base_dim][r.id];
    if (r.epi.empty()) return img;
    DeltaMap eta = epi_of_word(r.dim(), r.epi);
    return target->act(img, eta);
}

void SimplicialMap::validate() const {
    if ((int)assign.size() != source->top_dim() + 1)
        throw std::runtime_error("map: assignment has wrong dimension range");
    for (int d = 0; d <= source->top_dim(); ++d) {
        if ((int)assign[d].size() != source->count(d))
            throw std::runtime_error("map: assignment size mismatch");
        for (int x = 0; x < source->count(d); ++x) {
            const SimplexRef& img = assign[d][x];
            if (img.dim() != d || !target->has_ref(img))
                throw std::runtime_error("map: image ref invalid");
            for (int i = 0; i <= d && d > 0; ++i) {
                SimplexRef lhs = target->face_of(img, i);
                SimplexRef rhs = apply(source->face(d, x, i));
                if (lhs != rhs) throw std::runtime_error("map: face commutation failed");
            }
        }
    }
}

bool SimplicialMap::is_mono() const {
    for (int d = 0; d <= source->top_dim(); ++d) {
        std::vector<SimplexRef> imgs;
        for (int x = 0; x < source->count(d); ++x) {
            if (assign[d][x].degenerate()) return false;
            imgs.push_back(assign[d][x]);
        }
        std::sort(imgs.begin(), imgs.end());
        if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end()) return false;
    }
    return true;
}

SimplicialMap identity_map(SSetPtr k) {
    SimplicialMap f;
    f.source = k;
    f.target = k;
    f.assign.resize(k->top_dim() + 1);
    for (int d = 0; d <= k->top_dim(); ++d)
        for (int x = 0; x < k->count(d); ++x)
            f.assign[d].push_back(SimplexRef{d, x, {}});
    return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap h;
    h.source = f.source;
    h.target = g.target;
    h.assign.resize(f.assign.size());
    for (size_t d = 0; d < f.assign.size(); ++d)
        for (const auto& r : f.assign[d]) h.assign[d].push_back(g.apply(r));
    return h;
}

bool same_map(const SimplicialMap& f, const SimplicialMap& g) {
    return f.assign == g.assign;
}

namespace {

// subsets of {0..n} of size k+1, lexicographic; id = rank
std::vector<std::vector<int>> subsets_of_size(int n, int sz) {
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

}  // namespace

int face_id_of_subset(int n, const std::vector<int>& subset) {
    auto all = subsets_of_size(n, (int)subset.size());
    auto it = std::lower_bound(all.begin(), all.end(), subset);
    if (it == all.end() || *it != subset)
        throw std::runtime_error("face_id_of_subset: not found");
    return (int)(it - all.begin());
}

std::vector<int> subset_of_face_id(int n, int k, int id) {
    return subsets_of_size(n, k + 1)[id];
}

namespace {

// Build the subcomplex of Δ^n containing exactly the faces for which
// keep(S) is true (keep must be closed under subsets). Optionally records
// the vertex subset of each cell.
template <typename Keep>
SimplicialSet faces_complex(int n, Keep keep,
                            std::vector<std::vector<std::vector<int>>>* subsets_out = nullptr) {
    std::vector<std::vector<std::vector<int>>> cells(n + 1);
    std::vector<std::map<std::vector<int>, int>> index(n + 1);
    for (int k = 0; k <= n; ++k) {
        for (auto& s : subsets_of_size(n, k + 1)) {
            if (!keep(s)) continue;
            index[k][s] = (int)cells[k].size();
            cells[k].push_back(s);
        }
    }
    std::vector<int> counts(n + 1);
    std::vector<std::vector<std::vector<SimplexRef>>> faces(n + 1);
    for (int k = 0; k <= n; ++k) {
        counts[k] = (int)cells[k].size();
        faces[k].resize(cells[k].size());
        if (k == 0) continue;
        for (size_t x = 0; x < cells[k].size(); ++x) {
            for (int i = 0; i <= k; ++i) {
                std::vector<int> s = cells[k][x];
                s.erase(s.begin() + i);
                auto it = index[k - 1].find(s);
                if (it == index[k - 1].end())
                    throw std::runtime_error("faces_complex: not face-closed");
                faces[k][x].push_back(SimplexRef{k - 1, it->second, {}});
            }
        }
    }
    if (subsets_out) *subsets_out = cells;
    return SimplicialSet(std::move(counts), std::move(faces));
}

}  // namespace

SimplicialSet standard_simplex(int n) {
    return faces_complex(n, [](const std::vector<int>&) { return true; });
}

std::vector<std::vector<std::vector<int>>> simplex_cell_subsets(int n) {
    std::vector<std::vector<std::vector<int>>> subsets;
    faces_complex(n, [](const std::vector<int>&) { return true; }, &subsets);
    return subsets;
}

std::vector<std::vector<std::vector<int>>> horn_cell_subsets(int n, int i) {
    std::vector<std::vector<std::vector<int>>> subsets;
    faces_complex(n, [n, i](const std::vector<int>& s) {
        if ((int)s.size() == n + 1) return false;
        if ((int)s.size() == n) {
            int missing = n * (n + 1) / 2;
            for (int v : s) missing -= v;
            if (missing == i) return false;
        }
        return true;
    }, &subsets);
    return subsets;
}

SimplicialSet boundary(int n) {
    return faces_complex(n, [n](const std::vector<int>& s) { return (int)s.size() <= n; });
}

SimplicialSet horn(int n, int i) {
    if (n < 1) throw std::invalid_argument("horn: n must be >= 1");
    if (i < 0 || i > n) throw std::invalid_argument("horn: bad i");
    return faces_complex(n, [n, i](const std::vector<int>& s) {
        if ((int)s.size() == n + 1) return false;
        if ((int)s.size() == n) {
            // the face missing exactly {i} is excluded
            int missing = n * (n + 1) / 2;
            for (int v : s) missing -= v;
            if (missing == i) return false;
        }
        return true;
    });
}

SimplicialSet empty_sset() { return SimplicialSet(); }

SSetPtr shared_simplex(int n) {
    static std::vector<SSetPtr> cache;
    if ((int)cache.size() <= n) cache.resize(n + 1);
    if (!cache[n]) cache[n] = share(standard_simplex(n));
    return cache[n];
}

namespace {

template <typename Keep>
SimplicialMap faces_inclusion(int n, Keep keep) {
    std::vector<std::vector<std::vector<int>>> subsets;
    auto sub = share(faces_complex(n, keep, &subsets));
    SimplicialMap f;
    f.source = sub;
    f.target = shared_simplex(n);
    f.assign.resize(sub->top_dim() + 1);
    for (int k = 0; k <= sub->top_dim(); ++k)
        for (const auto& s : subsets[k])
            f.assign[k].push_back(SimplexRef{k, face_id_of_subset(n, s), {}});
    return f;
}

}  // namespace

SimplicialMap boundary_inclusion(int n) {
    return faces_inclusion(n, [n](const std::vector<int>& s) { return (int)s.size() <= n; });
}

SimplicialMap horn_inclusion(int n, int i) {
    if (n < 1) throw std::invalid_argument("horn: n must be >= 1");
    return faces_inclusion(n, [n, i](const std::vector<int>& s) {
        if ((int)s.size() == n + 1) return false;
        if ((int)s.size() == n) {
            int missing = n * (n + 1) / 2;
            for (int v : s) missing -= v;
            if (missing == i) return false;
        }
        return true;
    });
}

SimplicialMap delta_as_map(const DeltaMap& f) {
    SimplicialMap m;
    m.source = shared_simplex(f.dom);
    m.target = shared_simplex(f.cod);
    m.assign.resize(f.dom + 1);
    for (int k = 0; k <= f.dom; ++k) {
        auto subs = subsets_of_size(f.dom, k + 1);
        for (auto& s : subs) {
            // image of the face as a simplex of Δ^cod: the composite
            // [k] -> [dom] -> [cod], in normal form over subset faces.
            std::vector<int> vals;
            for (int v : s) vals.push_back(f.val[v]);
            DeltaMap comp{k, f.cod, vals};
            DeltaMap epi, mono;
            epi_mono_factor(comp, epi, mono);
            int id = face_id_of_subset(f.cod, mono.val);
            m.assign[k].push_back(SimplexRef{mono.dom, id, word_of_epi(epi)});
        }
    }
    return m;
}

SimplicialMap simplex_as_map(SSetPtr k, const SimplexRef& r) {
    int d = r.dim();
    SimplicialMap m;
    m.source = shared_simplex(d);
    m.target = k;
    m.assign.resize(d + 1);
    for (int kk = 0; kk <= d; ++kk) {
        for (auto& s : subsets_of_size(d, kk + 1)) {
            DeltaMap mono{kk, d, s};
            m.assign[kk].push_back(k->act(r, mono));
        }
    }
    return m;
}

SimplicialMap terminal_map(SSetPtr k) {
    SimplicialMap f;
    f.source = k;
    f.target = shared_simplex(0);
    f.assign.resize(k->top_dim() + 1);
    for (int d = 0; d <= k->top_dim(); ++d) {
        EpiWord w;
        for (int i = 0; i < d; ++i) w.push_back(i);
        for (int x = 0; x < k->count(d); ++x)
            f.assign[d].push_back(SimplexRef{0, 0, w});
    }
    return f;
}

SimplicialMap subcomplex_inclusion(SSetPtr k, const std::vector<std::vector<int>>& keep) {
    int sub_top = -1;
    for (size_t d = 0; d < keep.size(); ++d)
        if (!keep[d].empty()) sub_top = (int)d;
    std::vector<std::vector<int>> old_of(sub_top + 1);
    std::vector<std::vector<int>> new_of(sub_top + 1);
    for (int d = 0; d <= sub_top; ++d) {
        old_of[d] = keep[d];
        std::sort(old_of[d].begin(), old_of[d].end());
        old_of[d].erase(std::unique(old_of[d].begin(), old_of[d].end()), old_of[d].end());
        new_of[d].assign(k->count(d), -1);
        for (size_t i = 0; i < old_of[d].size(); ++i) new_of[d][old_of[d][i]] = (int)i;
    }
    std::vector<int> counts(sub_top + 1);
    std::vector<std::vector<std::vector<SimplexRef>>> faces(sub_top + 1);
    for (int d = 0; d <= sub_top; ++d) {
        counts[d] = (int)old_of[d].size();
        faces[d].resize(counts[d]);
        if (d == 0) continue;
        for (int x = 0; x < counts[d]; ++x) {
            for (int i = 0; i <= d; ++i) {
                SimplexRef r = k->face(d, old_of[d][x], i);
                if (r.base_dim > sub_top || new_of[r.base_dim][r.id] < 0)
                    throw std::runtime_error("subcomplex: selection not face-closed");
                faces[d][x].push_back(SimplexRef{r.base_dim, new_of[r.base_dim][r.id], r.epi});
            }
        }
    }
    SimplicialMap inc;
    inc.source = share(SimplicialSet(std::move(counts), std::move(faces)));
    inc.target = k;
    inc.assign.resize(sub_top + 1);
    for (int d = 0; d <= sub_top; ++d)
        for (int old : old_of[d]) inc.assign[d].push_back(SimplexRef{d, old, {}});
    return inc;
}

std::vector<std::vector<int>> mono_image(const SimplicialMap& f) {
    if (!f.is_mono()) throw std::runtime_error("mono_image: map is not a monomorphism");
    std::vector<std::vector<int>> keep(f.target->top_dim() + 1);
    for (size_t d = 0; d < f.assign.size(); ++d)
        for (const auto& r : f.assign[d]) keep[r.base_dim].push_back(r.id);
    return keep;
}

}  // namespace kqr
