#include "kqr/subdivision.hpp"

#include <algorithm>

namespace kqr {

namespace {

std::vector<int> image_through(const DeltaMap& f, const std::vector<int>& subset) {
    std::vector<int> out;
    for (int v : subset) {
        int w = f.val[v];
        if (out.empty() || out.back() != w) out.push_back(w);
    }
    return out;
}

// positions of `subset` within the larger sorted set `within`
std::vector<int> positions_in(const std::vector<int>& within, const std::vector<int>& subset) {
    std::vector<int> out;
    size_t j = 0;
    for (int v : subset) {
        while (j < within.size() && within[j] != v) ++j;
        out.push_back((int)j);
    }
    return out;
}

// strict chains of nonempty subsets of [p], top = [p], of the given length;
// built downward from the top by proper nonempty subsets
void strict_chains(int len, std::vector<std::vector<int>>& cur, std::vector<Chain>& out) {
    if ((int)cur.size() == len) {
        out.emplace_back(cur.rbegin(), cur.rend());
        return;
    }
    const std::vector<int> top = cur.back();
    int m = (int)top.size();
    for (int mask = 1; mask < (1 << m) - 1; ++mask) {
        std::vector<int> sub;
        for (int b = 0; b < m; ++b)
            if (mask & (1 << b)) sub.push_back(top[b]);
        cur.push_back(std::move(sub));
        strict_chains(len, cur, out);
        cur.pop_back();
    }
}

std::vector<Chain> strict_chains_topfull(int p, int len) {
    std::vector<Chain> out;
    std::vector<std::vector<int>> cur;
    std::vector<int> full(p + 1);
    for (int i = 0; i <= p; ++i) full[i] = i;
    cur.push_back(full);
    strict_chains(len, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SimplexRef SdComplex::canonical_ref(int zdim, int zid, const Chain& chain) const {
    int p = zdim;
    int id = zid;
    Chain c = chain;
    std::vector<int> full(p + 1);
    for (int i = 0; i <= p; ++i) full[i] = i;
    if (c.back() != full) {
        // restrict z to the face spanned by the top, push the chain through
        const std::vector<int> top = c.back();
        DeltaMap mono{(int)top.size() - 1, p, top};
        SimplexRef r = base->act(zdim, zid, mono);
        DeltaMap eta = epi_of_word(r.dim(), r.epi);
        Chain pushed;
        for (const auto& s : c) pushed.push_back(image_through(eta, positions_in(top, s)));
        p = r.base_dim;
        id = r.id;
        c = std::move(pushed);
    }
    // strip repeats into the degeneracy word
    EpiWord word;
    Chain strict;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i + 1 < c.size() && c[i] == c[i + 1]) word.push_back((int)i);
        else strict.push_back(c[i]);
    }
    int q = (int)strict.size() - 1;
    auto it = index[q].find(SdCell{p, id, strict});
    if (it == index[q].end()) throw std::runtime_error("sd: canonical cell not found");
    return SimplexRef{q, it->second, word};
}

SdComplex sd(SSetPtr k) {
    SdComplex out;
    out.base = k;
    int top = k->top_dim();
    if (top < 0) {
        out.complex = share(empty_sset());
        out.last_vertex.source = out.complex;
        out.last_vertex.target = k;
        return out;
    }
    out.cells.resize(top + 1);
    out.index.resize(top + 1);
    for (int q = 0; q <= top; ++q) {
        for (int p = q; p <= top; ++p) {
            for (int z = 0; z < k->count(p); ++z) {
                for (auto& c : strict_chains_topfull(p, q + 1)) {
                    out.index[q][SdCell{p, z, c}] = (int)out.cells[q].size();
                    out.cells[q].push_back(SdCell{p, z, c});
                }
            }
        }
    }
    std::vector<int> counts(top + 1);
    std::vector<std::vector<std::vector<SimplexRef>>> faces(top + 1);
    for (int q = 0; q <= top; ++q) {
        counts[q] = (int)out.cells[q].size();
        faces[q].resize(counts[q]);
    }
    for (int q = 1; q <= top; ++q) {
        for (size_t x = 0; x < out.cells[q].size(); ++x) {
            const SdCell& cell = out.cells[q][x];
            for (int i = 0; i <= q; ++i) {
                Chain c = cell.chain;
                c.erase(c.begin() + i);
                faces[q][x].push_back(out.canonical_ref(cell.zdim, cell.zid, c));
            }
        }
    }
    out.complex = share(SimplicialSet(std::move(counts), std::move(faces)));
    // last-vertex map: a chain goes to the simplex picking max of each entry
    out.last_vertex.source = out.complex;
    out.last_vertex.target = k;
    out.last_vertex.assign.resize(out.complex->top_dim() + 1);
    for (int q = 0; q <= out.complex->top_dim(); ++q) {
        for (const SdCell& cell : out.cells[q]) {
            DeltaMap lambda{q, cell.zdim, {}};
            for (const auto& s : cell.chain) lambda.val.push_back(s.back());
            out.last_vertex.assign[q].push_back(k->act(cell.zdim, cell.zid, lambda));
        }
    }
    return out;
}

SimplicialMap sd_map(const SimplicialMap& f, const SdComplex& sd_k, const SdComplex& sd_l) {
    SimplicialMap out;
    out.source = sd_k.complex;
    out.target = sd_l.complex;
    out.assign.resize(sd_k.complex->top_dim() + 1);
    for (int q = 0; q <= sd_k.complex->top_dim(); ++q) {
        for (const SdCell& cell : sd_k.cells[q]) {
            SimplexRef img = f.at(cell.zdim, cell.zid);
            DeltaMap eta = epi_of_word(cell.zdim, img.epi);
            Chain pushed;
            for (const auto& s : cell.chain) pushed.push_back(image_through(eta, s));
            out.assign[q].push_back(sd_l.canonical_ref(img.base_dim, img.id, pushed));
        }
    }
    return out;
}

SdIter sd_iter(SSetPtr k, int iterations) {
    SdIter out;
    out.complex = k;
    out.composite = identity_map(k);
    for (int i = 0; i < iterations; ++i) {
        SdComplex s = sd(out.complex);
        out.composite = compose(out.composite, s.last_vertex);
        out.complex = s.complex;
    }
    return out;
}

const SdComplex& shared_sd_simplex(int n) {
    static std::vector<SdComplex> cache;
    if ((int)cache.size() <= n) cache.resize(n + 1);
    if (!cache[n].complex) cache[n] = sd(shared_simplex(n));
    return cache[n];
}

SimplicialMap sd_of_delta(const DeltaMap& op) {
    return sd_map(delta_as_map(op), shared_sd_simplex(op.dom), shared_sd_simplex(op.cod));
}

}  // namespace kqr
