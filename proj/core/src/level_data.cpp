#include "kqr/level_data.hpp"

#include <stdexcept>

namespace kqr {

void LevelData::check_shape() const {
    int n = max_dim();
    if ((int)face.size() != n + 1 || (int)degen.size() != n + 1)
        throw std::runtime_error("level_data: ragged tables");
    for (int d = 1; d <= n; ++d) {
        if ((int)face[d].size() != d + 1)
            throw std::runtime_error("level_data: face arity");
        for (int i = 0; i <= d; ++i)
            if ((int)face[d][i].size() != sizes[d])
                throw std::runtime_error("level_data: face table size");
    }
    for (int d = 0; d < n; ++d) {
        if ((int)degen[d].size() != d + 1)
            throw std::runtime_error("level_data: degen arity");
        for (int j = 0; j <= d; ++j)
            if ((int)degen[d][j].size() != sizes[d])
                throw std::runtime_error("level_data: degen table size");
    }
}

Normalized normalize(const LevelData& levels) {
    int n = levels.max_dim();
    Normalized out;
    out.ref_of.resize(n + 1);
    out.elem_of_nondeg.resize(n + 1);
    std::vector<int> counts;
    std::vector<std::vector<std::vector<SimplexRef>>> faces;

    for (int d = 0; d <= n; ++d) {
        out.ref_of[d].resize(levels.sizes[d]);
        counts.push_back(0);
        faces.emplace_back();
        for (int x = 0; x < levels.sizes[d]; ++x) {
            int hit = -1;
            for (int j = 0; j < d; ++j) {
                int y = levels.face[d][j][x];
                if (levels.degen[d - 1][j][y] == x) { hit = j; break; }
            }
            if (hit >= 0) {
                // x = s_j y: normal form of y, with the collapse folded in
                int y = levels.face[d][hit][x];
                const SimplexRef& ry = out.ref_of[d - 1][y];
                DeltaMap eta = epi_of_word(d - 1, ry.epi);
                DeltaMap comp = compose(eta, delta_degeneracy(d - 1, hit));
                out.ref_of[d][x] = SimplexRef{ry.base_dim, ry.id, word_of_epi(comp)};
            } else {
                int id = counts[d]++;
                out.ref_of[d][x] = SimplexRef{d, id, {}};
                out.elem_of_nondeg[d].push_back(x);
                std::vector<SimplexRef> fcs;
                for (int i = 0; i <= d && d > 0; ++i)
                    fcs.push_back(out.ref_of[d - 1][levels.face[d][i][x]]);
                faces[d].push_back(std::move(fcs));
            }
        }
    }
    out.sset = SimplicialSet(std::move(counts), std::move(faces));
    return out;
}

int Normalized::element_of(const SimplexRef& r, const LevelData& levels) const {
    int e = elem_of_nondeg[r.base_dim][r.id];
    int d = r.base_dim;
    // Peel the epi as an outermost codegeneracy σ_v and recurse: the σ_v
    // factor acts first, as s_v at the current level.
    DeltaMap cur = epi_of_word(r.dim(), r.epi);
    while (cur.dom > cur.cod) {
        int i = 0;
        while (cur.val[i] != cur.val[i + 1]) ++i;
        int v = cur.val[i];
        e = levels.degen[d][v][e];
        ++d;
        for (int t = i + 1; t <= cur.dom; ++t) ++cur.val[t];
        ++cur.cod;
    }
    return e;
}

}  // namespace kqr
