#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace kqr {

/// A weakly monotone map [dom] -> [cod] between finite ordinals
/// {0,...,dom} and {0,...,cod}, stored by its values.
struct DeltaMap {
    int dom = 0;
    int cod = 0;
    std::vector<int> val;  // size dom+1, weakly increasing, entries in [0, cod]

    bool ok() const {
        if ((int)val.size() != dom + 1) return false;
        for (int i = 0; i <= dom; ++i) {
            if (val[i] < 0 || val[i] > cod) return false;
            if (i > 0 && val[i] < val[i - 1]) return false;
        }
        return true;
    }
    int operator()(int i) const { return val[i]; }
    friend auto operator<=>(const DeltaMap&, const DeltaMap&) = default;
};

inline DeltaMap delta_identity(int n) {
    DeltaMap f{n, n, {}};
    f.val.resize(n + 1);
    for (int i = 0; i <= n; ++i) f.val[i] = i;
    return f;
}

/// Coface: the injection [n-1] -> [n] missing i.
inline DeltaMap delta_face(int n, int i) {
    assert(n >= 1 && 0 <= i && i <= n);
    DeltaMap f{n - 1, n, {}};
    f.val.reserve(n);
    for (int k = 0; k <= n; ++k)
        if (k != i) f.val.push_back(k);
    return f;
}

/// Codegeneracy: the surjection [n+1] -> [n] repeating i.
inline DeltaMap delta_degeneracy(int n, int i) {
    assert(0 <= i && i <= n);
    DeltaMap f{n + 1, n, {}};
    f.val.reserve(n + 2);
    for (int k = 0; k <= n + 1; ++k) f.val.push_back(k <= i ? k : k - 1);
    return f;
}

inline DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
    assert(f.cod == g.dom);
    DeltaMap h{f.dom, g.cod, {}};
    h.val.reserve(f.dom + 1);
    for (int i = 0; i <= f.dom; ++i) h.val.push_back(g.val[f.val[i]]);
    return h;
}

inline bool is_injective(const DeltaMap& f) {
    for (int i = 1; i <= f.dom; ++i)
        if (f.val[i] == f.val[i - 1]) return false;
    return true;
}

inline bool is_surjective(const DeltaMap& f) {
    if (f.dom < f.cod) return false;
    int expect = 0;
    for (int i = 0; i <= f.dom; ++i) {
        if (f.val[i] == expect) ++expect;
        else if (f.val[i] > expect) return false;
    }
    return expect == f.cod + 1;
}

/// Factor f = mono ∘ epi with epi onto the image.
inline void epi_mono_factor(const DeltaMap& f, DeltaMap& epi, DeltaMap& mono) {
    std::vector<int> image;
    for (int i = 0; i <= f.dom; ++i)
        if (image.empty() || image.back() != f.val[i]) image.push_back(f.val[i]);
    int r = (int)image.size() - 1;
    mono = DeltaMap{r, f.cod, image};
    epi = DeltaMap{f.dom, r, {}};
    epi.val.reserve(f.dom + 1);
    int j = 0;
    for (int i = 0; i <= f.dom; ++i) {
        while (image[j] != f.val[i]) ++j;
        epi.val.push_back(j);
    }
}

/// Degeneracy words: a surjection [m] ->> [p] encoded as the strictly
/// increasing list of collapsed positions {i : f(i) = f(i+1)}, each < m.
using EpiWord = std::vector<int>;

inline EpiWord word_of_epi(const DeltaMap& f) {
    assert(is_surjective(f));
    EpiWord w;
    for (int i = 0; i < f.dom; ++i)
        if (f.val[i] == f.val[i + 1]) w.push_back(i);
    return w;
}

inline DeltaMap epi_of_word(int m, const EpiWord& w) {
    DeltaMap f{m, m - (int)w.size(), {}};
    f.val.reserve(m + 1);
    int v = 0;
    size_t k = 0;
    for (int i = 0; i <= m; ++i) {
        f.val.push_back(v);
        if (k < w.size() && w[k] == i) ++k;  // position collapsed onto the next
        else ++v;
    }
    return f;
}

inline bool word_ok(int m, const EpiWord& w) {
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] < 0 || w[k] >= m) return false;
        if (k > 0 && w[k] <= w[k - 1]) return false;
    }
    return true;
}

/// All monotone maps [m] -> [n], in lexicographic order of value vectors.
std::vector<DeltaMap> all_delta_maps(int m, int n);

/// All surjections [m] ->> [p], lexicographic.
std::vector<DeltaMap> all_delta_epis(int m, int p);

}  // namespace kqr
