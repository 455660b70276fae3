#include "doctest.h"

#include "kqr/colimits.hpp"
#include "kqr/hom_search.hpp"
#include "kqr/oracles.hpp"
#include "kqr/subdivision.hpp"

using namespace kqr;

namespace {

// Independent chain-counting oracle: the number of strictly increasing
// chains of k+1 nonempty subsets of {0..n}, by inclusion-exclusion over
// labelings (each element gets the first chain stage containing it).
long long chain_count(int n, int k) {
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    auto ipow = [](long long b, int e) {
        long long r = 1;
        while (e--) r *= b;
        return r;
    };
    long long total = 0;
    for (int j = 0; j <= k + 1; ++j)
        total += (j % 2 ? -1 : 1) * binom(k + 1, j) * ipow(k + 2 - j, n + 1);
    return total;
}

}  // namespace

TEST_CASE("subdivision census against the chain-counting oracle") {
    for (int n = 0; n <= 4; ++n) {
        SdComplex s = sd(shared_simplex(n));
        s.complex->validate();
        for (int k = 0; k <= n; ++k) CHECK(s.complex->count(k) == chain_count(n, k));
    }
}

TEST_CASE("sd of the interval with its last-vertex map") {
    SdComplex s = sd(shared_simplex(1));
    CHECK(s.complex->count(0) == 3);
    CHECK(s.complex->count(1) == 2);
    s.last_vertex.validate();
    // the barycenter {01} goes to vertex 1
    int bary = s.index[0].at(SdCell{1, 0, {{0, 1}}});
    CHECK(s.last_vertex.at(0, bary) == SimplexRef{0, 1, {}});
}

TEST_CASE("sd fixes points and iterates on intervals") {
    SdIter i3 = sd_iter(shared_simplex(0), 3);
    CHECK(i3.complex->count(0) == 1);
    CHECK(i3.complex->top_dim() == 0);

    SdIter t = sd_iter(shared_simplex(1), 2);
    t.complex->validate();
    CHECK(t.complex->count(0) == 5);
    CHECK(t.complex->count(1) == 4);
    t.composite.validate();

    SdIter t0 = sd_iter(shared_simplex(1), 0);
    CHECK(same_map(t0.composite, identity_map(shared_simplex(1))));
}

TEST_CASE("sd of the quotient circle via the colimit formula") {
    auto circle = quotient(boundary_inclusion(1)).object;  // 1 vertex, 1 loop
    SdComplex s = sd(circle);
    s.complex->validate();
    CHECK(s.complex->count(0) == 2);  // barycenter plus the endpoint class
    CHECK(s.complex->count(1) == 2);
    s.last_vertex.validate();
    // still a circle
    HomologyResult h = homology(*s.complex);
    CHECK(h.betti[0] == 1);
    CHECK(h.betti[1] == 1);
}

TEST_CASE("sd preserves coproducts") {
    auto k = share(boundary(2));
    auto l = shared_simplex(1);
    auto c = coproduct({k, l});
    SdComplex sc = sd(c.sum);
    SdComplex sk = sd(k);
    SdComplex sl = sd(l);
    for (int d = 0; d <= sc.complex->top_dim(); ++d)
        CHECK(sc.complex->count(d) == sk.complex->count(d) + sl.complex->count(d));
}

TEST_CASE("sd preserves monomorphisms") {
    for (auto mono : {boundary_inclusion(2), horn_inclusion(2, 1), horn_inclusion(3, 0)}) {
        SdComplex src = sd(mono.source);
        SdComplex dst = sd(mono.target);
        SimplicialMap sm = sd_map(mono, src, dst);
        sm.validate();
        CHECK(sm.is_mono());
    }
}

TEST_CASE("sd is functorial on sampled composable pairs") {
    auto k = share(horn(2, 1));
    auto l = shared_simplex(2);
    auto m = shared_simplex(1);
    SdComplex sk = sd(k), sl = sd(l), sm_ = sd(m);
    SimplicialMap f = horn_inclusion(2, 1);
    for (const auto& g : enumerate_maps(l, m)) {
        SimplicialMap lhs = sd_map(compose(g, f), sk, sm_);
        SimplicialMap rhs = compose(sd_map(g, sl, sm_), sd_map(f, sk, sl));
        CHECK(same_map(lhs, rhs));
    }
}

TEST_CASE("last-vertex map is natural") {
    auto k = share(horn(2, 1));
    auto l = shared_simplex(2);
    SdComplex sk = sd(k), sl = sd(l);
    SimplicialMap f = horn_inclusion(2, 1);
    CHECK(same_map(compose(sl.last_vertex, sd_map(f, sk, sl)), compose(f, sk.last_vertex)));
    // and for a non-injective sample
    for (const auto& g : enumerate_maps(l, shared_simplex(1))) {
        SdComplex st = sd(shared_simplex(1));
        CHECK(same_map(compose(st.last_vertex, sd_map(g, sl, st)), compose(g, sl.last_vertex)));
    }
}

TEST_CASE("last-vertex maps are homology equivalences on the small corpus") {
    std::vector<SSetPtr> corpus = {shared_simplex(1), shared_simplex(2), share(boundary(2)),
                                   share(horn(2, 1)), share(boundary(3))};
    for (const auto& k : corpus) {
        SdComplex s = sd(k);
        EquivalenceVerdict v = is_homology_equivalence(s.last_vertex);
        CHECK(v.ok());
    }
}

TEST_CASE("subdivided cosimplicial operators compose") {
    SimplicialMap a = sd_of_delta(delta_face(2, 1));
    a.validate();
    SimplicialMap b = sd_of_delta(delta_degeneracy(1, 0));
    b.validate();
    SimplicialMap c = sd_of_delta(compose(delta_degeneracy(1, 0), delta_face(2, 1)));
    CHECK(same_map(compose(b, a), c));
}
