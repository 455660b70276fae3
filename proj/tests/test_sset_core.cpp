#include "doctest.h"

#include "kqr/colimits.hpp"
#include "kqr/hom_search.hpp"
#include "kqr/sset.hpp"

using namespace kqr;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("standard simplices have binomial cell counts") {
    for (int n = 0; n <= 6; ++n) {
        SimplicialSet d = standard_simplex(n);
        d.validate();
        for (int k = 0; k <= n; ++k) CHECK(d.count(k) == binom(n + 1, k + 1));
    }
}

TEST_CASE("boundary and horn cell counts") {
    SimplicialSet b1 = boundary(1);
    b1.validate();
    CHECK(b1.count(0) == 2);
    CHECK(b1.count(1) == 0);

    SimplicialSet b2 = boundary(2);
    b2.validate();
    CHECK(b2.count(0) == 3);
    CHECK(b2.count(1) == 3);
    CHECK(b2.count(2) == 0);

    SimplicialSet h = horn(2, 1);
    h.validate();
    CHECK(h.count(0) == 3);
    CHECK(h.count(1) == 2);

    CHECK(boundary(0).empty());
    CHECK_THROWS(horn(0, 0));
}

TEST_CASE("inclusions validate and are monomorphisms") {
    for (int n = 1; n <= 3; ++n) {
        SimplicialMap bi = boundary_inclusion(n);
        bi.validate();
        CHECK(bi.is_mono());
        for (int i = 0; i <= n; ++i) {
            SimplicialMap hi = horn_inclusion(n, i);
            hi.validate();
            CHECK(hi.is_mono());
        }
    }
}

TEST_CASE("operator evaluation matches simplicial identities on degenerate refs") {
    auto d2 = shared_simplex(2);
    // s_i s_j audit through act: s_j s_i = s_i s_{j-1} for i < j
    for (const auto& r : d2->refs(1)) {
        for (int i = 0; i <= 1; ++i) {
            for (int j = i + 1; j <= 2; ++j) {
                SimplexRef a = d2->degeneracy_of(d2->degeneracy_of(r, i), j);
                SimplexRef b = d2->degeneracy_of(d2->degeneracy_of(r, j - 1), i);
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("map enumeration: vertices of the target") {
    for (int n = 0; n <= 3; ++n)
        CHECK(count_maps(shared_simplex(0), shared_simplex(n)) == n + 1);
}

TEST_CASE("map enumeration: order-preserving endpoint count") {
    CHECK(count_maps(shared_simplex(1), shared_simplex(1)) == 3);
}

TEST_CASE("map enumeration: empty source has exactly one map") {
    auto e = share(empty_sset());
    CHECK(count_maps(e, shared_simplex(2)) == 1);
    CHECK(count_maps(e, e) == 1);
    CHECK(count_maps(shared_simplex(0), e) == 0);
}

TEST_CASE("maps from a simplex classify simplices") {
    auto h = share(horn(2, 1));
    // maps Δ^1 -> Λ^2_1 = 1-simplices of the horn = 2 nondeg + 3 degenerate
    CHECK(count_maps(shared_simplex(1), h) == 5);
    for (auto& f : enumerate_maps(shared_simplex(1), h)) f.validate();
}

TEST_CASE("composition lands inside enumerate_maps and is associative") {
    auto k = share(boundary(1));
    auto l = shared_simplex(1);
    auto m = shared_simplex(2);
    auto fs = enumerate_maps(k, l);
    auto gs = enumerate_maps(l, m);
    auto hs = enumerate_maps(k, m);
    for (const auto& f : fs) {
        for (const auto& g : gs) {
            SimplicialMap gf = compose(g, f);
            gf.validate();
            bool found = false;
            for (const auto& h : hs)
                if (same_map(h, gf)) found = true;
            CHECK(found);
        }
    }
    // associativity on a sampled triple
    auto us = enumerate_maps(m, m);
    for (const auto& f : fs)
        for (const auto& g : gs)
            for (const auto& u : us)
                CHECK(same_map(compose(u, compose(g, f)), compose(compose(u, g), f)));
}

TEST_CASE("simplex_as_map and delta_as_map agree with evaluation") {
    auto d2 = shared_simplex(2);
    SimplicialMap top = simplex_as_map(d2, SimplexRef{2, 0, {}});
    top.validate();
    CHECK(same_map(top, identity_map(d2)));
    SimplicialMap deg = delta_as_map(delta_degeneracy(1, 0));
    deg.validate();
    SimplicialMap fc = delta_as_map(delta_face(2, 1));
    fc.validate();
    CHECK(fc.is_mono());
}
