#include "doctest.h"

#include "kqr/extension.hpp"
#include "kqr/hom_search.hpp"

using namespace kqr;

TEST_CASE("extension preserves the point and discrete objects") {
    ExtensionComplex e0 = ex(shared_simplex(0), 2);
    CHECK(e0.complex.underlying->count(0) == 1);
    CHECK(e0.complex.underlying->top_dim() == 0);

    ExtensionComplex eb = ex(share(boundary(1)), 2);
    CHECK(eb.complex.underlying->count(0) == 2);
    CHECK(eb.complex.underlying->top_dim() == 0);
    for (int n = 0; n <= 2; ++n) CHECK(eb.levels.sizes[n] == 2);
}

TEST_CASE("extension of the interval at depth 1") {
    ExtensionComplex e = ex(shared_simplex(1), 1);
    // level 1 is the five maps sd(Δ^1) -> Δ^1; exactly the two constant
    // ones are degenerate, leaving three edges on two vertices
    CHECK(e.levels.sizes[0] == 2);
    CHECK(e.levels.sizes[1] == 5);
    CHECK(e.complex.underlying->count(0) == 2);
    CHECK(e.complex.underlying->count(1) == 3);
    e.complex.underlying->validate();
}

TEST_CASE("unit of the interval hits the last-vertex transpose") {
    ExtensionComplex e = ex(shared_simplex(1), 1);
    SimplicialMap u = unit_map(shared_simplex(1), e);
    u.validate();
    CHECK(u.is_mono());
    // the edge lands on the map with vertex values 0,1,1 on {0},{1},{01}
    SimplexRef img = u.at(1, 0);
    CHECK_FALSE(img.degenerate());
    const SimplicialMap& m = e.map_of_ref(img);
    const SdComplex& s1 = shared_sd_simplex(1);
    int v0 = s1.index[0].at(SdCell{0, 0, {{0}}});
    int v1 = s1.index[0].at(SdCell{0, 1, {{0}}});
    int vb = s1.index[0].at(SdCell{1, 0, {{0, 1}}});
    CHECK(m.at(0, v0) == SimplexRef{0, 0, {}});
    CHECK(m.at(0, v1) == SimplexRef{0, 1, {}});
    CHECK(m.at(0, vb) == SimplexRef{0, 1, {}});
}

TEST_CASE("unit on points and discrete complexes is an isomorphism") {
    ExtensionComplex e0 = ex(shared_simplex(0), 1);
    SimplicialMap u0 = unit_map(shared_simplex(0), e0);
    CHECK(u0.is_mono());
    CHECK(e0.complex.underlying->total_nondeg() == 1);

    auto b = share(boundary(1));
    ExtensionComplex eb = ex(b, 1);
    SimplicialMap ub = unit_map(b, eb);
    CHECK(ub.is_mono());
    CHECK(eb.complex.underlying->total_nondeg() == 2);
}

TEST_CASE("unit is natural on sampled maps") {
    auto k = share(boundary(1));
    auto l = shared_simplex(1);
    ExtensionComplex ek = ex(k, 1);
    ExtensionComplex el = ex(l, 1);
    SimplicialMap uk = unit_map(k, ek);
    SimplicialMap ul = unit_map(l, el);
    for (const auto& f : enumerate_maps(k, l)) {
        SimplicialMap lhs = compose(ex_map(f, ek, el), uk);
        SimplicialMap rhs = compose(ul, f);
        CHECK(same_map(lhs, rhs));
    }
}

TEST_CASE("extension is functorial at low depth") {
    auto k = share(boundary(1));
    auto l = shared_simplex(1);
    auto m = shared_simplex(0);
    ExtensionComplex ek = ex(k, 2), el = ex(l, 2), em = ex(m, 2);
    for (const auto& f : enumerate_maps(k, l)) {
        for (const auto& g : enumerate_maps(l, m)) {
            SimplicialMap lhs = ex_map(compose(g, f), ek, em);
            SimplicialMap rhs = compose(ex_map(g, el, em), ex_map(f, ek, el));
            CHECK(same_map(lhs, rhs));
        }
    }
}

TEST_CASE("adjunction cardinalities on the corpus") {
    // (Δ^0, L): both sides biject with vertices of L
    {
        AdjunctionWitness w = check_adjunction(shared_simplex(0), shared_simplex(2), 1);
        CHECK(w.verified);
        CHECK((int)w.sd_side.size() == 3);
    }
    // (Δ^1, Δ^1): both sides have 5 elements
    {
        AdjunctionWitness w = check_adjunction(shared_simplex(1), shared_simplex(1), 1);
        CHECK(w.verified);
        CHECK((int)w.sd_side.size() == 5);
    }
    // (∂Δ^1, L): both sides biject with pairs of vertices of L
    {
        AdjunctionWitness w = check_adjunction(share(boundary(1)), shared_simplex(2), 1);
        CHECK(w.verified);
        CHECK((int)w.sd_side.size() == 9);
    }
}

TEST_CASE("transposition is natural on sampled squares") {
    auto k2 = share(boundary(1));
    auto k = shared_simplex(1);
    auto l = shared_simplex(1);
    auto l2 = shared_simplex(0);
    SdComplex sd_k = sd(k), sd_k2 = sd(k2);
    ExtensionComplex ex_l = ex(l, 1), ex_l2 = ex(l2, 1);
    SimplicialMap u = boundary_inclusion(1);  // k2 -> k
    for (const auto& f : enumerate_maps(sd_k.complex, l)) {
        for (const auto& h : enumerate_maps(l, l2)) {
            // naturality in the source: (f ∘ sd u)^t = f^t ∘ u
            SimplicialMap lhs = transpose_to_ex(compose(f, sd_map(u, sd_k2, sd_k)), sd_k2, ex_l);
            SimplicialMap rhs = compose(transpose_to_ex(f, sd_k, ex_l), u);
            CHECK(same_map(lhs, rhs));
            // naturality in the target: (h ∘ f)^t = Ex(h) ∘ f^t
            SimplicialMap lhs2 = transpose_to_ex(compose(h, f), sd_k, ex_l2);
            SimplicialMap rhs2 = compose(ex_map(h, ex_l, ex_l2), transpose_to_ex(f, sd_k, ex_l));
            CHECK(same_map(lhs2, rhs2));
        }
    }
}

TEST_CASE("towers over the point and stage zero") {
    ExTower t = ex_tower(shared_simplex(0), 3, 2);
    CHECK(t.stages.size() == 4);
    for (const auto& s : t.stages) CHECK(s.complex.underlying->total_nondeg() == 1);

    ExTower t0 = ex_tower(shared_simplex(1), 0, 2);
    CHECK(t0.stages.size() == 1);
    CHECK(same_map(t0.stages[0].unit_trace, identity_map(shared_simplex(1))));
}

TEST_CASE("tower unit traces factor through the units") {
    auto k = shared_simplex(1);
    ExTower t = ex_tower(k, 2, 2);
    REQUIRE(t.stages.size() == 3);
    CHECK_FALSE(t.capped);
    for (const auto& s : t.stages) s.unit_trace.validate();
    // stage 1 trace is the unit itself
    SimplicialMap u1 = unit_map(k, t.extensions[0]);
    CHECK(same_map(t.stages[1].unit_trace, u1));
}

TEST_CASE("resource caps surface as structured outcomes") {
    ExCaps tight;
    tight.level_cap = 3;
    CHECK_THROWS_AS(ex(shared_simplex(1), 2, tight), ResourceCapError);
    ExTower t = ex_tower(shared_simplex(1), 2, 2, tight);
    CHECK(t.capped);
    CHECK(t.stages.size() >= 1);
}
