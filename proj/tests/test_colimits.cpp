#include "doctest.h"

#include "kqr/colimits.hpp"
#include "kqr/hom_search.hpp"

using namespace kqr;

TEST_CASE("coproduct of two points") {
    auto c = coproduct({shared_simplex(0), shared_simplex(0)});
    c.sum->validate();
    CHECK(c.sum->count(0) == 2);
    CHECK(c.sum->top_dim() == 0);
}

TEST_CASE("pushout of identities is the original object") {
    auto a = share(horn(2, 1));
    Pushout p = pushout(identity_map(a), identity_map(a));
    p.object->validate();
    CHECK(p.object->count(0) == a->count(0));
    CHECK(p.object->count(1) == a->count(1));
    p.from_b.validate();
    p.from_c.validate();
    CHECK(same_map(p.from_b, p.from_c));
}

TEST_CASE("collapsing the boundary of an edge gives one vertex and a loop") {
    QuotientResult q = quotient(boundary_inclusion(1));
    q.object->validate();
    CHECK(q.object->count(0) == 1);
    CHECK(q.object->count(1) == 1);
    q.projection.validate();
}

TEST_CASE("sphere models have one cell in dimensions 0 and n") {
    for (int n = 1; n <= 4; ++n) {
        auto s = sphere_model(n);
        s->validate();
        CHECK(s->count(0) == 1);
        CHECK(s->count(n) == 1);
        for (int d = 1; d < n; ++d) CHECK(s->count(d) == 0);
    }
}

TEST_CASE("square product triangulation") {
    auto p = product(shared_simplex(1), shared_simplex(1));
    p.object->validate();
    CHECK(p.object->count(0) == 4);
    CHECK(p.object->count(1) == 5);
    CHECK(p.object->count(2) == 2);
    p.to_left.validate();
    p.to_right.validate();
}

TEST_CASE("product projections and pairing satisfy the universal property") {
    auto k = share(boundary(2));
    auto l = shared_simplex(1);
    auto p = product(k, l);
    p.object->validate();
    auto t = shared_simplex(1);
    for (const auto& u : enumerate_maps(t, k)) {
        for (const auto& v : enumerate_maps(t, l)) {
            SimplicialMap w = p.pair(u, v);
            w.validate();
            CHECK(same_map(compose(p.to_left, w), u));
            CHECK(same_map(compose(p.to_right, w), v));
        }
    }
}

TEST_CASE("cylinder quotient shapes") {
    // point: M ≅ Δ^1 with an endpoint inclusion
    auto c0 = cylinder_quotient(shared_simplex(0));
    c0.object->validate();
    CHECK(c0.object->count(0) == 2);
    CHECK(c0.object->count(1) == 1);
    c0.inclusion.validate();
    CHECK(c0.inclusion.is_mono());

    // two points: cone over them, 3 vertices and 2 edges
    auto c = cylinder_quotient(share(boundary(1)));
    c.object->validate();
    CHECK(c.object->count(0) == 3);
    CHECK(c.object->count(1) == 2);
    CHECK(c.object->count(2) == 0);
    CHECK(c.inclusion.is_mono());

    // empty: the collapsed end remains
    auto ce = cylinder_quotient(share(empty_sset()));
    CHECK(ce.object->count(0) == 1);
    CHECK(ce.object->top_dim() == 0);
}

TEST_CASE("pushout universal property on small cospans") {
    // B <- A -> C with A = ∂Δ^1, B = Δ^1, C = Δ^0
    SimplicialMap f = boundary_inclusion(1);
    SimplicialMap g = terminal_map(f.source);
    Pushout p = pushout(f, g);
    p.object->validate();

    auto target = shared_simplex(1);
    // co-cones (u, v) with u∘f = v∘g; each must factor uniquely
    auto us = enumerate_maps(f.target, target);
    auto vs = enumerate_maps(g.target, target);
    int cocones = 0;
    for (const auto& u : us) {
        for (const auto& v : vs) {
            if (!same_map(compose(u, f), compose(v, g))) continue;
            ++cocones;
            SimplicialMap m = p.mediate(u, v);
            m.validate();
            CHECK(same_map(compose(m, p.from_b), u));
            CHECK(same_map(compose(m, p.from_c), v));
            // uniqueness: exactly one map P -> target restricting correctly
            int count = 0;
            for (const auto& w : enumerate_maps(p.object, target))
                if (same_map(compose(w, p.from_b), u) && same_map(compose(w, p.from_c), v))
                    ++count;
            CHECK(count == 1);
        }
    }
    CHECK(cocones > 0);
}

TEST_CASE("cell presentation of standard monos") {
    {
        SimplicialMap f;
        f.source = share(empty_sset());
        f.target = shared_simplex(0);
        CellPresentation pres = cell_presentation(f);
        REQUIRE(pres.cells.size() == 1);
        CHECK(pres.cells[0].dim == 0);
    }
    {
        CellPresentation pres = cell_presentation(boundary_inclusion(2));
        REQUIRE(pres.cells.size() == 1);
        CHECK(pres.cells[0].dim == 2);
    }
    {
        // skeletal difference oracle: Λ^2_1 -> Δ^2 misses edge 02 and the cell
        CellPresentation pres = cell_presentation(horn_inclusion(2, 1));
        REQUIRE(pres.cells.size() == 2);
        CHECK(pres.cells[0].dim == 1);
        CHECK(pres.cells[1].dim == 2);
    }
}

TEST_CASE("cell presentation replay reconstructs the target") {
    for (auto mono : {boundary_inclusion(2), horn_inclusion(2, 1), horn_inclusion(3, 2)}) {
        CellPresentation pres = cell_presentation(mono);
        CellReplay rep = replay_cells(mono, pres);
        CHECK(rep.comparison_is_iso);
        rep.comparison.validate();
        rep.from_a.validate();
        CHECK(rep.stage->total_nondeg() == mono.target->total_nondeg());
        // comparison ∘ from_a = the original mono
        CHECK(same_map(compose(rep.comparison, rep.from_a), mono));
    }
}

TEST_CASE("cell presentation rejects non-monos with the collision") {
    SimplicialMap fold = terminal_map(share(boundary(1)));
    CHECK_THROWS_WITH_AS(cell_presentation(fold), doctest::Contains("collide"),
                         std::runtime_error);
}
