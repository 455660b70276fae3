#include "doctest.h"

#include "kqr/bis_ops.hpp"
#include "kqr/colimits.hpp"

using namespace kqr;

namespace {

long long refs_count(const BiSimplicialSet& x, int j, int k) {
    return (long long)x.refs(j, k).size();
}

EpiWord full_word(int j) {
    EpiWord w;
    for (int t = 0; t < j; ++t) w.push_back(t);
    return w;
}

}  // namespace

TEST_CASE("external product bigraded counts") {
    auto p00 = external_product(shared_simplex(0), shared_simplex(0));
    p00.complex->validate();
    CHECK(p00.complex->count(0, 0) == 1);
    CHECK(p00.complex->total_nondeg() == 1);

    auto p11 = external_product(shared_simplex(1), shared_simplex(1));
    p11.complex->validate();
    CHECK(p11.complex->count(0, 0) == 4);
    CHECK(p11.complex->count(1, 0) == 2);
    CHECK(p11.complex->count(0, 1) == 2);
    CHECK(p11.complex->count(1, 1) == 1);

    auto pb = external_product(share(boundary(1)), shared_simplex(0));
    CHECK(pb.complex->count(0, 0) == 2);
    CHECK(pb.complex->total_nondeg() == 2);
}

TEST_CASE("const_geo has identity horizontal operators and levels M") {
    auto m = share(horn(2, 1));
    auto cg = const_geo(m);
    cg.complex->validate();
    for (int j = 0; j <= 2; ++j) {
        LevelSlice s = horizontal_level(cg.complex, j);
        CHECK(s.complex->count(0) == m->count(0));
        CHECK(s.complex->count(1) == m->count(1));
    }
    // diag_restrict ∘ const_geo = identity on the corpus
    DiagonalRestriction dr = diag_restrict(cg.complex);
    dr.complex->validate();
    CHECK(dr.complex->count(0) == m->count(0));
    CHECK(dr.complex->count(1) == m->count(1));
    CHECK(dr.complex->top_dim() == m->top_dim());
}

TEST_CASE("diagonal of an external product is the product") {
    for (auto [k, l] : {std::pair<SSetPtr, SSetPtr>{shared_simplex(1), shared_simplex(1)},
                        {share(boundary(1)), shared_simplex(1)},
                        {share(horn(2, 1)), shared_simplex(0)},
                        {shared_simplex(2), shared_simplex(1)}}) {
        auto ep = external_product(k, l);
        DiagonalRestriction dr = diag_restrict(ep.complex);
        dr.complex->validate();
        auto pr = product(k, l);
        for (int d = 0; d <= std::max(dr.complex->top_dim(), pr.object->top_dim()); ++d)
            CHECK(dr.complex->count(d) == pr.object->count(d));
        HomologyResult h1 = homology(*dr.complex);
        HomologyResult h2 = homology(*pr.object);
        CHECK(h1.betti == h2.betti);
    }
    // Δ^1 □ Δ^1 diagonal is the square: 2 nondegenerate triangles
    auto sq = diag_restrict(external_product(shared_simplex(1), shared_simplex(1)).complex);
    CHECK(sq.complex->count(2) == 2);
}

TEST_CASE("diagonal extension of simplices is the external square") {
    for (int n = 0; n <= 3; ++n) {
        DiagonalExtension de = diag_extend(shared_simplex(n));
        de.complex->validate();
        auto sq = external_product(shared_simplex(n), shared_simplex(n));
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                CHECK(de.complex->count(j, k) == sq.complex->count(j, k));
                CHECK(refs_count(*de.complex, j, k) == refs_count(*sq.complex, j, k));
            }
    }
}

TEST_CASE("diagonal extension preserves coproducts") {
    auto two = coproduct({shared_simplex(0), shared_simplex(0)}).sum;
    DiagonalExtension de = diag_extend(two);
    CHECK(de.complex->count(0, 0) == 2);
    CHECK(de.complex->total_nondeg() == 2);
}

TEST_CASE("horn closed form counts") {
    // (2,1) at bidegree (0,0): all vertex pairs except those covering {0,2}
    HornClosedForm cf = horn_closed_form(2, 1);
    cf.complex->validate();
    CHECK(refs_count(*cf.complex, 0, 0) == 7);
    // (1,0) at (0,0): both coordinates must avoid vertex 1
    HornClosedForm cf10 = horn_closed_form(1, 0);
    CHECK(refs_count(*cf10.complex, 0, 0) == 1);
    // no jointly surjective pair survives at bidegree (n,n)
    CHECK(cf.complex->count(2, 2) == 0);
}

TEST_CASE("diagonal extension of horns matches the closed form through (4,4)") {
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i <= n; ++i) {
            DiagonalExtension de = diag_extend(share(horn(n, i)));
            HornClosedForm cf = horn_closed_form(n, i);
            de.complex->validate();
            cf.complex->validate();
            BiSimplicialMap cmp = horn_comparison(de, cf);
            cmp.validate();
            for (int j = 0; j <= std::max(de.complex->top_h(), cf.complex->top_h()); ++j)
                for (int k = 0; k <= std::max(de.complex->top_v(), cf.complex->top_v()); ++k)
                    CHECK(de.complex->count(j, k) == cf.complex->count(j, k));
            std::vector<BiSimplexRef> seen;
            for (int j = 0; j <= de.complex->top_h(); ++j)
                for (int k = 0; k <= de.complex->top_v(); ++k)
                    for (int x = 0; x < de.complex->count(j, k); ++x) {
                        const BiSimplexRef& img = cmp.at(j, k, x);
                        CHECK(img.epi_h.empty());
                        CHECK(img.epi_v.empty());
                        seen.push_back(img);
                    }
            std::sort(seen.begin(), seen.end());
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            for (int j = 0; j <= 4; ++j)
                for (int k = 0; k <= 4; ++k)
                    CHECK(refs_count(*de.complex, j, k) == refs_count(*cf.complex, j, k));
        }
    }
    CHECK(refs_count(*diag_extend(share(horn(2, 1))).complex, 0, 0) == 7);
}

TEST_CASE("diagonal adjunction bijection on a small corpus") {
    std::vector<SSetPtr> ks = {shared_simplex(0), shared_simplex(1), share(boundary(1))};
    std::vector<BiSSetPtr> xs = {external_product(shared_simplex(1), shared_simplex(0)).complex,
                                 const_geo(shared_simplex(1)).complex,
                                 external_product(shared_simplex(0), share(boundary(1))).complex};
    for (const auto& k : ks) {
        DiagonalExtension de = diag_extend(k);
        for (const auto& x : xs) {
            DiagonalRestriction dr = diag_restrict(x);
            auto bimaps = enumerate_bimaps(de.complex, x);
            auto maps = enumerate_maps(k, dr.complex);
            CHECK(bimaps.size() == maps.size());
        }
    }
}

TEST_CASE("counit validates on simplices and is an isomorphism on the point") {
    {
        DiagonalExtension de = diag_extend(shared_simplex(0));
        auto cg = const_geo(shared_simplex(0));
        BiSimplicialMap c = counit_map(de, cg);
        c.validate();
        CHECK(de.complex->total_nondeg() == 1);
        CHECK(cg.complex->total_nondeg() == 1);
    }
    for (int n = 1; n <= 2; ++n) {
        DiagonalExtension de = diag_extend(shared_simplex(n));
        auto cg = const_geo(shared_simplex(n));
        BiSimplicialMap c = counit_map(de, cg);
        c.validate();
    }
}

TEST_CASE("counit is a vertical-levelwise equivalence onto a discrete complex") {
    // per vertical level k, the counit of Δ^n is ⊔_{(Δ^n)_k} Δ^n onto the
    // discrete complex on (Δ^n)_k
    for (int n = 1; n <= 2; ++n) {
        DiagonalExtension de = diag_extend(shared_simplex(n));
        auto cg = const_geo(shared_simplex(n));
        BiSimplicialMap c = counit_map(de, cg);
        for (int k = 0; k <= 3; ++k) {
            LevelSlice src = vertical_level(de.complex, k);
            LevelSlice dst = vertical_level(cg.complex, k);
            CHECK(dst.complex->top_dim() == 0);
            CHECK(dst.complex->count(0) == (int)shared_simplex(n)->refs(k).size());
            SimplicialMap lm = level_map(c, src, dst);
            lm.validate();
            EquivalenceVerdict v = is_homology_equivalence(lm);
            CHECK(v.ok());
        }
    }
}

TEST_CASE("counit of horns is a vertical-levelwise equivalence") {
    int n = 2, i = 1;
    DiagonalExtension de = diag_extend(share(horn(n, i)));
    auto cg = const_geo(share(horn(n, i)));
    BiSimplicialMap c = counit_map(de, cg);
    c.validate();
    for (int k = 0; k <= 2; ++k) {
        LevelSlice src = vertical_level(de.complex, k);
        LevelSlice dst = vertical_level(cg.complex, k);
        SimplicialMap lm = level_map(c, src, dst);
        EquivalenceVerdict v = is_homology_equivalence(lm);
        CHECK(v.ok());
    }
    // the (0,0) level of the source has 7 vertices over the 3 constant ones
    LevelSlice v0 = vertical_level(de.complex, 0);
    CHECK(v0.complex->count(0) == 7);
    LevelSlice w0 = vertical_level(cg.complex, 0);
    CHECK(w0.complex->count(0) == 3);
}

TEST_CASE("fiber subcomplex shapes and acyclicity") {
    SimplicialSet f1 = fiber_subcomplex(2, {2});
    f1.validate();
    CHECK(f1.count(0) == 2);
    CHECK(f1.count(1) == 1);
    CHECK(homology(f1).reduced_trivial());

    SimplicialSet f2 = fiber_subcomplex(1, {1});
    CHECK(f2.count(0) == 1);
    CHECK(f2.top_dim() == 0);

    // T^c = [n] gives the boundary sphere, which is not acyclic
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> all(n + 1);
        for (int v = 0; v <= n; ++v) all[v] = v;
        SimplicialSet f = fiber_subcomplex(n, all);
        HomologyResult h = homology(f);
        CHECK(h.betti == homology(boundary(n)).betti);
    }

    // proper nonempty complements yield collapsible complexes
    for (int n = 1; n <= 3; ++n) {
        for (int miss = 1; miss <= n; ++miss) {
            std::vector<int> tc;
            for (int v = n - miss + 1; v <= n; ++v) tc.push_back(v);
            SimplicialSet f = fiber_subcomplex(n, tc);
            CHECK(homology(f).reduced_trivial());
            auto cert = collapse_search(f, 200000);
            CHECK(cert.has_value());
        }
    }

    CHECK_THROWS(fiber_subcomplex(2, {}));
}

TEST_CASE("matching objects recover levels and boundary products") {
    auto y = external_product(share(boundary(2)), shared_simplex(1)).complex;
    for (int n = 0; n <= 2; ++n) {
        MatchObject m = match_object(shared_simplex(n), y);
        LevelSlice s = horizontal_level(y, n);
        for (int d = 0; d <= std::max(m.complex->top_dim(), s.complex->top_dim()); ++d)
            CHECK(m.complex->count(d) == s.complex->count(d));
    }
    MatchObject mb = match_object(share(boundary(1)), y);
    LevelSlice v0 = horizontal_level(y, 0);
    ProductResult sq = product(v0.complex, v0.complex);
    for (int d = 0; d <= std::max(mb.complex->top_dim(), sq.object->top_dim()); ++d)
        CHECK(mb.complex->count(d) == sq.object->count(d));
}

TEST_CASE("matching over a horn of a constant object is the underlying complex") {
    auto m = shared_simplex(1);
    auto cg = const_geo(m);
    MatchObject mo = match_object(share(horn(2, 1)), cg.complex);
    for (int d = 0; d <= 1; ++d) CHECK(mo.complex->count(d) == m->count(d));
}

TEST_CASE("levelwise pi0 of a constant object is constant") {
    auto m = share(boundary(1));
    auto cg = const_geo(m);
    LevelwisePi0 p = levelwise_pi0(cg.complex);
    p.complex->validate();
    CHECK(p.complex->count(0) == 2);
    CHECK(p.complex->top_dim() == 0);

    // levels of the diagonal extension of Δ^1 are copies of Δ^1 indexed by
    // (Δ^1)_j, so levelwise π0 recovers Δ^1 itself
    auto de = diag_extend(shared_simplex(1));
    LevelwisePi0 q = levelwise_pi0(de.complex);
    CHECK(q.complex->count(0) == 2);
    CHECK(q.complex->count(1) == 1);
    CHECK(q.complex->top_dim() == 1);
}

TEST_CASE("identity probe passes at every horn") {
    auto y = const_geo(share(boundary(1))).complex;
    Pi0FibrationReport rep = pi0_fibration_probe(identity_bimap(y), 2);
    CHECK(rep.all_pass());
    CHECK(rep.horns.size() == 5);
}

TEST_CASE("probe on the diagonal extension of the interval over the point") {
    auto y = diag_extend(shared_simplex(1)).complex;
    auto z = const_geo(shared_simplex(0)).complex;
    BiSimplicialMap f;
    f.source = y;
    f.target = z;
    f.assign.resize(y->top_h() + 1);
    for (int j = 0; j <= y->top_h(); ++j) {
        f.assign[j].resize(y->top_v() + 1);
        for (int k = 0; k <= y->top_v(); ++k)
            for (int x = 0; x < y->count(j, k); ++x)
                f.assign[j][k].push_back(BiSimplexRef{0, 0, 0, full_word(j), full_word(k)});
    }
    f.validate();
    Pi0FibrationReport rep = pi0_fibration_probe(f, 2);
    CHECK(rep.horns.size() == 5);
    for (const auto& h : rep.horns) {
        CHECK(h.source_components >= 0);
        CHECK(h.pullback_components >= 0);
    }
}
