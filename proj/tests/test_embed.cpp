#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh1/embed.hpp"

using namespace coh1;

namespace {

AlgebraRep one(const CompactAlgebra& alg, std::vector<IVec> wts, IVec charge = {}) {
    AlgebraIrrep v;
    v.wt = std::move(wts);
    v.charge = charge.empty() ? IVec(alg.torus, 0) : charge;
    AlgebraRep r;
    r.add(v);
    return r;
}

RestrictionMap g2_in_so7() {
    CompactAlgebra g2 = parse_algebra("g2");
    return embed_in_so(g2, one(g2, {{1, 0}}), "g2_in_so7");
}

}  // namespace

TEST_CASE("diagonal su(2) in su(2)+su(2)") {
    RestrictionMap d = diagonal_map(parse_algebra("su2"), 2);
    auto rep = validate_embedding(d);
    CHECK(rep.ok);
    AlgebraRep iso = isotropy_from_map(d);
    CHECK(iso.dim(d.target) == 3);
    CHECK(iso.parts.begin()->first.wt[0] == IVec{2});
}

TEST_CASE("g2 in so(7): validation and branching") {
    RestrictionMap m = g2_in_so7();
    CHECK(validate_embedding(m).ok);
    AlgebraRep iso = isotropy_from_map(m);
    CHECK(iso.dim(m.target) == 7);

    // branch of the so(7) vector is the 7-dim fundamental
    AlgebraRep v7 = one(m.source, {{1, 0, 0}});
    AlgebraRep b = branch(v7, m);
    CHECK(b.parts.size() == 1);
    CHECK(b.parts.begin()->first.wt[0] == IVec{1, 0});

    // branch of the spinor
    AlgebraRep d7 = one(m.source, {{0, 0, 1}});
    AlgebraRep bs = branch(d7, m);
    CHECK(bs.dim(m.target) == 8);
}

TEST_CASE("a corrupted matrix fails validation") {
    RestrictionMap m = g2_in_so7();
    m.m.at(0, 1) += 1;
    CHECK_FALSE(validate_embedding(m).ok);
}

TEST_CASE("composition: g2 in so(8) through so(7)") {
    RestrictionMap outer = so_block(7, 1);  // so(7) < so(8)
    CHECK(validate_embedding(outer).ok);
    RestrictionMap m = compose_maps(outer, g2_in_so7());
    CHECK(validate_embedding(m).ok);
    AlgebraRep v8 = one(m.source, {{1, 0, 0, 0}});
    AlgebraRep b = branch(v8, m);
    CHECK(b.dim(m.target) == 8);
    bool has7 = false, has1 = false;
    for (const auto& [w, mm] : b.parts) {
        if (w.wt[0] == IVec{1, 0}) has7 = true;
        if (w.trivial()) has1 = true;
    }
    CHECK(has7);
    CHECK(has1);
}

TEST_CASE("diagonal torus map adds charges") {
    RestrictionMap d = diagonal_map(parse_algebra("u1"), 2);
    CompactAlgebra t2 = d.source;
    AlgebraIrrep v = trivial_irrep(t2);
    v.charge = {3, -1};
    AlgebraRep r;
    r.add(v);
    AlgebraRep b = branch(r, d);
    CHECK(b.parts.begin()->first.charge == IVec{2});
}

TEST_CASE("block embeddings") {
    RestrictionMap m54 = so_block(5, 4);
    CHECK(validate_embedding(m54).ok);
    AlgebraRep v9 = one(m54.source, {{1, 0, 0, 0}});
    AlgebraRep b = branch(v9, m54);
    CHECK(b.dim(m54.target) == 9);
    CHECK(b.parts.size() == 2);

    RestrictionMap su23 = su_block(2, 3);
    CHECK(validate_embedding(su23).ok);
    AlgebraRep iso = isotropy_from_map(su23);
    CHECK(iso.dim(su23.target) == 12);
    CHECK(iso.parts.size() == 2);  // [mu_2 x mu_3* x phi] and its dual

    RestrictionMap sp12 = sp_block(1, 2);
    CHECK(validate_embedding(sp12).ok);

    RestrictionMap u4 = so_stabilizer_u(4);
    CHECK(validate_embedding(u4).ok);
    CHECK(isotropy_from_map(u4).dim(u4.target) == 12);

    RestrictionMap u3sp = sp_stabilizer_u(3);
    CHECK(validate_embedding(u3sp).ok);
    CHECK(isotropy_from_map(u3sp).dim(u3sp.target) == 12);
}

TEST_CASE("spin(7) in so(9): isotropy is 8 + 7") {
    CompactAlgebra b3 = parse_algebra("so7");
    AlgebraRep rep = one(b3, {{0, 0, 1}});
    rep.add(trivial_irrep(b3));
    RestrictionMap m = embed_in_so(b3, rep, "spin7_in_so9");
    CHECK(validate_embedding(m).ok);
    AlgebraRep iso = isotropy_from_map(m);
    std::vector<Big> dims;
    for (const auto& [w, mm] : iso.parts)
        for (Int i = 0; i < mm; ++i) dims.push_back(irrep_dim(m.target, w));
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<Big>{7, 8});
}

TEST_CASE("regular subalgebras of E6") {
    const RootSystem& e6 = root_system(parse_spec("E6"));

    SUBCASE("so(10)+u(1): adjoint branches as 45 + 1 + 16 + 16bar") {
        // nodes 1,3,4,5,2 (all but node 6) span a D5
        std::vector<IVec> roots;
        for (size_t a = 0; a < e6.num_pos_roots(); ++a)
            if (e6.pos_sc[a][5] == 0) roots.push_back(e6.pos_sc[a]);
        auto comps = subsystem_simples(e6, roots);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].first == RootSystemSpec{Series::D, 5});
        RestrictionMap m = regular_map(e6.spec, {comps[0].second}, 1, {}, "so10u1_in_e6");
        CHECK(validate_embedding(m).ok);
        AlgebraRep iso = isotropy_from_map(m);
        CHECK(iso.parts.size() == 2);
        for (const auto& [w, mm] : iso.parts) {
            CHECK(irrep_dim(m.target, w) == 16);
            CHECK(w.charge[0] != 0);
        }
    }

    SUBCASE("su(6)+su(2): adjoint branches as 35 + 3 + (20,2)") {
        IVec theta_fc = e6.adjoint_weight();
        IVec theta_sc = e6.simple_coords(theta_fc);
        auto orth = orthogonal_subsystem(e6, {theta_sc});
        auto comps = subsystem_simples(e6, orth);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].first == RootSystemSpec{Series::A, 5});
        RestrictionMap m = regular_map(e6.spec, {comps[0].second, {theta_sc}}, 0, {}, "su6su2_in_e6");
        CHECK(validate_embedding(m).ok);
        AlgebraRep iso = isotropy_from_map(m);
        REQUIRE(iso.parts.size() == 1);
        const auto& w = iso.parts.begin()->first;
        CHECK(irrep_dim(m.target, w) == 40);
        CHECK(w.wt[0] == IVec{0, 0, 1, 0, 0});  // Lambda^3 C^6
        CHECK(w.wt[1] == IVec{1});
    }
}
