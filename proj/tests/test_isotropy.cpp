#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh1/isotropy.hpp"

using namespace coh1;

namespace {

RestrictionMap g2_in_so7() {
    CompactAlgebra g2 = parse_algebra("g2");
    AlgebraIrrep v;
    v.wt = {{1, 0}};
    AlgebraRep seven;
    seven.add(v);
    return embed_in_so(g2, seven, "g2_in_so7");
}

RestrictionMap su_chain(int n) {  // su(n) < su(n+1)
    RestrictionMap m = su_block(n, 1);
    std::vector<int> keep;
    for (int f = 0; f < m.target.nfactors(); ++f) keep.push_back(f);
    return project_target(m, keep, {});
}

RestrictionMap su6su2_in_e6() {
    const RootSystem& e6 = root_system(parse_spec("E6"));
    IVec theta = e6.simple_coords(e6.adjoint_weight());
    auto comps = subsystem_simples(e6, orthogonal_subsystem(e6, {theta}));
    return regular_map(e6.spec, {comps[0].second, {theta}}, 0, {}, "su6su2_in_e6");
}

}  // namespace

TEST_CASE("isotropy representations") {
    // (su(4), su(3)): mu + mu* + trivial
    HomogeneousSpace s{su_chain(3)};
    AlgebraRep iso = isotropy_rep(s);
    CHECK(iso.dim(s.h()) == 15 - 8);
    CHECK(iso.parts.size() == 3);
    SummandTable t = summand_table(s);
    CHECK(t.s == 2);

    // (g, g): empty
    HomogeneousSpace gg{identity_map(parse_algebra("g2"))};
    CHECK(isotropy_rep(gg).empty());
}

TEST_CASE("summand tables and equivalences") {
    // (spin(8), g2): two equivalent 7-dim summands
    RestrictionMap m = compose_maps(so_block(7, 1), g2_in_so7());
    HomogeneousSpace s{m};
    SummandTable t = summand_table(s);
    CHECK(t.s == 2);
    CHECK(t.real.summands.size() == 1);
    CHECK(t.real.summands[0].mult == 2);
    CHECK(t.real.summands[0].real_dim == 7);
    CHECK(t.has_equivalent_pair);

    // (su(3), maximal torus): three non-equivalent 2-dim summands
    HomogeneousSpace tor{to_cartan(parse_algebra("su3"))};
    SummandTable tt = summand_table(tor);
    CHECK(tt.s == 3);
    CHECK(tt.real.summands.size() == 3);
    for (const auto& p : tt.real.summands) CHECK(p.real_dim == 2);
    CHECK_FALSE(tt.has_equivalent_pair);

    // (so(7), so(2)+so(4)): three non-equivalent summands rho2 x rho4, rho2, rho4
    RestrictionMap inner = so_block(2, 4);
    RestrictionMap outer = so_block(6, 1);
    HomogeneousSpace gr{compose_maps(outer, inner)};
    SummandTable tg = summand_table(gr);
    CHECK(tg.s == 3);
    CHECK(tg.real.dims_sorted() == std::vector<Big>{2, 4, 8});
    CHECK_FALSE(tg.has_equivalent_pair);
    CHECK_FALSE(tg.has_outer_equivalent_pair);
}

TEST_CASE("outer equivalence under triality") {
    // F4-style toy: spin(8) summands 8v, 8s, 8c over spin(8) itself cannot be
    // built here yet; instead check the su(3) case: mu and mu* summands of
    // separate multiplicity are outer-equivalent (conjugation).
    CompactAlgebra su3 = parse_algebra("su3");
    AlgebraIrrep mu = trivial_irrep(su3);
    mu.wt[0] = {1, 0};
    AlgebraIrrep nu = trivial_irrep(su3);
    nu.wt[0] = {2, 0};  // 6-dim, dual is (0,2)
    AlgebraRep rep;
    rep.add(mu).add(dual_irrep(su3, mu));
    rep.add(nu).add(dual_irrep(su3, nu));
    // fake a 2-summand table via realify on an ad hoc "space": use summand logic directly
    RealRep rr = realify(su3, rep);
    CHECK(rr.count_s() == 2);
}

TEST_CASE("sphere recognition") {
    for (int n = 2; n <= 8; ++n) {
        HomogeneousSpace s{so_block(n, 1)};
        auto sph = sphere_recognize(s);
        REQUIRE(sph.has_value());
        CHECK(sph->dim == n);
    }
    // su(n+1)/su(n) odd spheres
    for (int n : {2, 3, 4}) {
        auto sph = sphere_recognize(HomogeneousSpace{su_chain(n)});
        REQUIRE(sph.has_value());
        CHECK(sph->dim == 2 * n + 1);
    }
    // u(n+1)/u(n)
    {
        RestrictionMap u32 = compose_maps(su_block(3, 1), direct_sum_map(su_block(2, 1), identity_map(parse_algebra("u1"))));
        // su(3)+u(1) inside su(4): then u(2) = su(2)+u(1)+u(1)... build directly instead:
        (void)u32;
    }
    // sp(n+1)/sp(n)
    for (int n : {1, 2}) {
        HomogeneousSpace s{project_target(sp_block(n, 1), {0}, {})};
        auto sph = sphere_recognize(s);
        REQUIRE(sph.has_value());
        CHECK(sph->dim == 4 * n + 3);
    }
    // sp(n+1)sp(1) / sp(n) delta sp(1)
    {
        RestrictionMap a = direct_sum_map(sp_block(2, 1), identity_map(parse_algebra("sp1")));
        RestrictionMap d = diagonal_collapse(a.target, {{{0}, {}}, {{1, 2}, {}}}, "spdiag");
        RestrictionMap m = compose_maps(a, d);
        auto sph = sphere_recognize(HomogeneousSpace{m});
        REQUIRE(sph.has_value());
        CHECK(sph->dim == 11);
        CHECK(summand_table(HomogeneousSpace{m}).s == 2);
    }
    // sp(n+1)u(1) / sp(n) delta u(1): s = 3
    {
        RestrictionMap a = direct_sum_map(sp_block(1, 1), identity_map(parse_algebra("u1")));
        // target sp(1)+sp(1)+u1; turn the second sp(1) into its circle
        RestrictionMap b = direct_sum_map(
            direct_sum_map(identity_map(parse_algebra("sp1")), to_cartan(parse_algebra("sp1"))),
            identity_map(parse_algebra("u1")));
        RestrictionMap c = diagonal_collapse(b.target, {{{0}, {}}, {{1, 2}, {1, 1}}}, "spu1");
        RestrictionMap m = compose_maps(a, compose_maps(b, c));
        HomogeneousSpace s{m};
        CHECK(summand_table(s).s == 3);
        auto sph = sphere_recognize(s);
        REQUIRE(sph.has_value());
        CHECK(sph->dim == 7);
    }
    // spin(9)/spin(7), spin(7)/g2, g2/su(3)
    {
        CompactAlgebra b3 = parse_algebra("so7");
        AlgebraIrrep d7;
        d7.wt = {{0, 0, 1}};
        AlgebraRep rep;
        rep.add(d7);
        rep.add(trivial_irrep(b3));
        RestrictionMap m = embed_in_so(b3, rep, "spin7_in_so9");
        auto sph = sphere_recognize(HomogeneousSpace{m});
        REQUIRE(sph.has_value());
        CHECK(sph->dim == 15);
    }
    {
        auto sph = sphere_recognize(HomogeneousSpace{g2_in_so7()});
        REQUIRE(sph.has_value());
        CHECK(sph->dim == 7);
    }
    {
        const RootSystem& g2 = root_system(parse_spec("G2"));
        // long roots of G2 form the A2 = su(3)
        std::vector<IVec> longs;
        for (size_t a = 0; a < g2.num_pos_roots(); ++a)
            if (g2.pos_norm2[a] == g2.pos_norm2.back()) longs.push_back(g2.pos_sc[a]);
        auto comps = subsystem_simples(g2, longs);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].first == RootSystemSpec{Series::A, 2});
        RestrictionMap m = regular_map(g2.spec, {comps[0].second}, 0, {}, "su3_in_g2");
        auto sph = sphere_recognize(HomogeneousSpace{m});
        REQUIRE(sph.has_value());
        CHECK(sph->dim == 6);
    }
    // S^1: u(1)su(3) inside u(3) over su(3)
    {
        CompactAlgebra u3 = parse_algebra("u3");
        RestrictionMap m;
        m.source = u3;
        m.target = parse_algebra("su3");
        m.m = RatMat(2, 3);
        m.m.at(0, 0) = 1;
        m.m.at(1, 1) = 1;
        m.name = "su3_in_u3";
        auto sph = sphere_recognize(HomogeneousSpace{m});
        REQUIRE(sph.has_value());
        CHECK(sph->dim == 1);
    }
    // and a non-sphere: (su(3), so(3))
    {
        CompactAlgebra so3 = parse_algebra("so3");
        AlgebraIrrep v;
        v.wt = {{2}};
        AlgebraRep rep;
        rep.add(v);
        RestrictionMap m = embed_in_su(so3, rep, "so3_in_su3");
        CHECK(validate_embedding(m).ok);
        CHECK_FALSE(sphere_recognize(HomogeneousSpace{m}).has_value());
    }
}

TEST_CASE("effectivity drops shared ideals") {
    // (so(5) + g2, so(4) + g2) -> S^4
    RestrictionMap m = direct_sum_map(so_block(4, 1), identity_map(parse_algebra("g2")));
    HomogeneousSpace s{m};
    HomogeneousSpace eff = effective_pair(s);
    CHECK(eff.g().dim() == 10);
    CHECK(eff.h().dim() == 6);
    auto sph = sphere_recognize(s);
    REQUIRE(sph.has_value());
    CHECK(sph->dim == 4);

    // already effective pair stays put
    HomogeneousSpace e2 = effective_pair(HomogeneousSpace{su_chain(2)});
    CHECK(e2.g().dim() == 8);

    // (u(1)+g, u(1)+h) with the u(1) inside h's image
    RestrictionMap m3 = direct_sum_map(identity_map(parse_algebra("u1")), su_chain(2));
    HomogeneousSpace s3{m3};
    HomogeneousSpace eff3 = effective_pair(s3);
    CHECK(eff3.g().torus == 0);
    CHECK(eff3.g().dim() == 8);
}

TEST_CASE("strong isotropy irreducibility") {
    CHECK(is_sii(HomogeneousSpace{su6su2_in_e6()}));
    CHECK_FALSE(is_sii(HomogeneousSpace{su_chain(3)}));
    CHECK_THROWS(is_sii(HomogeneousSpace{identity_map(parse_algebra("su2"))}));
}

TEST_CASE("transitive-subgroup catalog") {
    auto r1 = onishchik_lookup(parse_algebra("so16"), parse_algebra("so9"));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].dim() == parse_algebra("so15").dim());

    auto r2 = onishchik_lookup(parse_algebra("so8"), parse_algebra("so5"));
    REQUIRE(r2.size() >= 1);
    CHECK(r2[0].dim() == 21);

    auto r3 = onishchik_lookup(parse_algebra("so9"), parse_algebra("so5"));
    CHECK(r3.empty());

    // dimension identity on every row
    for (const auto& row : onishchik_rows(4))
        CHECK(row.l1.dim() - row.l3.dim() == row.l2.dim() - row.l23.dim());
}
