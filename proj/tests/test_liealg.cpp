#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh1/liealg.hpp"

using namespace coh1;

TEST_CASE("algebra token parsing") {
    CHECK(parse_algebra("so7").factors == std::vector<RootSystemSpec>{{Series::B, 3}});
    CHECK(parse_algebra("spin7").dim() == 21);
    CHECK(parse_algebra("so4").factors.size() == 2);
    CHECK(parse_algebra("so4").dim() == 6);
    CHECK(parse_algebra("so6").factors == std::vector<RootSystemSpec>{{Series::A, 3}});
    CHECK(parse_algebra("so2").torus == 1);
    CHECK(parse_algebra("so2").dim() == 1);
    CHECK(parse_algebra("u3").torus == 1);
    CHECK(parse_algebra("u3").dim() == 9);
    CHECK(parse_algebra("u1").rank_total() == 1);
    CHECK(parse_algebra("sp3").dim() == 21);
    CHECK(parse_algebra("sp2").factors == std::vector<RootSystemSpec>{{Series::B, 2}});
    CHECK(parse_algebra("su4+su2+u1").dim() == 15 + 3 + 1);
    CHECK(parse_algebra("e8").dim() == 248);
    CHECK(parse_algebra("f4+u1").str() == "F4+u1");
    CHECK(parse_algebra("A2+B3").dim() == 8 + 21);
    CHECK(parse_algebra("su1").is_trivial());
    CHECK(parse_algebra("so1").is_trivial());
}

TEST_CASE("adjoint representations") {
    CompactAlgebra a = parse_algebra("su2+su2");
    AlgebraRep ad = adjoint_rep(a);
    CHECK(ad.parts.size() == 2);
    CHECK(ad.dim(a) == 6);

    CompactAlgebra u1 = parse_algebra("u1");
    AlgebraRep adu = adjoint_rep(u1);
    CHECK(adu.dim(u1) == 1);
    CHECK(adu.parts.begin()->first.trivial());

    CompactAlgebra g2 = parse_algebra("g2");
    CHECK(adjoint_rep(g2).dim(g2) == 14);
}

TEST_CASE("realify pairs duals and quaternionic doubles") {
    // mu_3 + mu_3* of su(3) -> one real summand of dimension 6
    CompactAlgebra su3 = parse_algebra("su3");
    AlgebraIrrep mu = trivial_irrep(su3);
    mu.wt[0] = {1, 0};
    AlgebraRep r;
    r.add(mu).add(dual_irrep(su3, mu));
    RealRep rr = realify(su3, r);
    CHECK(rr.count_s() == 1);
    CHECK(rr.summands[0].type == RealityType::COMPLEX);
    CHECK(rr.summands[0].real_dim == 6);

    // nu_1 + nu_1 of sp(1): one quaternionic summand of real dimension 4
    CompactAlgebra sp1 = parse_algebra("sp1");
    AlgebraIrrep nu = trivial_irrep(sp1);
    nu.wt[0] = {1};
    AlgebraRep q;
    q.add(nu, 2);
    RealRep qq = realify(sp1, q);
    CHECK(qq.count_s() == 1);
    CHECK(qq.summands[0].real_dim == 4);

    // a single quaternionic copy is not a real representation
    AlgebraRep odd;
    odd.add(nu, 1);
    CHECK_THROWS(realify(sp1, odd));

    // trivial + trivial -> two summands
    AlgebraRep t;
    t.add(trivial_irrep(sp1), 2);
    CHECK(realify(sp1, t).count_s() == 2);

    // dual must appear with equal multiplicity
    AlgebraRep bad;
    bad.add(mu, 2).add(dual_irrep(su3, mu), 1);
    CHECK_THROWS(realify(su3, bad));
}

TEST_CASE("count_s is additive and realify preserves real dimension") {
    CompactAlgebra alg = parse_algebra("su3+u1");
    unsigned state = 777;
    auto next = [&] {
        state = state * 1103515245u + 12345u;
        return (state >> 16) % 2;
    };
    for (int trial = 0; trial < 12; ++trial) {
        AlgebraRep a;
        for (int k = 0; k < 3; ++k) {
            AlgebraIrrep v = trivial_irrep(alg);
            v.wt[0] = {static_cast<int>(next()), static_cast<int>(next())};
            v.charge[0] = static_cast<int>(next()) - static_cast<int>(next());
            a.add(v);
            a.add(dual_irrep(alg, v));
        }
        Big cplx = a.dim(alg);
        RealRep ra = realify(alg, a);
        CHECK(ra.real_dim() == cplx);

        AlgebraRep b = a;  // a (+) a
        b.add(a);
        CHECK(realify(alg, b).count_s() == 2 * ra.count_s());
    }
}
