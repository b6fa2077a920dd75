#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coh1/rootsys.hpp"

using namespace coh1;

namespace {
const RootSystem& rs(const std::string& t) { return root_system(parse_spec(t)); }
}

TEST_CASE("positive root counts match the series formulas") {
    struct Row {
        const char* t;
        size_t n;
    };
    // n(n+1)/2 for A_n, n^2 for B/C, n(n-1) for D, and the exceptional counts
    for (Row r : std::initializer_list<Row>{{"A1", 1},
                                            {"A2", 3},
                                            {"A4", 10},
                                            {"B2", 4},
                                            {"B3", 9},
                                            {"B4", 16},
                                            {"C3", 9},
                                            {"C4", 16},
                                            {"D4", 12},
                                            {"D5", 20},
                                            {"G2", 6},
                                            {"F4", 24},
                                            {"E6", 36},
                                            {"E7", 63},
                                            {"E8", 120}}) {
        CHECK(rs(r.t).num_pos_roots() == r.n);
    }
}

TEST_CASE("normalizations: C1 -> A1, D3 -> A3, C2 -> B2") {
    CHECK(rs("C1").spec.series == Series::A);
    CHECK(rs("D3").spec.series == Series::A);
    CHECK(rs("D3").rank == 3);
    CHECK(rs("C2").spec.series == Series::B);
    CHECK_THROWS(make_spec(Series::E, 9));
    CHECK_THROWS(make_spec(Series::B, 1));
}

TEST_CASE("cartan diagonal and dim identity") {
    for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
        const RootSystem& r = rs(t);
        for (int i = 0; i < r.rank; ++i) CHECK(r.cartan[i][i] == 2);
        // dim g = rank + 2 |Phi+| agrees with the Weyl dimension of the adjoint
        CHECK(r.weyl_dim(r.adjoint_weight()) == Big(r.dim()));
    }
}

TEST_CASE("weyl_dim spot values") {
    CHECK(rs("A1").weyl_dim({1}) == 2);
    CHECK(rs("F4").weyl_dim({1, 0, 0, 0}) == 26);  // the 26-dim representation sits at node 1
    CHECK(rs("D5").weyl_dim({0, 0, 0, 1, 0}) == 16);
    CHECK(rs("D5").weyl_dim({0, 0, 1, 0, 0}) == 120);
    CHECK(rs("A5").weyl_dim({0, 0, 2, 0, 0}) == 175);
    CHECK(rs("A5").weyl_dim({0, 1, 0, 1, 0}) == 189);
    CHECK(rs("E7").weyl_dim({0, 0, 1, 0, 0, 0, 0}) == 8645);
    CHECK(rs("E8").weyl_dim(rs("E8").adjoint_weight()) == 248);
    CHECK_THROWS(rs("A2").weyl_dim({-1, 0}));
}

TEST_CASE("to_dominant_with_parity") {
    auto [w1, s1] = rs("A1").to_dominant_with_parity({-2});
    CHECK(w1 == IVec{2});
    CHECK(s1 == -1);
    auto [w2, s2] = rs("A1").to_dominant_with_parity({0});
    CHECK(w2 == IVec{0});
    CHECK(s2 == 1);
    auto [w3, s3] = rs("A2").to_dominant_with_parity({-1, 0});
    CHECK(w3 == IVec{0, 1});
    CHECK(s3 == 0);
    // idempotent with parity +1 on dominant weights
    for (IVec w : {IVec{2, 1}, IVec{0, 3}}) {
        auto [d, s] = rs("A2").to_dominant_with_parity(w);
        CHECK(d == w);
        CHECK(s == 1);
    }
}

TEST_CASE("weyl orbits") {
    auto o1 = rs("A1").weyl_orbit({1});
    CHECK(o1.size() == 2);
    auto o2 = rs("B3").weyl_orbit({0, 0, 1});  // spinor orbit
    CHECK(o2.size() == 8);
    auto o3 = rs("A2").weyl_orbit({0, 0});
    CHECK(o3.size() == 1);
    CHECK_THROWS(rs("A2").weyl_orbit({-1, 1}));

    // orbit stable under every simple reflection, size divides |W|
    for (const char* t : {"A3", "B3", "C3", "G2", "F4"}) {
        const RootSystem& r = rs(t);
        IVec w(r.rank, 0);
        w[0] = 1;
        if (r.rank > 2) w[2] = 2;
        auto orbit = r.weyl_orbit(r.dominant_rep(w));
        std::set<IVec> s(orbit.begin(), orbit.end());
        CHECK(s.size() == orbit.size());
        for (const IVec& v : orbit)
            for (int j = 0; j < r.rank; ++j) CHECK(s.count(r.reflect(v, j)));
        CHECK(r.weyl_order % Big(static_cast<unsigned long>(orbit.size())) == 0);
        CHECK(r.orbit_size(r.dominant_rep(w)) == Big(static_cast<unsigned long>(orbit.size())));
    }
}

TEST_CASE("orbit sizes via parabolic stabilizers") {
    CHECK(rs("E8").orbit_size(rs("E8").adjoint_weight()) == 240);
    CHECK(rs("D5").orbit_size({0, 0, 0, 1, 0}) == 16);
    CHECK(rs("F4").orbit_size({1, 0, 0, 0}) == 24);  // short roots
}

TEST_CASE("dual weights") {
    CHECK(rs("A2").dual_weight({1, 0}) == IVec{0, 1});
    CHECK(rs("D5").dual_weight({0, 0, 0, 1, 0}) == IVec{0, 0, 0, 0, 1});
    CHECK(rs("B3").dual_weight({1, 2, 1}) == IVec{1, 2, 1});
    CHECK(rs("E6").dual_weight({1, 0, 0, 0, 0, 0}) == IVec{0, 0, 0, 0, 0, 1});
}
