#include "coh1/isotropy.hpp"

#include <algorithm>
#include <sstream>

namespace coh1 {

AlgebraRep isotropy_rep(const HomogeneousSpace& space) {
    return isotropy_from_map(space.map);
}

AutomorphismSet declared_automorphisms(const CompactAlgebra& alg) {
    AutomorphismSet s;
    for (const auto& f : alg.factors) {
        std::vector<std::vector<int>> perms;
        std::vector<int> id(f.rank);
        for (int i = 0; i < f.rank; ++i) id[i] = i;
        perms.push_back(id);
        if (f.series == Series::A && f.rank >= 2) {
            std::vector<int> rev(id.rbegin(), id.rend());
            perms.push_back(rev);
        } else if (f.series == Series::D && f.rank == 4) {
            // triality: permutations of the three outer nodes (coords 0, 2, 3)
            std::vector<int> outer = {0, 2, 3};
            std::sort(outer.begin(), outer.end());
            do {
                std::vector<int> p = id;
                p[0] = outer[0];
                p[2] = outer[1];
                p[3] = outer[2];
                if (p != id) perms.push_back(p);
            } while (std::next_permutation(outer.begin(), outer.end()));
        } else if (f.series == Series::D && f.rank >= 5) {
            std::vector<int> p = id;
            std::swap(p[f.rank - 2], p[f.rank - 1]);
            perms.push_back(p);
        } else if (f.series == Series::E && f.rank == 6) {
            // diagram flip 1<->6, 3<->5
            perms.push_back({5, 1, 4, 3, 2, 0});
        }
        s.factor_perms.push_back(perms);
    }
    return s;
}

namespace {

IVec apply_perm(const std::vector<int>& p, const IVec& w) {
    IVec r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = w[p[i]];
    return r;
}

// Orbit of a summand label under the declared automorphisms, closed under
// dualization (realified summands are insensitive to it).
std::vector<AlgebraIrrep> outer_orbit(const CompactAlgebra& alg, const AutomorphismSet& autos,
                                      const AlgebraIrrep& v) {
    std::vector<AlgebraIrrep> out;
    auto emit = [&](const AlgebraIrrep& w) {
        out.push_back(w);
        out.push_back(dual_irrep(alg, w));
        if (autos.charge_flips && !w.charge.empty()) {
            AlgebraIrrep f = w;
            f.charge = -f.charge;
            out.push_back(f);
            out.push_back(dual_irrep(alg, f));
        }
    };
    if (alg.nfactors() == 0) {
        emit(v);
        return out;
    }
    std::vector<size_t> idx(alg.nfactors(), 0);
    while (true) {
        AlgebraIrrep w = v;
        for (int f = 0; f < alg.nfactors(); ++f)
            w.wt[f] = apply_perm(autos.factor_perms[f][idx[f]], v.wt[f]);
        emit(w);
        int f = 0;
        while (f < alg.nfactors() && ++idx[f] == autos.factor_perms[f].size()) {
            idx[f] = 0;
            ++f;
        }
        if (f == alg.nfactors()) break;
    }
    return out;
}

}  // namespace

SummandTable summand_table(const HomogeneousSpace& space) {
    return summand_table(space, declared_automorphisms(space.h()));
}

SummandTable summand_table(const HomogeneousSpace& space, const AutomorphismSet& autos) {
    SummandTable t;
    t.real = realify(space.h(), isotropy_rep(space));
    t.s = t.real.count_s();
    size_t n = t.real.summands.size();
    t.outer_class.assign(n, -1);
    for (const auto& p : t.real.summands)
        if (p.mult > 1) t.has_equivalent_pair = true;
    int cls = 0;
    for (size_t i = 0; i < n; ++i) {
        if (t.outer_class[i] >= 0) continue;
        t.outer_class[i] = cls;
        auto orbit = outer_orbit(space.h(), autos, t.real.summands[i].label);
        for (size_t j = i + 1; j < n; ++j) {
            if (t.outer_class[j] >= 0) continue;
            for (const auto& w : orbit)
                if (w == t.real.summands[j].label) {
                    t.outer_class[j] = cls;
                    t.has_outer_equivalent_pair = true;
                    break;
                }
        }
        ++cls;
    }
    return t;
}

HomogeneousSpace effective_pair(const HomogeneousSpace& space) {
    const CompactAlgebra& g = space.g();
    const CompactAlgebra& h = space.h();
    AlgebraRep chi;
    try {
        chi = isotropy_rep(space);
    } catch (...) {
        return space;  // malformed input: leave to the caller's validation
    }

    // a simple factor f of g is droppable when its adjoint branches exactly onto
    // adjoints of h-factors (plus torus lines) and those act trivially on chi
    std::vector<bool> drop_factor(g.nfactors(), false);
    bool any = false;
    for (int f = 0; f < g.nfactors(); ++f) {
        AlgebraRep af;
        {
            AlgebraIrrep v = trivial_irrep(g);
            v.wt[f] = root_system(g.factors[f]).adjoint_weight();
            af.add(v);
        }
        AlgebraRep bf;
        try {
            bf = branch(af, space.map);
        } catch (...) {
            continue;
        }
        Big need = root_system(g.factors[f]).dim();
        Big got = 0;
        std::vector<bool> used(h.nfactors(), false);
        std::vector<bool> used_torus(h.torus, false);
        bool ok = true;
        for (const auto& [w, m] : bf.parts) {
            int nz = -1;
            for (int j = 0; j < h.nfactors(); ++j)
                if (!is_zero(w.wt[j])) {
                    if (nz >= 0) ok = false;
                    nz = j;
                }
            if (!is_zero(w.charge)) ok = false;
            if (!ok) break;
            if (nz < 0) {
                got += m;
                continue;
            }
            if (w.wt[nz] != root_system(h.factors[nz]).adjoint_weight() || m != 1) {
                ok = false;
                break;
            }
            used[nz] = true;
            got += root_system(h.factors[nz]).dim();
        }
        if (!ok || got != need) continue;
        bool trivial_action = true;
        for (const auto& [w, m] : chi.parts) {
            (void)m;
            for (int j = 0; j < h.nfactors(); ++j)
                if (used[j] && !is_zero(w.wt[j])) trivial_action = false;
        }
        (void)used_torus;
        if (trivial_action) {
            drop_factor[f] = true;
            any = true;
        }
    }

    // central torus directions of g inside the image of h's Cartan
    std::vector<bool> drop_torus(g.torus, false);
    {
        size_t fdim = 0;
        for (const auto& fs : g.factors) fdim += fs.rank;
        RowSpan rows = make_span(static_cast<size_t>(g.rank_total()));
        for (size_t r = 0; r < space.map.m.rows; ++r) {
            std::vector<Rat> v(space.map.m.cols);
            for (size_t c = 0; c < space.map.m.cols; ++c) v[c] = space.map.m.at(r, c);
            rows.add(v);
        }
        for (int j = 0; j < g.torus; ++j) {
            std::vector<Rat> e(g.rank_total(), Rat(0));
            e[fdim + j] = 1;
            if (rows.contains(e)) {
                drop_torus[j] = true;
                any = true;
            }
        }
    }
    if (!any) return space;

    std::vector<size_t> keep_cols;
    {
        size_t c = 0;
        for (int f = 0; f < g.nfactors(); ++f)
            for (int j = 0; j < g.factors[f].rank; ++j, ++c)
                if (!drop_factor[f]) keep_cols.push_back(c);
        size_t base = c;
        for (int j = 0; j < g.torus; ++j)
            if (!drop_torus[j]) keep_cols.push_back(base + j);
    }
    CompactAlgebra g2;
    for (int f = 0; f < g.nfactors(); ++f)
        if (!drop_factor[f]) g2.factors.push_back(g.factors[f]);
    for (int j = 0; j < g.torus; ++j)
        if (!drop_torus[j]) g2.torus += 1;

    // h components supported entirely on dropped columns disappear with them
    std::vector<bool> row_survives(space.map.m.rows, false);
    for (size_t r = 0; r < space.map.m.rows; ++r) {
        bool nonzero_any = false, nonzero_kept = false;
        for (size_t c = 0; c < space.map.m.cols; ++c) {
            if (space.map.m.at(r, c) == 0) continue;
            nonzero_any = true;
            if (std::find(keep_cols.begin(), keep_cols.end(), c) != keep_cols.end()) nonzero_kept = true;
        }
        row_survives[r] = nonzero_kept || !nonzero_any;
    }
    CompactAlgebra h2;
    std::vector<size_t> keep_rows;
    {
        size_t r = 0;
        for (int f = 0; f < h.nfactors(); ++f) {
            bool keep = false;
            for (int j = 0; j < h.factors[f].rank; ++j)
                if (row_survives[r + j]) keep = true;
            if (keep) {
                h2.factors.push_back(h.factors[f]);
                for (int j = 0; j < h.factors[f].rank; ++j) keep_rows.push_back(r + j);
            }
            r += h.factors[f].rank;
        }
        for (int j = 0; j < h.torus; ++j, ++r)
            if (row_survives[r]) {
                h2.torus += 1;
                keep_rows.push_back(r);
            }
    }
    RestrictionMap m2;
    m2.source = g2;
    m2.target = h2;
    m2.name = space.map.name + "_eff";
    m2.m = RatMat(keep_rows.size(), keep_cols.size());
    for (size_t i = 0; i < keep_rows.size(); ++i)
        for (size_t j = 0; j < keep_cols.size(); ++j)
            m2.m.at(i, j) = space.map.m.at(keep_rows[i], keep_cols[j]);
    return effective_pair(HomogeneousSpace{m2});
}

namespace {

struct AlgClass {
    std::multiset<std::string> factors;
    int torus;
};

AlgClass classify_alg(const CompactAlgebra& a) {
    AlgClass c;
    c.torus = a.torus;
    for (const auto& f : a.factors) c.factors.insert(f.str());
    return c;
}

bool is_so_class(const AlgClass& c, int m) {
    switch (m) {
        case 0:
        case 1:
            return c.factors.empty() && c.torus == 0;
        case 2:
            return c.factors.empty() && c.torus == 1;
        case 3:
            return c.factors == std::multiset<std::string>{"A1"} && c.torus == 0;
        case 4:
            return c.factors == std::multiset<std::string>{"A1", "A1"} && c.torus == 0;
        case 5:
            return c.factors == std::multiset<std::string>{"B2"} && c.torus == 0;
        case 6:
            return c.factors == std::multiset<std::string>{"A3"} && c.torus == 0;
        default: {
            std::string t = (m % 2 ? "B" : "D") + std::to_string(m / 2);
            return c.factors == std::multiset<std::string>{t} && c.torus == 0;
        }
    }
}

bool is_su_class(const AlgClass& c, int n) {
    if (n <= 1) return c.factors.empty() && c.torus == 0;
    return c.factors == std::multiset<std::string>{"A" + std::to_string(n - 1)} && c.torus == 0;
}

bool is_sp_class(const AlgClass& c, int n) {
    if (n == 0) return c.factors.empty() && c.torus == 0;
    if (n == 1) return c.factors == std::multiset<std::string>{"A1"} && c.torus == 0;
    if (n == 2) return c.factors == std::multiset<std::string>{"B2"} && c.torus == 0;
    return c.factors == std::multiset<std::string>{"C" + std::to_string(n)} && c.torus == 0;
}

}  // namespace

std::optional<SphereInfo> sphere_recognize(const HomogeneousSpace& input) {
    HomogeneousSpace space = effective_pair(input);
    const CompactAlgebra& k = space.g();
    const CompactAlgebra& h = space.h();
    Big nn = k.dim() - h.dim();
    if (nn <= 0) return std::nullopt;
    int n = static_cast<int>(as_long(nn));
    RealRep chi;
    try {
        chi = realify(h, isotropy_rep(space));
    } catch (...) {
        return std::nullopt;
    }
    AlgClass kc = classify_alg(k), hc = classify_alg(h);
    auto dims = chi.dims_sorted();
    Int s = chi.count_s();

    if (n == 1 && s == 1 && dims == std::vector<Big>{1}) return SphereInfo{1, "circle"};

    // SO(m)/SO(m-1) with the low-rank identifications
    for (int m = 3; m <= n + 1; ++m) {
        if (n != m - 1) continue;
        if (is_so_class(kc, m) && is_so_class(hc, m - 1) && s == 1 && dims == std::vector<Big>{m - 1})
            return SphereInfo{m - 1, "so(m)/so(m-1)"};
    }
    if (kc.factors == std::multiset<std::string>{"A1"} && kc.torus == 0 && h.is_trivial() && n == 3)
        return SphereInfo{3, "sp(1)"};
    for (int m = 2; 2 * m + 1 <= n; ++m) {
        if (n != 2 * m + 1) continue;
        if (is_su_class(kc, m + 1) && is_su_class(hc, m) && s == 2 && dims == std::vector<Big>{1, 2 * m})
            return SphereInfo{2 * m + 1, "su(n+1)/su(n)"};
    }
    for (int m = 1; 2 * m + 1 <= n; ++m) {
        if (n != 2 * m + 1) continue;
        AlgClass kk = kc, hh = hc;
        if (kk.torus != 1 || hh.torus != 1) continue;
        kk.torus = hh.torus = 0;
        if (is_su_class(kk, m + 1) && is_su_class(hh, m) && s == 2 && dims == std::vector<Big>{1, 2 * m})
            return SphereInfo{2 * m + 1, "u(n+1)/u(n)"};
    }
    for (int m = 1; 4 * m + 3 <= n; ++m) {
        if (n != 4 * m + 3) continue;
        if (is_sp_class(kc, m + 1) && is_sp_class(hc, m) && s == 4 &&
            dims == std::vector<Big>{1, 1, 1, 4 * m})
            return SphereInfo{4 * m + 3, "sp(n+1)/sp(n)"};
    }
    for (int m = 1; 4 * m + 3 <= n; ++m) {
        if (n != 4 * m + 3) continue;
        AlgClass kk = kc, hh = hc;
        auto take = [](AlgClass& c) {
            auto it = c.factors.find("A1");
            if (it == c.factors.end()) return false;
            c.factors.erase(it);
            return true;
        };
        AlgClass kk2 = kk, hh2 = hh;
        if (take(kk2) && take(hh2) && is_sp_class(kk2, m + 1) && is_sp_class(hh2, m) && s == 2 &&
            dims == std::vector<Big>{3, 4 * m})
            return SphereInfo{4 * m + 3, "sp(n+1)sp(1)/sp(n)sp(1)"};
    }
    for (int m = 0; 4 * m + 3 <= n; ++m) {
        if (n != 4 * m + 3) continue;
        AlgClass kk = kc, hh = hc;
        if (kk.torus != 1 || hh.torus != 1) continue;
        kk.torus = hh.torus = 0;
        bool dims_ok = (m == 0) ? (s == 2 && dims == std::vector<Big>{1, 2})
                                : (s == 3 && dims == std::vector<Big>{1, 2, 4 * m});
        if (is_sp_class(kk, m + 1) && is_sp_class(hh, m) && dims_ok)
            return SphereInfo{4 * m + 3, "sp(n+1)u(1)/sp(n)u(1)"};
    }
    if (n == 15 && is_so_class(kc, 9) && is_so_class(hc, 7) && s == 2 && dims == std::vector<Big>{7, 8})
        return SphereInfo{15, "spin(9)/spin(7)"};
    if (n == 7 && is_so_class(kc, 7) && hc.factors == std::multiset<std::string>{"G2"} && hc.torus == 0 &&
        s == 1 && dims == std::vector<Big>{7})
        return SphereInfo{7, "spin(7)/g2"};
    if (n == 6 && kc.factors == std::multiset<std::string>{"G2"} && kc.torus == 0 && is_su_class(hc, 3) &&
        s == 1 && dims == std::vector<Big>{6})
        return SphereInfo{6, "g2/su(3)"};
    return std::nullopt;
}

bool is_sii(const HomogeneousSpace& space) {
    if (space.g().dim() == space.h().dim())
        throw std::runtime_error("is_sii: degenerate pair g = h");
    return summand_table(space).s == 1;
}

std::vector<OnishchikRow> onishchik_rows(int max_param) {
    std::vector<OnishchikRow> rows;
    auto alg = [](const std::string& t) { return parse_algebra(t); };
    for (int n = 2; n <= max_param; ++n) {
        std::string so4n = "so" + std::to_string(4 * n);
        std::string so4n1 = "so" + std::to_string(4 * n - 1);
        std::string spn = "sp" + std::to_string(n);
        std::string spn1 = "sp" + std::to_string(n - 1);
        rows.push_back({alg(so4n), alg(so4n1), alg(spn), alg(spn1), "sp(n)<so(4n)"});
        rows.push_back({alg(so4n), alg(so4n1), alg(spn + "+u1"), alg(spn1 + "+u1"), "sp(n)u(1)<so(4n)"});
        rows.push_back({alg(so4n), alg(so4n1), alg(spn + "+sp1"), alg(spn1 + "+sp1"), "sp(n)sp(1)<so(4n)"});
    }
    for (int n = 4; n <= 2 * max_param; ++n)
        rows.push_back({alg("so" + std::to_string(2 * n)), alg("so" + std::to_string(2 * n - 1)),
                        alg("su" + std::to_string(n)), alg("su" + std::to_string(n - 1)), "su(n)<so(2n)"});
    rows.push_back({alg("so16"), alg("so15"), alg("so9"), alg("so7"), "spin(9)<so(16)"});
    rows.push_back({alg("so8"), alg("so7"), alg("so6"), alg("su3"), "so(6)<so(8)"});
    rows.push_back({alg("so8"), alg("so7"), alg("so5"), alg("su2"), "so(5)<so(8)"});
    rows.push_back({alg("so8"), alg("so7"), alg("so2+so5"), alg("so2+su2"), "so(2)so(5)<so(8)"});
    rows.push_back({alg("so7"), alg("g2"), alg("so5"), alg("su2"), "so(5)<so(7)"});
    return rows;
}

std::vector<CompactAlgebra> onishchik_lookup(const CompactAlgebra& l1, const CompactAlgebra& l3) {
    std::vector<CompactAlgebra> out;
    int max_param = 2 + static_cast<int>(l1.dim()) / 4;
    AlgClass c1 = classify_alg(l1), c3 = classify_alg(l3);
    for (const auto& row : onishchik_rows(max_param)) {
        AlgClass r1 = classify_alg(row.l1), r3 = classify_alg(row.l3);
        if (r1.factors == c1.factors && r1.torus == c1.torus && r3.factors == c3.factors &&
            r3.torus == c3.torus)
            out.push_back(row.l2);
    }
    return out;
}

}  // namespace coh1
