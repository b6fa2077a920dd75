#include "coh1/embed.hpp"

#include <algorithm>
#include <sstream>

namespace coh1 {

std::vector<Rat> flatten(const CompactAlgebra& alg, const AlgebraIrrep& w) {
    std::vector<Rat> v;
    v.reserve(alg.rank_total());
    for (int f = 0; f < alg.nfactors(); ++f)
        for (int x : w.wt[f]) v.push_back(x);
    for (int x : w.charge) v.push_back(x);
    return v;
}

AlgebraIrrep unflatten_int(const CompactAlgebra& alg, const std::vector<Rat>& v, const std::string& context) {
    AlgebraIrrep w;
    size_t k = 0;
    for (int f = 0; f < alg.nfactors(); ++f) {
        IVec c(alg.factors[f].rank);
        for (int j = 0; j < alg.factors[f].rank; ++j, ++k) {
            if (!is_integer(v[k]))
                throw std::runtime_error("non-integral restricted weight (" + context + "): coordinate " +
                                         to_string(v[k]));
            c[j] = static_cast<int>(as_long(as_integer(v[k])));
        }
        w.wt.push_back(std::move(c));
    }
    w.charge.resize(alg.torus);
    for (int j = 0; j < alg.torus; ++j, ++k) {
        if (!is_integer(v[k]))
            throw std::runtime_error("non-integral restricted charge (" + context + "): " + to_string(v[k]));
        w.charge[j] = static_cast<int>(as_long(as_integer(v[k])));
    }
    return w;
}

AlgebraIrrep restrict_weight(const RestrictionMap& map, const AlgebraIrrep& w) {
    return unflatten_int(map.target, map.m.apply(flatten(map.source, w)), map.str());
}

namespace {

// Full weight multiset of a source irrep, as flattened integer vectors.
void expand_irrep(const CompactAlgebra& alg, const AlgebraIrrep& v, Int mult,
                  const std::function<void(const IVec&, Int)>& emit) {
    std::vector<std::vector<std::pair<IVec, Int>>> factor_weights;
    for (int f = 0; f < alg.nfactors(); ++f)
        factor_weights.push_back(irrep_character(root_system(alg.factors[f]), v.wt[f]).full());
    IVec cur;
    std::function<void(int, Int)> rec = [&](int f, Int m) {
        if (f == alg.nfactors()) {
            IVec key = cur;
            for (int c : v.charge) key.push_back(c);
            emit(key, m * mult);
            return;
        }
        size_t base = cur.size();
        for (const auto& [w, wm] : factor_weights[f]) {
            cur.resize(base);
            cur.insert(cur.end(), w.begin(), w.end());
            rec(f + 1, m * wm);
        }
        cur.resize(base);
    };
    rec(0, 1);
}

Int total_height(const CompactAlgebra& alg, const AlgebraIrrep& v) {
    Int h = 0;
    for (int f = 0; f < alg.nfactors(); ++f) h += root_system(alg.factors[f]).height(v.wt[f]);
    return h;
}

// compressed (per-factor dominant) product character of an irrep of `alg`
void product_char(const CompactAlgebra& alg, const AlgebraIrrep& v,
                  const std::function<void(const AlgebraIrrep&, Int)>& emit) {
    std::vector<const std::map<IVec, Int>*> doms;
    std::vector<FormalCharacter> hold;
    hold.reserve(alg.nfactors());
    for (int f = 0; f < alg.nfactors(); ++f) {
        hold.push_back(irrep_character(root_system(alg.factors[f]), v.wt[f]));
        doms.push_back(&hold.back().dom);
    }
    AlgebraIrrep cur;
    cur.wt.resize(alg.nfactors());
    cur.charge = v.charge;
    std::function<void(int, Int)> rec = [&](int f, Int m) {
        if (f == alg.nfactors()) {
            emit(cur, m);
            return;
        }
        for (const auto& [w, wm] : *doms[f]) {
            cur.wt[f] = w;
            rec(f + 1, m * wm);
        }
    };
    rec(0, 1);
}

}  // namespace

AlgebraRep branch(const AlgebraRep& rep, const RestrictionMap& map) {
    const CompactAlgebra& src = map.source;
    const CompactAlgebra& dst = map.target;
    const size_t scols = static_cast<size_t>(src.rank_total());
    if (map.m.cols != scols || map.m.rows != static_cast<size_t>(dst.rank_total()))
        throw std::runtime_error("restriction matrix shape mismatch for " + map.str());

    // 1. push the full weight multiset through the matrix; the result is
    // W(target)-invariant, so the dominant entries carry the full information
    std::map<AlgebraIrrep, Int> multiset;
    for (const auto& [v, mult] : rep.parts) {
        expand_irrep(src, v, mult, [&](const IVec& flat, Int m) {
            std::vector<Rat> in(flat.begin(), flat.end());
            auto out = map.m.apply(in);
            AlgebraIrrep w = unflatten_int(dst, out, map.str());
            for (int f = 0; f < dst.nfactors(); ++f)
                if (!root_system(dst.factors[f]).dominant(w.wt[f])) return;
            multiset[w] += m;
        });
    }

    // 2. peel highest weights
    AlgebraRep out;
    while (!multiset.empty()) {
        auto top_it = multiset.begin();
        for (auto it = multiset.begin(); it != multiset.end(); ++it) {
            Int ha = total_height(dst, it->first), hb = total_height(dst, top_it->first);
            if (ha > hb || (ha == hb && it->first < top_it->first)) top_it = it;
        }
        AlgebraIrrep top = top_it->first;
        Int mult = top_it->second;
        if (mult < 0)
            throw std::runtime_error("branching by " + map.str() + " is not a character: multiplicity " +
                                     std::to_string(mult) + " at " + irrep_str(dst, top));
        product_char(dst, top, [&](const AlgebraIrrep& w, Int m) {
            auto it = multiset.find(w);
            Int v = (it == multiset.end() ? 0 : it->second) - mult * m;
            if (v == 0) {
                if (it != multiset.end()) multiset.erase(it);
            } else
                multiset[w] = v;
        });
        out.add(top, mult);
    }
    return out;
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    os << (ok ? "PASS" : "FAIL");
    for (const auto& n : notes) os << "; " << n;
    return os.str();
}

ValidationReport validate_embedding(const RestrictionMap& map) {
    ValidationReport rep;
    RatMat m = map.m;
    if (rank(m) != static_cast<size_t>(map.target.rank_total())) {
        rep.ok = false;
        rep.notes.push_back("matrix rank below target rank");
        return rep;
    }
    AlgebraRep branched;
    try {
        branched = branch(adjoint_rep(map.source), map);
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.notes.push_back(e.what());
        return rep;
    }
    AlgebraRep rem = branched;
    try {
        rem.subtract(adjoint_rep(map.target), "adjoint of " + map.target.str());
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.notes.push_back(e.what());
        return rep;
    }
    Big iso = rem.dim(map.target);
    Big expect = map.source.dim() - map.target.dim();
    if (iso != expect) {
        rep.ok = false;
        rep.notes.push_back("isotropy dimension " + iso.get_str() + " != " + expect.get_str());
        return rep;
    }
    rep.notes.push_back("isotropy dim " + iso.get_str());
    return rep;
}

AlgebraRep isotropy_from_map(const RestrictionMap& map) {
    AlgebraRep rem = branch(adjoint_rep(map.source), map);
    rem.subtract(adjoint_rep(map.target), "adjoint of " + map.target.str() + " under " + map.str());
    return rem;
}

RestrictionMap compose_maps(const RestrictionMap& outer, const RestrictionMap& inner) {
    if (!(outer.target == inner.source))
        throw std::runtime_error("compose: " + outer.str() + " then " + inner.str() + ": algebra mismatch");
    RestrictionMap r;
    r.source = outer.source;
    r.target = inner.target;
    r.m = inner.m * outer.m;
    r.name = inner.name + "*" + outer.name;
    return r;
}

RestrictionMap direct_sum_map(const RestrictionMap& a, const RestrictionMap& b) {
    RestrictionMap r;
    r.source = direct_sum(a.source, b.source);
    r.target = direct_sum(a.target, b.target);
    // flattened coordinates are factor blocks then torus; build index maps
    auto place = [&](const CompactAlgebra& part, const CompactAlgebra& whole, bool second_part,
                     const CompactAlgebra& first_part) {
        // returns offsets of part's flattened coords inside whole's flattened coords
        std::vector<size_t> idx;
        size_t fbase = 0;
        if (second_part)
            for (const auto& f : first_part.factors) fbase += f.rank;
        size_t cur = fbase;
        for (const auto& f : part.factors) {
            for (int j = 0; j < f.rank; ++j) idx.push_back(cur + j);
            cur += f.rank;
        }
        size_t factor_total = 0;
        for (const auto& f : whole.factors) factor_total += f.rank;
        size_t tbase = factor_total + (second_part ? first_part.torus : 0);
        for (int j = 0; j < part.torus; ++j) idx.push_back(tbase + j);
        return idx;
    };
    auto src_a = place(a.source, r.source, false, a.source);
    auto src_b = place(b.source, r.source, true, a.source);
    auto dst_a = place(a.target, r.target, false, a.target);
    auto dst_b = place(b.target, r.target, true, a.target);
    r.m = RatMat(r.target.rank_total(), r.source.rank_total());
    for (size_t i = 0; i < a.m.rows; ++i)
        for (size_t j = 0; j < a.m.cols; ++j) r.m.at(dst_a[i], src_a[j]) = a.m.at(i, j);
    for (size_t i = 0; i < b.m.rows; ++i)
        for (size_t j = 0; j < b.m.cols; ++j) r.m.at(dst_b[i], src_b[j]) = b.m.at(i, j);
    r.name = a.name + "(+)" + b.name;
    return r;
}

RestrictionMap identity_map(const CompactAlgebra& alg) {
    RestrictionMap r;
    r.source = alg;
    r.target = alg;
    r.m = RatMat::identity(alg.rank_total());
    r.name = "id_" + alg.str();
    return r;
}

RestrictionMap diagonal_map(const CompactAlgebra& h, int copies) {
    CompactAlgebra src;
    for (int i = 0; i < copies; ++i) src = direct_sum(src, h);
    std::vector<DiagGroup> groups;
    int nf = h.nfactors(), t = h.torus;
    for (int j = 0; j < nf; ++j) {
        DiagGroup g;
        for (int i = 0; i < copies; ++i) g.members.push_back(i * nf + j);
        groups.push_back(g);
    }
    for (int j = 0; j < t; ++j) {
        DiagGroup g;
        for (int i = 0; i < copies; ++i) g.members.push_back(copies * nf + i * t + j);
        groups.push_back(g);
    }
    return diagonal_collapse(src, groups, "diag" + std::to_string(copies) + "_" + h.str());
}

RestrictionMap diagonal_collapse(const CompactAlgebra& src, const std::vector<DiagGroup>& groups,
                                 const std::string& name) {
    int nf = src.nfactors();
    // component offsets in flattened coords
    std::vector<size_t> comp_off;
    std::vector<int> comp_rank;
    size_t cur = 0;
    for (int f = 0; f < nf; ++f) {
        comp_off.push_back(cur);
        comp_rank.push_back(src.factors[f].rank);
        cur += src.factors[f].rank;
    }
    for (int j = 0; j < src.torus; ++j) {
        comp_off.push_back(cur + j);
        comp_rank.push_back(-1);  // torus marker
    }
    CompactAlgebra dst;
    struct RowJob {
        std::vector<std::pair<size_t, int>> sources;  // (flat col, weight)
    };
    std::vector<RowJob> jobs;
    for (const auto& g : groups) {
        if (g.members.empty()) throw std::runtime_error("diagonal_collapse: empty group");
        bool torus_group = comp_rank[g.members[0]] < 0;
        for (int m : g.members)
            if ((comp_rank[m] < 0) != torus_group ||
                (!torus_group && !(src.factors[m] == src.factors[g.members[0]])))
                throw std::runtime_error("diagonal_collapse: mixed group");
        if (torus_group) {
            dst.torus += 1;
            RowJob job;
            for (size_t k = 0; k < g.members.size(); ++k) {
                int wgt = g.weights.empty() ? 1 : g.weights[k];
                job.sources.push_back({comp_off[g.members[0 + k]], wgt});
            }
            jobs.push_back(job);
        } else {
            const auto& spec = src.factors[g.members[0]];
            dst.factors.push_back(spec);
            for (int r = 0; r < spec.rank; ++r) {
                RowJob job;
                for (int m : g.members) job.sources.push_back({comp_off[m] + r, 1});
                jobs.push_back(job);
            }
        }
    }
    // rows must come out factor-rows-first then torus rows; reorder jobs accordingly
    std::vector<RowJob> factor_jobs, torus_jobs;
    {
        size_t ji = 0;
        for (const auto& g : groups) {
            bool torus_group = comp_rank[g.members[0]] < 0;
            if (torus_group) {
                torus_jobs.push_back(jobs[ji++]);
            } else {
                int rk = src.factors[g.members[0]].rank;
                for (int r = 0; r < rk; ++r) factor_jobs.push_back(jobs[ji++]);
            }
        }
    }
    // also reorder dst factors/torus consistently: factors in group order already;
    // (dst built with factors appended in group order and torus count accumulated)
    RestrictionMap out;
    out.source = src;
    out.target = dst;
    out.m = RatMat(dst.rank_total(), src.rank_total());
    size_t row = 0;
    for (const auto& job : factor_jobs) {
        for (auto [col, wgt] : job.sources) out.m.at(row, col) += wgt;
        ++row;
    }
    for (const auto& job : torus_jobs) {
        for (auto [col, wgt] : job.sources) out.m.at(row, col) += wgt;
        ++row;
    }
    out.name = name.empty() ? "collapse_" + src.str() : name;
    return out;
}

// ---- defining-representation constructors ---------------------------------

namespace {

// e-basis orth columns of the flattened fundamental coordinates of so(n)/sp(n)
// (normalized algebras), so that column k gives the orth coords of the weight
// dual to flattened coordinate k.
std::pair<CompactAlgebra, std::vector<std::vector<Rat>>> so_weight_columns(int n) {
    CompactAlgebra amb = parse_algebra("so" + std::to_string(n));
    int m = n / 2;
    std::vector<std::vector<Rat>> cols;
    auto col = [&](std::initializer_list<Rat> v) { cols.push_back(std::vector<Rat>(v)); };
    switch (n) {
        case 2:
            col({Rat(1)});  // charge pairs with e1
            break;
        case 3:
            col({Rat(1, 2)});  // A1 fw = half the vector weight
            break;
        case 4:
            col({Rat(1, 2), Rat(-1, 2)});
            col({Rat(1, 2), Rat(1, 2)});
            break;
        case 6:
            // A3 nodes relabeled from D3: fw1 = (1,1,-1)/2, fw2 = e1, fw3 = (1,1,1)/2
            col({Rat(1, 2), Rat(1, 2), Rat(-1, 2)});
            col({Rat(1), Rat(0), Rat(0)});
            col({Rat(1, 2), Rat(1, 2), Rat(1, 2)});
            break;
        default: {
            const RootSystem& rs = root_system(n % 2 ? make_spec(Series::B, m) : make_spec(Series::D, m));
            for (int i = 0; i < rs.rank; ++i) cols.push_back(rs.fw_orth[i]);
            break;
        }
    }
    (void)m;
    return {amb, cols};
}

std::pair<CompactAlgebra, std::vector<std::vector<Rat>>> sp_weight_columns(int n) {
    CompactAlgebra amb = parse_algebra("sp" + std::to_string(n));
    std::vector<std::vector<Rat>> cols;
    if (n == 1) {
        cols.push_back({Rat(1)});  // defining weights are +-fw
    } else if (n == 2) {
        // sp(2) normalizes to B2; in symplectic coords f1, f2 (defining rep
        // weights +-f_i) the B2 fundamental weights are e1 = f1+f2 and
        // (e1+e2)/2 = f1
        cols.push_back({Rat(1), Rat(1)});
        cols.push_back({Rat(1), Rat(0)});
    } else {
        const RootSystem& rs = root_system(make_spec(Series::C, n));
        for (int i = 0; i < rs.rank; ++i) cols.push_back(rs.fw_orth[i]);
    }
    return {amb, cols};
}

std::map<IVec, Int> expand_rep_multiset(const CompactAlgebra& h, const AlgebraRep& rep) {
    std::map<IVec, Int> ms;
    for (const auto& [v, m] : rep.parts)
        expand_irrep(h, v, m, [&](const IVec& flat, Int mm) { ms[flat] += mm; });
    return ms;
}

RestrictionMap assemble_from_columns(const CompactAlgebra& h, const CompactAlgebra& amb,
                                     const std::vector<std::vector<Rat>>& cols,
                                     const std::vector<IVec>& mu, const std::string& name) {
    // target rows x source cols; M[r][k] = sum_c mu_c[r] * cols[k][c]
    RestrictionMap out;
    out.source = amb;
    out.target = h;
    out.name = name;
    size_t hr = h.rank_total();
    out.m = RatMat(hr, cols.size());
    for (size_t k = 0; k < cols.size(); ++k)
        for (size_t c = 0; c < cols[k].size(); ++c) {
            if (cols[k][c] == 0) continue;
            for (size_t r = 0; r < hr; ++r)
                if (c < mu.size() && mu[c][r] != 0) out.m.at(r, k) += Rat(mu[c][r]) * cols[k][c];
        }
    return out;
}

std::vector<IVec> pair_weights(std::map<IVec, Int> ms, int& zeros, const std::string& what) {
    std::vector<IVec> mu;
    zeros = 0;
    while (!ms.empty()) {
        auto it = std::prev(ms.end());
        IVec w = it->first;
        if (is_zero(w)) {
            zeros += it->second;
            ms.erase(it);
            continue;
        }
        IVec nw = -w;
        auto nit = ms.find(nw);
        if (nit == ms.end() || nit->second < 1)
            throw std::runtime_error(what + ": weight multiset not symmetric");
        for (Int i = 0; i < it->second; ++i) mu.push_back(w);
        Int c = it->second;
        if (nit->second < c) throw std::runtime_error(what + ": weight multiset not symmetric");
        nit->second -= c;
        if (nit->second == 0) ms.erase(nit);
        ms.erase(w);
    }
    return mu;
}

}  // namespace

RestrictionMap embed_in_so(const CompactAlgebra& h, const AlgebraRep& rep, const std::string& name) {
    auto ms = expand_rep_multiset(h, rep);
    int zeros = 0;
    std::vector<IVec> mu = pair_weights(std::move(ms), zeros, "embed_in_so");
    int n = static_cast<int>(2 * mu.size()) + zeros;
    if (n % 2 == 1 && zeros < 1) throw std::runtime_error("embed_in_so: odd dimension needs a zero weight");
    auto [amb, cols] = so_weight_columns(n);
    return assemble_from_columns(h, amb, cols, mu, name);
}

RestrictionMap embed_in_sp(const CompactAlgebra& h, const AlgebraRep& rep, const std::string& name) {
    auto ms = expand_rep_multiset(h, rep);
    int zeros = 0;
    std::vector<IVec> mu = pair_weights(std::move(ms), zeros, "embed_in_sp");
    if (zeros % 2) throw std::runtime_error("embed_in_sp: odd zero-weight count");
    for (int i = 0; i < zeros / 2; ++i) mu.push_back(IVec(h.rank_total(), 0));
    int n = static_cast<int>(mu.size());
    auto [amb, cols] = sp_weight_columns(n);
    return assemble_from_columns(h, amb, cols, mu, name);
}

RestrictionMap embed_in_su(const CompactAlgebra& h, const AlgebraRep& rep, const std::string& name) {
    auto ms = expand_rep_multiset(h, rep);
    std::vector<IVec> mu;
    for (const auto& [w, m] : ms)
        for (Int i = 0; i < m; ++i) mu.push_back(w);
    std::sort(mu.begin(), mu.end(), std::greater<IVec>());
    int n = static_cast<int>(mu.size());
    if (n < 2) throw std::runtime_error("embed_in_su: dimension too small");
    CompactAlgebra amb = parse_algebra("su" + std::to_string(n));
    size_t hr = h.rank_total();
    IVec s(hr, 0);
    for (const auto& w : mu) s = s + w;
    RestrictionMap out;
    out.source = amb;
    out.target = h;
    out.name = name;
    out.m = RatMat(hr, n - 1);
    // column k (fund weight fw_{k+1}) -> sum_{i<=k} mu_i - ((k+1)/n) * s
    IVec partial(hr, 0);
    for (int k = 0; k + 1 < n; ++k) {
        partial = partial + mu[k];
        for (size_t r = 0; r < hr; ++r) out.m.at(r, k) = Rat(partial[r]) - Rat(k + 1, n) * Rat(s[r]);
    }
    return out;
}

RestrictionMap so_block(int p, int q) {
    CompactAlgebra h = direct_sum(parse_algebra("so" + std::to_string(p)), parse_algebra("so" + std::to_string(q)));
    // vector rep of so(p) on the first slot plus vector of so(q) on the second
    AlgebraRep rep;
    auto add_vec = [&](int n, bool first) {
        CompactAlgebra sub = parse_algebra("so" + std::to_string(n));
        AlgebraRep v = ([&] {
            AlgebraRep r;
            if (n == 1) return r;  // nothing
            if (n == 2) {
                AlgebraIrrep a = trivial_irrep(sub);
                a.charge[0] = 1;
                r.add(a);
                AlgebraIrrep b = trivial_irrep(sub);
                b.charge[0] = -1;
                r.add(b);
                return r;
            }
            AlgebraIrrep a = trivial_irrep(sub);
            if (n == 3)
                a.wt[0] = {2};
            else if (n == 4) {
                a.wt[0] = {1};
                a.wt[1] = {1};
            } else if (n == 5)
                a.wt[0] = {1, 0};
            else if (n == 6)
                a.wt[0] = {0, 1, 0};
            else
                a.wt[0][0] = 1;
            r.add(a);
            return r;
        })();
        // lift to h with the other slot trivial
        CompactAlgebra other = parse_algebra("so" + std::to_string(first ? q : p));
        for (const auto& [w, m] : v.parts) {
            AlgebraIrrep lifted = trivial_irrep(h);
            CompactAlgebra f = sub;
            int fo = first ? 0 : parse_algebra("so" + std::to_string(p)).nfactors();
            int co = first ? 0 : parse_algebra("so" + std::to_string(p)).torus;
            for (int i = 0; i < f.nfactors(); ++i) lifted.wt[fo + i] = w.wt[i];
            for (int i = 0; i < f.torus; ++i) lifted.charge[co + i] = w.charge[i];
            rep.add(lifted, m);
        }
        if (n == 1) {
            // so(1): contributes one zero weight to the ambient vector rep
            rep.add(trivial_irrep(h), 1);
        }
        (void)other;
    };
    add_vec(p, true);
    add_vec(q, false);
    return embed_in_so(h, rep, "so" + std::to_string(p) + "so" + std::to_string(q) + "_in_so" + std::to_string(p + q));
}

RestrictionMap sp_block(int p, int q) {
    CompactAlgebra h = direct_sum(parse_algebra("sp" + std::to_string(p)), parse_algebra("sp" + std::to_string(q)));
    AlgebraRep rep;
    auto defining_wt = [&](int n) -> IVec {
        if (n == 1) return {1};
        if (n == 2) return {0, 1};  // B2-normalized sp(2): defining = spin node
        IVec w(n, 0);
        w[0] = 1;
        return w;
    };
    {
        AlgebraIrrep a = trivial_irrep(h);
        a.wt[0] = defining_wt(p);
        rep.add(a);
        AlgebraIrrep b = trivial_irrep(h);
        b.wt[1] = defining_wt(q);
        rep.add(b);
    }
    return embed_in_sp(h, rep, "sp" + std::to_string(p) + "sp" + std::to_string(q) + "_in_sp" + std::to_string(p + q));
}

RestrictionMap su_block(int p, int q) {
    // S(U(p) x U(q)): su(p)+su(q)+u(1) inside su(p+q); for p or q = 1 the su
    // part degenerates.
    int n = p + q;
    CompactAlgebra h;
    if (p >= 2) h = direct_sum(h, parse_algebra("su" + std::to_string(p)));
    if (q >= 2) h = direct_sum(h, parse_algebra("su" + std::to_string(q)));
    h.torus += 1;
    AlgebraRep rep;
    {
        AlgebraIrrep a = trivial_irrep(h);
        int slot = 0;
        if (p >= 2) {
            a.wt[slot] = IVec(p - 1, 0);
            a.wt[slot][0] = 1;
        }
        a.charge[0] = q;  // det-balanced charge: weights (mu_p ox phi^q)
        rep.add(a);
        AlgebraIrrep b = trivial_irrep(h);
        if (q >= 2) {
            int qslot = (p >= 2) ? 1 : 0;
            b.wt[qslot] = IVec(q - 1, 0);
            b.wt[qslot][0] = 1;
        }
        b.charge[0] = -p;
        rep.add(b);
    }
    auto m = embed_in_su(h, rep, "su" + std::to_string(p) + "su" + std::to_string(q) + "u1_in_su" + std::to_string(n));
    return m;
}

RestrictionMap so_stabilizer_u(int n) {
    // u(n) < so(2n) via [mu_n ox phi]_R
    CompactAlgebra h = parse_algebra("u" + std::to_string(n));
    AlgebraRep rep;
    AlgebraIrrep a = trivial_irrep(h);
    if (n >= 2) a.wt[0][0] = 1;
    a.charge[0] = 1;
    rep.add(a);
    rep.add(dual_irrep(h, a));
    return embed_in_so(h, rep, "u" + std::to_string(n) + "_in_so" + std::to_string(2 * n));
}

RestrictionMap sp_stabilizer_u(int n) {
    CompactAlgebra h = parse_algebra("u" + std::to_string(n));
    AlgebraRep rep;
    AlgebraIrrep a = trivial_irrep(h);
    if (n >= 2) a.wt[0][0] = 1;
    a.charge[0] = 1;
    rep.add(a);
    rep.add(dual_irrep(h, a));
    return embed_in_sp(h, rep, "u" + std::to_string(n) + "_in_sp" + std::to_string(n));
}

// ---- regular subalgebras ---------------------------------------------------

std::vector<IVec> orthogonal_subsystem(const RootSystem& g, const std::vector<IVec>& roots_sc) {
    std::vector<IVec> out;
    for (size_t a = 0; a < g.num_pos_roots(); ++a) {
        bool ortho = true;
        for (const IVec& b : roots_sc) {
            // (alpha, beta) via fund coords pairing row
            Rat ip = 0;
            for (int i = 0; i < g.rank; ++i) ip += g.pos_pair[a][i] * ([&] {
                                  // fund coords of b
                                  int v = 0;
                                  for (int k = 0; k < g.rank; ++k) v += b[k] * g.cartan[k][i];
                                  return v;
                              })();
            if (ip != 0) {
                ortho = false;
                break;
            }
        }
        if (ortho) out.push_back(g.pos_sc[a]);
    }
    return out;
}

namespace {

IVec fund_coords(const RootSystem& g, const IVec& sc) {
    IVec fc(g.rank, 0);
    for (int j = 0; j < g.rank; ++j) {
        int v = 0;
        for (int i = 0; i < g.rank; ++i) v += sc[i] * g.cartan[i][j];
        fc[j] = v;
    }
    return fc;
}

Rat root_norm2(const RootSystem& g, const IVec& sc) {
    Rat n2 = 0;
    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j)
            if (sc[i] && sc[j]) n2 += Rat(sc[i] * sc[j]) * g.cartan[i][j] * g.d[j];
    return n2;
}

int pairing(const RootSystem& g, const IVec& a_sc, const IVec& b_sc) {
    // <a, b^vee> = 2(a,b)/(b,b); (a,b) = sum_i a_sc[i] * d_i * <b, alpha_i^vee>
    Rat ip = 0;
    IVec bfc = fund_coords(g, b_sc);
    for (int i = 0; i < g.rank; ++i)
        if (a_sc[i]) ip += Rat(a_sc[i]) * g.d[i] * bfc[i];
    Rat n2 = root_norm2(g, b_sc);
    Rat r = 2 * ip / n2;
    return static_cast<int>(as_long(as_integer(r)));
}

}  // namespace

std::vector<std::pair<RootSystemSpec, std::vector<IVec>>> subsystem_simples(
    const RootSystem& g, const std::vector<IVec>& roots_sc) {
    // keep positive ones, find indecomposables
    std::set<IVec> pos(roots_sc.begin(), roots_sc.end());
    std::vector<IVec> simples;
    for (const IVec& b : pos) {
        bool decomposable = false;
        for (const IVec& c : pos) {
            if (c == b) continue;
            IVec d = b - c;
            bool neg = false;
            for (int x : d)
                if (x < 0) neg = true;
            if (!neg && pos.count(d)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simples.push_back(b);
    }
    // split into components
    size_t n = simples.size();
    std::vector<bool> used(n, false);
    std::vector<std::pair<RootSystemSpec, std::vector<IVec>>> out;
    for (size_t s = 0; s < n; ++s) {
        if (used[s]) continue;
        std::vector<size_t> comp{s};
        used[s] = true;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (size_t t = 0; t < n; ++t)
                if (!used[t] && pairing(g, simples[comp[qi]], simples[t]) != 0) {
                    used[t] = true;
                    comp.push_back(t);
                }
        // identify the component type: try candidate specs and node orders
        size_t r = comp.size();
        std::vector<IVec> croots;
        for (size_t i : comp) croots.push_back(simples[i]);
        std::vector<std::vector<int>> P(r, std::vector<int>(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) P[i][j] = pairing(g, croots[i], croots[j]);
        std::vector<RootSystemSpec> candidates;
        auto push_cand = [&](Series se, int rk) {
            try {
                candidates.push_back(make_spec(se, rk));
            } catch (...) {
            }
        };
        push_cand(Series::A, static_cast<int>(r));
        push_cand(Series::B, static_cast<int>(r));
        push_cand(Series::C, static_cast<int>(r));
        push_cand(Series::D, static_cast<int>(r));
        push_cand(Series::E, static_cast<int>(r));
        push_cand(Series::F, static_cast<int>(r));
        push_cand(Series::G, static_cast<int>(r));
        // dedup specs (C2 normalizes to B2 etc.)
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                     [](auto& a, auto& b) { return a == b; }),
                         candidates.end());
        bool found = false;
        for (const auto& cand : candidates) {
            const RootSystem& crs = root_system(cand);
            if (crs.rank != static_cast<int>(r)) continue;
            std::vector<int> perm(r);
            for (size_t i = 0; i < r; ++i) perm[i] = static_cast<int>(i);
            std::sort(perm.begin(), perm.end());
            do {
                bool okp = true;
                for (size_t i = 0; i < r && okp; ++i)
                    for (size_t j = 0; j < r && okp; ++j)
                        if (P[perm[i]][perm[j]] != crs.cartan[i][j]) okp = false;
                if (okp) {
                    std::vector<IVec> ordered;
                    for (size_t i = 0; i < r; ++i) ordered.push_back(croots[perm[i]]);
                    out.push_back({cand, ordered});
                    found = true;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (found) break;
        }
        if (!found) throw std::runtime_error("subsystem_simples: unrecognized component");
    }
    // deterministic component order: by (spec, first root)
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

std::vector<Rat> primitive_row(std::vector<Rat> row) {
    Big l = 1;
    for (const Rat& x : row) {
        Big den = x.get_den();
        Big g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    Big g = 0;
    for (Rat& x : row) {
        x *= Rat(l);
        Big num = as_integer(x);
        Big a = abs(num);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    if (g == 0) throw std::runtime_error("primitive_row: zero row");
    int sign = 0;
    for (Rat& x : row) {
        x /= Rat(g);
        if (sign == 0 && x != 0) sign = x > 0 ? 1 : -1;
    }
    if (sign < 0)
        for (Rat& x : row) x = -x;
    return row;
}

std::vector<Rat> torus_row_orthogonal(const RootSystem& g, const std::vector<IVec>& roots_sc) {
    RatMat m(roots_sc.size(), g.rank);
    for (size_t i = 0; i < roots_sc.size(); ++i) {
        IVec fc = fund_coords(g, roots_sc[i]);
        for (int j = 0; j < g.rank; ++j) m.at(i, j) = fc[j];
    }
    RatMat ns = nullspace(m);
    if (ns.rows != 1) throw std::runtime_error("torus_row_orthogonal: complement dimension != 1");
    std::vector<Rat> row(g.rank);
    for (int j = 0; j < g.rank; ++j) row[j] = ns.at(0, j);
    return primitive_row(std::move(row));
}

RestrictionMap to_cartan(const CompactAlgebra& alg) {
    RestrictionMap r;
    r.source = alg;
    r.target = CompactAlgebra{{}, alg.rank_total()};
    r.m = RatMat::identity(alg.rank_total());
    r.name = "cartan_" + alg.str();
    return r;
}

RestrictionMap project_target(const RestrictionMap& m, const std::vector<int>& keep_factors,
                              const std::vector<int>& keep_torus) {
    const CompactAlgebra& t = m.target;
    CompactAlgebra t2;
    std::vector<size_t> rows;
    std::vector<size_t> factor_base;
    size_t cur = 0;
    for (int f = 0; f < t.nfactors(); ++f) {
        factor_base.push_back(cur);
        cur += t.factors[f].rank;
    }
    for (int f : keep_factors) {
        t2.factors.push_back(t.factors[f]);
        for (int j = 0; j < t.factors[f].rank; ++j) rows.push_back(factor_base[f] + j);
    }
    for (int j : keep_torus) {
        t2.torus += 1;
        rows.push_back(cur + j);
    }
    RestrictionMap r;
    r.source = m.source;
    r.target = t2;
    r.name = m.name + "_proj";
    r.m = RatMat(rows.size(), m.m.cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t c = 0; c < m.m.cols; ++c) r.m.at(i, c) = m.m.at(rows[i], c);
    return r;
}

RestrictionMap torus_subgroup(const CompactAlgebra& src, const std::vector<std::vector<Rat>>& rows,
                              const std::string& name) {
    RestrictionMap r;
    r.source = src;
    r.target = CompactAlgebra{{}, static_cast<int>(rows.size())};
    r.name = name.empty() ? "torus_in_" + src.str() : name;
    r.m = RatMat(rows.size(), src.rank_total());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) r.m.at(i, j) = rows[i][j];
    return r;
}

RestrictionMap regular_map(RootSystemSpec gspec, const std::vector<std::vector<IVec>>& factor_simples,
                           int torus_rank, const std::vector<std::vector<Rat>>& torus_rows,
                           const std::string& name) {
    const RootSystem& g = root_system(gspec);
    CompactAlgebra src;
    src.factors.push_back(g.spec);
    CompactAlgebra dst;
    std::vector<std::vector<Rat>> rows;
    std::vector<IVec> all_roots;
    for (const auto& simples : factor_simples) {
        // identify this factor's type from its pairing matrix (order as given)
        size_t r = simples.size();
        std::vector<std::vector<int>> P(r, std::vector<int>(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) P[i][j] = pairing(g, simples[i], simples[j]);
        RootSystemSpec found{Series::A, 1};
        bool ok = false;
        for (char se : std::string("ABCDEFG")) {
            RootSystemSpec cand;
            try {
                cand = make_spec(static_cast<Series>(se), static_cast<int>(r));
            } catch (...) {
                continue;
            }
            const RootSystem& crs = root_system(cand);
            if (crs.rank != static_cast<int>(r)) continue;
            bool match = true;
            for (size_t i = 0; i < r && match; ++i)
                for (size_t j = 0; j < r && match; ++j)
                    if (P[i][j] != crs.cartan[i][j]) match = false;
            if (match) {
                found = cand;
                ok = true;
                break;
            }
        }
        if (!ok) throw std::runtime_error("regular_map: simple-root order does not match any series");
        dst.factors.push_back(found);
        for (const IVec& b : simples) {
            // row over g's fundamental coords: <fw_i, b^vee> = coroot coords of b
            Rat n2 = root_norm2(g, b);
            std::vector<Rat> row(g.rank);
            for (int i = 0; i < g.rank; ++i) row[i] = Rat(b[i]) * g.d[i] * 2 / n2;
            rows.push_back(row);
            all_roots.push_back(b);
        }
    }
    dst.torus = torus_rank;
    std::vector<std::vector<Rat>> trows = torus_rows;
    if (torus_rank > 0 && trows.empty()) {
        if (torus_rank != 1)
            throw std::runtime_error("regular_map: explicit torus rows required for torus rank > 1");
        trows.push_back(torus_row_orthogonal(g, all_roots));
    }
    if (static_cast<int>(trows.size()) != torus_rank)
        throw std::runtime_error("regular_map: torus row count mismatch");
    for (const auto& row : trows) rows.push_back(row);

    RestrictionMap out;
    out.source = src;
    out.target = dst;
    out.name = name;
    out.m = RatMat(rows.size(), g.rank);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < g.rank; ++j) out.m.at(i, j) = rows[i][j];
    return out;
}

}  // namespace coh1
