#include "coh1/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace coh1 {

RootSystemSpec make_spec(Series s, int rank) {
    auto fail = [&] {
        throw std::runtime_error("invalid rank for series " + std::string(1, static_cast<char>(s)) +
                                 std::to_string(rank));
    };
    switch (s) {
        case Series::A:
            if (rank < 1) fail();
            break;
        case Series::B:
            if (rank < 2) fail();
            break;
        case Series::C:
            if (rank < 1) fail();
            if (rank == 1) return {Series::A, 1};
            if (rank == 2) return {Series::B, 2};
            break;
        case Series::D:
            if (rank < 3) fail();
            if (rank == 3) return {Series::A, 3};
            break;
        case Series::E:
            if (rank < 6 || rank > 8) fail();
            break;
        case Series::F:
            if (rank != 4) fail();
            break;
        case Series::G:
            if (rank != 2) fail();
            break;
    }
    return {s, rank};
}

RootSystemSpec parse_spec(const std::string& token) {
    if (token.size() < 2) throw std::runtime_error("bad root system token: " + token);
    char c = static_cast<char>(std::toupper(token[0]));
    if (std::string("ABCDEFG").find(c) == std::string::npos)
        throw std::runtime_error("bad series: " + token);
    int rank = std::stoi(token.substr(1));
    return make_spec(static_cast<Series>(c), rank);
}

namespace {

std::vector<std::vector<Rat>> simple_roots_orth(RootSystemSpec sp, int& odim) {
    int n = sp.rank;
    std::vector<std::vector<Rat>> s;
    auto e = [&](int i) {
        std::vector<Rat> v(odim, Rat(0));
        v[i] = 1;
        return v;
    };
    switch (sp.series) {
        case Series::A: {
            odim = n + 1;
            for (int i = 0; i < n; ++i) {
                auto v = e(i);
                v[i + 1] = -1;
                s.push_back(v);
            }
            break;
        }
        case Series::B: {
            odim = n;
            for (int i = 0; i + 1 < n; ++i) {
                auto v = e(i);
                v[i + 1] = -1;
                s.push_back(v);
            }
            s.push_back(e(n - 1));
            break;
        }
        case Series::C: {
            odim = n;
            for (int i = 0; i + 1 < n; ++i) {
                auto v = e(i);
                v[i + 1] = -1;
                s.push_back(v);
            }
            auto v = e(n - 1);
            v[n - 1] = 2;
            s.push_back(v);
            break;
        }
        case Series::D: {
            odim = n;
            for (int i = 0; i + 1 < n; ++i) {
                auto v = e(i);
                v[i + 1] = -1;
                s.push_back(v);
            }
            auto v = e(n - 2);
            v[n - 1] = 1;
            s.push_back(v);
            break;
        }
        case Series::G: {
            odim = 3;
            auto a1 = e(0);
            a1[1] = -1;
            auto a2 = e(0);
            a2[0] = -2;
            a2[1] = 1;
            a2[2] = 1;
            s = {a1, a2};
            break;
        }
        case Series::F: {
            odim = 4;
            std::vector<Rat> a1 = {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)};
            std::vector<Rat> a2 = {Rat(0), Rat(0), Rat(0), Rat(1)};
            std::vector<Rat> a3 = {Rat(0), Rat(0), Rat(1), Rat(-1)};
            std::vector<Rat> a4 = {Rat(0), Rat(1), Rat(-1), Rat(0)};
            s = {a1, a2, a3, a4};
            break;
        }
        case Series::E: {
            odim = 8;
            std::vector<Rat> a1(8, Rat(-1, 2));
            a1[0] = Rat(1, 2);
            a1[7] = Rat(1, 2);
            std::vector<Rat> a2(8, Rat(0));
            a2[0] = 1;
            a2[1] = 1;
            s = {a1, a2};
            for (int i = 1; i + 1 <= n - 1; ++i) {
                std::vector<Rat> v(8, Rat(0));
                v[i] = -1;
                v[i - 1] = 0;
                // alpha_{i+2} = e_i - e_{i-1}
                v[i] = 1;
                v[i - 1] = -1;
                s.push_back(v);
            }
            break;
        }
    }
    return s;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Big weyl_group_order(RootSystemSpec sp) {
    auto fact = [](int n) {
        Big f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    Big two = 2;
    int n = sp.rank;
    switch (sp.series) {
        case Series::A:
            return fact(n + 1);
        case Series::B:
        case Series::C: {
            Big p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
            return p * fact(n);
        }
        case Series::D: {
            Big p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, n - 1);
            return p * fact(n);
        }
        case Series::G:
            return 12;
        case Series::F:
            return 1152;
        case Series::E:
            if (n == 6) return 51840;
            if (n == 7) return 2903040;
            return Big("696729600");
    }
    return 1;
}

std::unique_ptr<RootSystem> build(RootSystemSpec requested) {
    // make_spec already normalized C1 -> A1, C2 -> B2 (nodes reversed) and
    // D3 -> A3 (node order 2,1,3); data using sp(2)/so(6) weights is written
    // in the normalized labels.
    auto rs = std::make_unique<RootSystem>();
    rs->requested = requested;
    rs->spec = requested;
    rs->relabel.resize(requested.rank);
    for (int i = 0; i < requested.rank; ++i) rs->relabel[i] = i;
    int n = rs->spec.rank;
    rs->rank = n;

    rs->simple_orth = simple_roots_orth(rs->spec, rs->orth_dim);

    // Cartan matrix and root lengths.
    rs->cartan.assign(n, IVec(n, 0));
    rs->d.resize(n);
    for (int i = 0; i < n; ++i) rs->d[i] = dot(rs->simple_orth[i], rs->simple_orth[i]) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = dot(rs->simple_orth[i], rs->simple_orth[j]) / rs->d[j];
            rs->cartan[i][j] = static_cast<int>(as_long(as_integer(v)));
        }

    // Positive roots by closure under root strings, simple-root coordinates.
    std::vector<IVec> pos;
    std::map<IVec, int> index;
    for (int i = 0; i < n; ++i) {
        IVec r(n, 0);
        r[i] = 1;
        index[r] = static_cast<int>(pos.size());
        pos.push_back(r);
    }
    // process by increasing height: queue order suffices because adding alpha_i
    // raises height by one
    std::deque<IVec> queue(pos.begin(), pos.end());
    while (!queue.empty()) {
        IVec r = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            // p = largest k with r - k alpha_i a root
            IVec t = r;
            int p = 0;
            while (true) {
                t[i] -= 1;
                if (t == IVec(n, 0)) break;
                if (!index.count(t)) break;
                ++p;
            }
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += r[j] * rs->cartan[j][i];
            if (p - pairing > 0) {
                IVec nr = r;
                nr[i] += 1;
                if (!index.count(nr)) {
                    index[nr] = static_cast<int>(pos.size());
                    pos.push_back(nr);
                    queue.push_back(nr);
                }
            }
        }
    }
    // sort by (height, lex) for deterministic extraspecial pairs later
    std::sort(pos.begin(), pos.end(), [&](const IVec& a, const IVec& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs->pos_sc = pos;
    for (size_t k = 0; k < pos.size(); ++k) rs->pos_index_sc[pos[k]] = static_cast<int>(k);

    // fundamental coords, norms, coroots, pairing rows
    for (const IVec& r : pos) {
        IVec fc(n, 0);
        for (int j = 0; j < n; ++j) {
            int v = 0;
            for (int i = 0; i < n; ++i) v += r[i] * rs->cartan[i][j];
            fc[j] = v;
        }
        rs->pos_fc.push_back(fc);
        Rat n2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[i] && r[j]) n2 += Rat(r[i] * r[j]) * rs->cartan[i][j] * rs->d[j];
        rs->pos_norm2.push_back(n2);
        Rat da = n2 / 2;
        IVec cr(n, 0);
        for (int i = 0; i < n; ++i) {
            Rat c = Rat(r[i]) * rs->d[i] / da;
            cr[i] = static_cast<int>(as_long(as_integer(c)));
        }
        rs->pos_coroot.push_back(cr);
        std::vector<Rat> pr(n);
        for (int i = 0; i < n; ++i) pr[i] = Rat(r[i]) * rs->d[i];
        rs->pos_pair.push_back(pr);
    }

    // gram[i][j] = (fw_i, fw_j) = (A^{-1})[i][j] d_j
    RatMat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A.at(i, j) = rs->cartan[i][j];
    RatMat Ainv = inverse(A);
    rs->cartan_inv = Ainv;
    rs->gram = RatMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs->gram.at(i, j) = Ainv.at(i, j) * rs->d[j];

    // fundamental weights in orth coords: fw_i = sum_k Ainv[i][k] alpha_k
    rs->fw_orth.assign(n, std::vector<Rat>(rs->orth_dim, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (Ainv.at(i, k) != 0)
                for (int c = 0; c < rs->orth_dim; ++c)
                    rs->fw_orth[i][c] += Ainv.at(i, k) * rs->simple_orth[k][c];

    rs->rho.assign(n, 1);
    // <fw_i, alpha^vee> = coroot coordinate i of alpha
    rs->two_rho_vee.assign(n, 0);
    for (size_t a = 0; a < pos.size(); ++a)
        for (int i = 0; i < n; ++i) rs->two_rho_vee[i] += rs->pos_coroot[a][i];

    rs->weyl_order = weyl_group_order(rs->spec);
    return rs;
}

}  // namespace

IVec RootSystem::reflect(const IVec& w, int j) const {
    IVec r = w;
    int c = w[j];
    if (c == 0) return r;
    for (int k = 0; k < rank; ++k) r[k] -= c * cartan[j][k];
    return r;
}

Rat RootSystem::inner(const IVec& a, const IVec& b) const {
    Rat r = 0;
    for (int i = 0; i < rank; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < rank; ++j)
            if (b[j]) r += Rat(a[i]) * Rat(b[j]) * gram.at(i, j);
    }
    return r;
}

Int RootSystem::height(const IVec& w) const {
    Int h = 0;
    for (int i = 0; i < rank; ++i) h += static_cast<Int>(w[i]) * two_rho_vee[i];
    return h;
}

bool RootSystem::dominant(const IVec& w) const {
    for (int x : w)
        if (x < 0) return false;
    return true;
}

IVec RootSystem::dominant_rep(const IVec& w) const {
    IVec v = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < rank; ++j)
            if (v[j] < 0) {
                v = reflect(v, j);
                moved = true;
            }
    }
    return v;
}

std::pair<IVec, int> RootSystem::to_dominant_with_parity(const IVec& w) const {
    IVec v = w;
    for (int i = 0; i < rank; ++i) v[i] += 1;  // w + rho
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < rank; ++j) {
            if (v[j] < 0) {
                v = reflect(v, j);
                sign = -sign;
                moved = true;
            }
        }
    }
    for (int j = 0; j < rank; ++j)
        if (v[j] == 0) sign = 0;
    return {dominant_rep(w), sign};
}

std::vector<IVec> RootSystem::weyl_orbit(const IVec& w) const {
    if (!dominant(w)) throw std::runtime_error("weyl_orbit: weight not dominant");
    std::vector<IVec> orbit;
    std::unordered_map<IVec, bool, IVecHash> seen;
    std::deque<IVec> q;
    q.push_back(w);
    seen[w] = true;
    while (!q.empty()) {
        IVec v = q.front();
        q.pop_front();
        orbit.push_back(v);
        for (int j = 0; j < rank; ++j) {
            if (v[j] <= 0) continue;  // walk downward only: generates the full orbit
            IVec u = reflect(v, j);
            if (!seen.count(u)) {
                seen[u] = true;
                q.push_back(u);
            }
        }
    }
    return orbit;
}

Big RootSystem::orbit_size(const IVec& w) const {
    // |W| / |stabilizer|; the stabilizer of a dominant weight is the parabolic
    // Weyl group of its zero coordinates.
    std::vector<int> zero_nodes;
    for (int i = 0; i < rank; ++i)
        if (w[i] == 0) zero_nodes.push_back(i);
    if (zero_nodes.empty()) return weyl_order;
    if (static_cast<int>(zero_nodes.size()) == rank) return 1;
    // order of the reflection subgroup generated by the zero nodes: product over
    // connected components of the induced subdiagram
    Big stab = 1;
    std::vector<bool> used(zero_nodes.size(), false);
    for (size_t s = 0; s < zero_nodes.size(); ++s) {
        if (used[s]) continue;
        std::vector<int> comp;
        std::deque<size_t> q{s};
        used[s] = true;
        while (!q.empty()) {
            size_t t = q.front();
            q.pop_front();
            comp.push_back(zero_nodes[t]);
            for (size_t u = 0; u < zero_nodes.size(); ++u)
                if (!used[u] && cartan[zero_nodes[t]][zero_nodes[u]] != 0) {
                    used[u] = true;
                    q.push_back(u);
                }
        }
        // identify the component type by counting its positive roots
        std::sort(comp.begin(), comp.end());
        std::set<IVec> sub;
        std::deque<IVec> qq;
        for (int i : comp) {
            IVec r(rank, 0);
            r[i] = 1;
            sub.insert(r);
            qq.push_back(r);
        }
        while (!qq.empty()) {
            IVec r = qq.front();
            qq.pop_front();
            for (int i : comp) {
                IVec nr = r;
                nr[i] += 1;
                if (pos_index_sc.count(nr) && !sub.count(nr)) {
                    sub.insert(nr);
                    qq.push_back(nr);
                }
            }
        }
        // |W_comp| = (number of positive roots)! ... no; use the reflection-group
        // order formula via the component's own root count and rank instead:
        // for our needs (orbit sizes), compute by orbit of rho restricted --
        // simpler: recurse using the standard orders.
        // Determine type by rank + root count.
        size_t nroots = sub.size();
        size_t r = comp.size();
        Big order = 1;
        auto fact = [](size_t m) {
            Big f = 1;
            for (size_t i = 2; i <= m; ++i) f *= static_cast<unsigned long>(i);
            return f;
        };
        if (nroots == r * (r + 1) / 2)  // A_r
            order = fact(r + 1);
        else if (nroots == r * r) {  // B_r / C_r
            Big p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(r));
            order = p * fact(r);
        } else if (nroots == r * (r - 1)) {  // D_r
            Big p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(r - 1));
            order = p * fact(r);
        } else if (r == 2 && nroots == 6)
            order = 12;
        else if (r == 4 && nroots == 24)
            order = 1152;
        else if (r == 6 && nroots == 36)
            order = 51840;
        else if (r == 7 && nroots == 63)
            order = 2903040;
        else if (r == 8 && nroots == 120)
            order = Big("696729600");
        else
            throw std::runtime_error("orbit_size: unrecognized stabilizer component");
        stab *= order;
    }
    Big q = weyl_order / stab;
    return q;
}

Big RootSystem::weyl_dim(const IVec& w) const {
    if (!dominant(w)) throw std::runtime_error("weyl_dim: weight not dominant");
    Rat num = 1, den = 1;
    for (size_t a = 0; a < pos_sc.size(); ++a) {
        Rat lam = 0, r0 = 0;
        for (int i = 0; i < rank; ++i) {
            lam += pos_pair[a][i] * (w[i] + 1);
            r0 += pos_pair[a][i];
        }
        num *= lam;
        den *= r0;
    }
    Rat q = num / den;
    return as_integer(q);
}

IVec RootSystem::dual_weight(const IVec& w) const { return dominant_rep(-w); }

IVec RootSystem::adjoint_weight() const {
    // highest root = last positive root in (height, lex) order
    return pos_fc.back();
}

IVec RootSystem::simple_coords(const IVec& fund) const {
    // fund[j] = sum_i sc[i] cartan[i][j]  =>  sc = fund * cartan_inv
    IVec sc(rank, 0);
    for (int i = 0; i < rank; ++i) {
        Rat v = 0;
        for (int j = 0; j < rank; ++j)
            if (fund[j]) v += Rat(fund[j]) * cartan_inv.at(j, i);
        sc[i] = static_cast<int>(as_long(as_integer(v)));
    }
    return sc;
}

std::vector<Rat> RootSystem::to_orth(const IVec& w) const {
    std::vector<Rat> v(orth_dim, Rat(0));
    for (int i = 0; i < rank; ++i)
        if (w[i])
            for (int c = 0; c < orth_dim; ++c) v[c] += Rat(w[i]) * fw_orth[i][c];
    return v;
}

const RootSystem& root_system(RootSystemSpec spec) {
    static std::mutex mu;
    static std::map<RootSystemSpec, std::unique_ptr<RootSystem>> registry;
    std::lock_guard lock(mu);
    RootSystemSpec norm = make_spec(spec.series, spec.rank);
    auto it = registry.find(norm);
    if (it != registry.end()) return *it->second;
    auto rs = build(norm);
    const RootSystem& ref = *rs;
    registry.emplace(norm, std::move(rs));
    return ref;
}

}  // namespace coh1
